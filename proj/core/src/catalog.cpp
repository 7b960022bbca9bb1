#include "planarize/catalog.hpp"

#include <algorithm>

#include "planarize/parser.hpp"
#include "planarize/planarity.hpp"

namespace planarize {

namespace {

struct Row {
    const char* label;
    const char* text;
    ExpectedInvariants expected;
};

// degree, surface degree, equation, |B|, k, co-trivial, dual degree
const Row kRows[] = {
    {"Q1", "[x*y : x*z : y*z : x^2+y^2+z^2]", {2, 4, std::nullopt, 0, 1, false, 3}},
    {"Q2", "[x*y : x*z : y*z : x^2-y^2+z^2]", {2, 4, std::nullopt, 0, 1, false, 3}},
    {"Q3", "[x^2+y^2 : y^2+z^2 : x*z : y*z]", {2, 4, std::nullopt, 0, 1, false, 3}},
    {"Q4", "[x^2-y^2 : x*y : y*z : z^2]", {2, 4, std::nullopt, 0, 1, false, 3}},
    {"Q5", "[x*z-y*z : x^2 : y^2 : z^2]", {2, 4, std::nullopt, 0, 1, false, 3}},
    {"Q6", "[x^2 : x*z-y^2 : y*z : z^2]", {2, 4, std::nullopt, 0, 1, false, 3}},
    {"Q7", "[y^2-z^2 : x*y : x*z : y*z]", {2, 3, std::nullopt, 1, 1, false, 2}},
    {"Q8", "[x*y : x*z : y^2 : z^2]", {2, 3, std::nullopt, 1, 1, false, 2}},
    {"Q9", "[x*y : x*z-y^2 : y*z : z^2]", {2, 3, std::nullopt, 1, 1, false, 2}},
    // The dual is [l0^2 : 2 l0 l1 : l1^2 : -l2^2], again quadratic.
    {"Q10", "[x^2 : x*y : y^2 : z^2]", {2, 2, std::nullopt, 0, 2, false, 2}},
    {"C1", "[z*(x^2+y^2) : y*(x^2+z^2) : x*(y^2+z^2) : x*y*z]",
     {3, 3, "4t^3 - t(u^2 + v^2 + w^2) + uvw", 3, 2, false, 2}},
    {"C2", "[z*(x^2-y^2) : y*(x^2+z^2) : x*(y^2-z^2) : x*y*z]",
     {3, 3, "4t^3 + t(u^2 - v^2 + w^2) + uvw", 3, 2, false, 2}},
    {"C3", "[x^2*z : z*(x^2+y^2) : x*(x^2+y^2-z^2) : y*(x^2+y^2+z^2)]",
     {3, 3, "4vu^2 + u(t^2 - 4v^2 + w^2) - vw^2", 3, 2, false, 2}},
    {"C4", "[x^2*y : x*(x^2-y^2) : z*(x^2+y^2) : y*z^2]", {3, 3, "4tu^2 - uw^2 + tv^2", 3, 2, false, 2}},
    {"C5", "[x^2*(x+y) : y^2*(x+y) : z^2*(x-y) : x*y*z]", {3, 3, "u(vw - t^2) + vt^2", 3, 2, false, 2}},
    {"C6", "[x^3 : x*y^2 : 2*x*y*z-y^3 : z*(x*z-y^2)]", {3, 3, "u(4tv - w^2) + v^3", 3, 2, false, 2}},
    {"Phi1a", "[x^2 : x*y : x*z : y*z]", {2, 2, std::nullopt, 2, 1, true, 1}},
    {"Phi1b", "[x^2 : x*y : x*z : y^2+z^2]", {2, 2, std::nullopt, 2, 1, true, 1}},
    {"Phi2", "[x^2 : x*y : y^2 : x*z]", {2, 2, std::nullopt, 2, 1, true, 1}},
};

std::vector<NormalForm> build() {
    std::vector<NormalForm> out;
    for (const auto& r : kRows) out.push_back({r.label, r.text, parse_rational_map(r.text), r.expected});
    return out;
}

}  // namespace

const std::vector<NormalForm>& catalog() {
    static const std::vector<NormalForm> forms = build();
    return forms;
}

const NormalForm* find_normal_form(std::string_view label) {
    for (const auto& f : catalog())
        if (f.label == label) return &f;
    return nullptr;
}

bool InvariantSignature::same_invariants(const InvariantSignature& o) const {
    return map_degree == o.map_degree && trivial == o.trivial && cotrivial == o.cotrivial &&
           base_multiplicities == o.base_multiplicities && base_weight == o.base_weight &&
           surface_degree == o.surface_degree && topological_degree == o.topological_degree &&
           dual_degree == o.dual_degree && base_field_discs == o.base_field_discs;
}

InvariantSignature invariant_signature(const RationalMap& map, std::uint64_t seed) {
    if (!is_planarization(map, seed)) throw MathError(ErrorKind::NotAPlanarization, map.str());
    InvariantSignature s;
    s.map_degree = map.degree();
    s.trivial = is_trivial(map);

    const BaseLocus base = base_locus(map, seed);
    s.complete = base.complete;
    s.base_weight = base.weight;
    for (const auto& b : base.points) {
        s.base_multiplicities.push_back(b.multiplicity);
        s.base_field_discs.push_back(b.point.field_disc());
    }
    std::sort(s.base_multiplicities.begin(), s.base_multiplicities.end());
    std::sort(s.base_field_discs.begin(), s.base_field_discs.end());

    try {
        const SurfaceModel surface = implicitize(map, 4, seed);
        if (surface.image_dimension == 2) s.surface_degree = surface.degree;
    } catch (const MathError& e) {
        if (e.kind() != ErrorKind::DegreeBoundExceeded) throw;
        s.complete = false;
    }
    try {
        const TopologicalDegree k = topological_degree(map, seed);
        s.topological_degree = static_cast<int>(k.sampled);
        s.complete = s.complete && k.samples_complete;
    } catch (const MathError& e) {
        if (e.kind() != ErrorKind::NotASurfaceImage) throw;
    }
    if (s.trivial) {
        s.cotrivial = true;
        return s;
    }
    try {
        const DualMap dual = dual_map(map, seed);
        s.dual_degree = dual.degree;
        s.cotrivial = !linear_relations(dual.components).empty();
    } catch (const MathError& e) {
        if (e.kind() != ErrorKind::ImageSpansLine) throw;
        s.cotrivial = true;
    }
    return s;
}

std::vector<std::string> match_signature(const InvariantSignature& s) {
    // Catalog signatures are projective invariants; they are computed once.
    static const std::vector<InvariantSignature> known = [] {
        std::vector<InvariantSignature> v;
        for (const auto& f : catalog()) v.push_back(invariant_signature(f.map, 0));
        return v;
    }();
    std::vector<std::string> out;
    if (s.trivial) return out;
    for (std::size_t i = 0; i < known.size(); ++i)
        if (known[i].same_invariants(s)) out.push_back(catalog()[i].label);
    return out;
}

std::vector<std::string> match_against_catalog(const RationalMap& map, std::uint64_t seed) {
    if (!is_planarization(map, seed)) return {};
    return match_signature(invariant_signature(map, seed));
}

}  // namespace planarize
