#include "planarize/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "planarize/parser.hpp"

namespace planarize {

using nlohmann::json;

namespace {

// Runs one step; failures land in r.errors[step].
template <class F>
void step(AnalysisReport& r, const std::string& name, F&& f) {
    try {
        f();
    } catch (const MathError& e) {
        r.errors[name] = {std::string(to_string(e.kind())), e.what()};
    } catch (const std::exception& e) {
        r.errors[name] = {"Internal", e.what()};
    }
}

json points_json(const BaseLocus& b) {
    json j;
    j["points"] = json::array();
    j["multiplicities"] = json::array();
    j["fieldDiscs"] = json::array();
    for (const auto& p : b.points) {
        j["points"].push_back(p.point.str());
        j["multiplicities"].push_back(p.multiplicity);
        j["fieldDiscs"].push_back(p.point.field_disc().get_str());
    }
    j["weight"] = b.weight;
    j["complete"] = b.complete;
    j["positiveDimensional"] = b.positive_dimensional;
    return j;
}

json surface_object(const SurfaceModel& s) {
    json j;
    j["degree"] = s.degree;
    j["imageDimension"] = s.image_dimension;
    j["equations"] = json::array();
    for (const auto& e : s.equations) j["equations"].push_back(to_string(e));
    return j;
}

json components_json(const std::array<Poly, 4>& c) {
    json j = json::array();
    for (const auto& p : c) j.push_back(to_string(p));
    return j;
}

json matrix_json(const Matrix<QuadExt>& m) {
    json j = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        j.push_back(std::move(row));
    }
    return j;
}

json quadric_json(const QuadricClassification& c) {
    json j;
    j["label"] = to_string(c.label);
    j["quadricRank"] = c.quadric_rank;
    j["normalForm"] = quadric_normal_form(c.label).str();
    if (c.witness) {
        j["witness"] = {{"eta", matrix_json(c.witness->eta)}, {"mu", matrix_json(c.witness->mu)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

std::string field_name(FieldMode f) { return f == FieldMode::Complex ? "complex" : "rational"; }

std::string dump(const json& j) { return j.dump(2); }

}  // namespace

const char* tool_version() { return PLANARIZE_VERSION; }

AnalysisReport analyze(const RationalMap& map, const AnalyzeOptions& options, std::string input) {
    AnalysisReport r;
    r.input = input.empty() ? map.str() : std::move(input);
    r.map = map.str();
    r.degree = map.degree();
    r.seed = options.seed;
    r.dmax = options.dmax;
    r.field = options.field;
    const std::uint64_t seed = options.seed;

    step(r, "planarity", [&] { r.is_planarization = is_planarization(map, seed); });

    step(r, "baseLocus", [&] { r.base_locus = base_locus(map, seed); });
    step(r, "surface", [&] { r.surface = implicitize(map, options.dmax, seed); });
    step(r, "topologicalDegree", [&] { r.topological_degree = topological_degree(map, seed); });
    step(r, "degreeFormula", [&] {
        if (!r.base_locus || !r.surface || !r.topological_degree)
            throw MathError(ErrorKind::IncompleteCheck, "an input of the formula is missing");
        if (!r.base_locus->complete || !r.topological_degree->samples_complete)
            throw MathError(ErrorKind::IncompleteCheck, "base locus or fibre samples are incomplete");
        if (r.surface->image_dimension != 2) throw MathError(ErrorKind::NotASurfaceImage, "image is a curve");
        DegreeFormula f;
        f.map_degree_squared = r.degree * r.degree;
        f.surface_degree = r.surface->degree;
        f.topological_degree = static_cast<int>(r.topological_degree->sampled);
        f.base_weight = static_cast<int>(r.base_locus->weight);
        f.holds = f.map_degree_squared == f.surface_degree * f.topological_degree + f.base_weight;
        r.degree_formula = f;
    });

    if (!r.is_planarization) return r;

    step(r, "flags", [&] {
        const Cotriviality c = cotriviality(map, seed);
        r.is_trivial = c.trivial;
        r.is_cotrivial = c.cotrivial;
        r.image_spans_line = c.image_spans_line;
        r.cotrivial_center = c.center;
    });
    if (r.is_trivial && !*r.is_trivial) step(r, "dual", [&] { r.dual = dual_map(map, seed); });

    step(r, "classification", [&] {
        if (!r.is_trivial) return;
        if (*r.is_trivial)
            r.planarization_class = "trivial";
        else if (*r.is_cotrivial)
            r.planarization_class = "co-trivial";
        else if (r.degree <= 2)
            r.planarization_class = "quadratic";
        else if (r.dual && r.dual->degree <= 2)
            r.planarization_class = "dual quadratic";
        else
            r.planarization_class = "unclassified";

        if (r.degree == 2 && !*r.is_trivial && r.surface && r.surface->degree == 2 && r.surface->image_dimension == 2)
            r.quadric = classify_quadric_image(map, options.field, seed);

        InvariantSignature s;
        s.map_degree = r.degree;
        s.trivial = *r.is_trivial;
        s.cotrivial = *r.is_cotrivial;
        if (r.base_locus) {
            s.base_weight = r.base_locus->weight;
            for (const auto& b : r.base_locus->points) {
                s.base_multiplicities.push_back(b.multiplicity);
                s.base_field_discs.push_back(b.point.field_disc());
            }
            std::sort(s.base_multiplicities.begin(), s.base_multiplicities.end());
            std::sort(s.base_field_discs.begin(), s.base_field_discs.end());
        }
        if (r.surface && r.surface->image_dimension == 2) s.surface_degree = r.surface->degree;
        if (r.topological_degree) s.topological_degree = static_cast<int>(r.topological_degree->sampled);
        if (r.dual) s.dual_degree = r.dual->degree;
        r.catalog_matches = match_signature(s);
    });
    return r;
}

std::string to_json(const AnalysisReport& r) {
    json j;
    j["schema"] = 1;
    j["toolVersion"] = tool_version();
    j["seed"] = r.seed;
    j["dmax"] = r.dmax;
    j["field"] = field_name(r.field);
    j["input"] = r.input;
    j["map"] = r.map;
    j["degree"] = r.degree;

    json flags;
    flags["isPlanarization"] = r.is_planarization;
    if (r.is_trivial) flags["isTrivial"] = *r.is_trivial;
    if (r.is_cotrivial) flags["isCotrivial"] = *r.is_cotrivial;
    if (r.image_spans_line) flags["imageSpansLine"] = *r.image_spans_line;
    j["flags"] = flags;
    if (r.cotrivial_center) j["cotrivialCenter"] = r.cotrivial_center->str();

    if (r.base_locus) j["baseLocus"] = points_json(*r.base_locus);
    if (r.surface) j["surface"] = surface_object(*r.surface);
    if (r.topological_degree)
        j["topologicalDegree"] = {{"sampled", r.topological_degree->sampled},
                                  {"samplesComplete", r.topological_degree->samples_complete}};
    if (r.degree_formula) {
        const auto& f = *r.degree_formula;
        j["degreeFormula"] = {{"lhs", f.map_degree_squared},
                              {"rhs", f.surface_degree * f.topological_degree + f.base_weight},
                              {"surfaceDegree", f.surface_degree},
                              {"topologicalDegree", f.topological_degree},
                              {"baseWeight", f.base_weight},
                              {"holds", f.holds}};
    }
    if (r.dual) j["dual"] = {{"degree", r.dual->degree}, {"components", components_json(r.dual->components)}};

    if (r.planarization_class || r.quadric || r.catalog_matches) {
        json c = json::object();
        if (r.planarization_class) c["class"] = *r.planarization_class;
        if (r.quadric) c["quadric"] = quadric_json(*r.quadric);
        if (r.catalog_matches) c["catalogMatches"] = *r.catalog_matches;
        j["classification"] = c;
    }
    json errors = json::object();
    for (const auto& [k, e] : r.errors) errors[k] = {{"kind", e.kind}, {"message", e.message}};
    j["errors"] = errors;
    return dump(j);
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "map: " << r.map << "\n";
    out << "degree: " << r.degree << "\n";
    out << "planarization: " << (r.is_planarization ? "yes" : "no") << "\n";
    if (r.is_trivial) out << "trivial: " << (*r.is_trivial ? "yes" : "no") << "\n";
    if (r.is_cotrivial) {
        out << "co-trivial: " << (*r.is_cotrivial ? "yes" : "no");
        if (r.cotrivial_center) out << " (center " << r.cotrivial_center->str() << ")";
        if (r.image_spans_line && *r.image_spans_line) out << " (generic lines map into lines)";
        out << "\n";
    }
    if (r.base_locus) {
        out << "base locus: weight " << r.base_locus->weight << (r.base_locus->complete ? "" : " (incomplete)");
        for (const auto& b : r.base_locus->points) out << "\n  " << b.point.str() << " multiplicity " << b.multiplicity;
        out << "\n";
    }
    if (r.surface) {
        out << "surface: degree " << r.surface->degree << (r.surface->image_dimension == 1 ? " (image is a curve)" : "")
            << "\n";
        for (const auto& e : r.surface->equations) out << "  " << to_string(e) << " = 0\n";
    }
    if (r.topological_degree)
        out << "topological degree: " << r.topological_degree->sampled
            << (r.topological_degree->samples_complete ? "" : " (some samples incomplete)") << "\n";
    if (r.degree_formula) {
        const auto& f = *r.degree_formula;
        out << "degree formula: " << f.map_degree_squared << " = " << f.surface_degree << "*" << f.topological_degree
            << " + " << f.base_weight << (f.holds ? " holds" : " FAILS") << "\n";
    }
    if (r.dual) {
        out << "dual (degree " << r.dual->degree << "): [";
        for (std::size_t i = 0; i < 4; ++i) out << (i ? " : " : "") << to_string(r.dual->components[i]);
        out << "]\n";
    }
    if (r.planarization_class) out << "class: " << *r.planarization_class << "\n";
    if (r.quadric) out << "quadric image class: " << to_string(r.quadric->label) << "\n";
    if (r.catalog_matches) {
        out << "catalog matches:";
        if (r.catalog_matches->empty()) out << " none";
        for (const auto& l : *r.catalog_matches) out << " " << l;
        out << "\n";
    }
    for (const auto& [k, e] : r.errors) out << "error in " << k << ": " << e.message << "\n";
    return out.str();
}

std::string base_locus_json(const RationalMap& map, const BaseLocus& b) {
    json j = points_json(b);
    j["map"] = map.str();
    return dump(j);
}

std::string surface_json(const RationalMap& map, const SurfaceModel& s) {
    json j = surface_object(s);
    j["map"] = map.str();
    j["equation"] = s.equations.empty() ? "" : to_string(s.equations.front());
    return dump(j);
}

std::string dual_json(const RationalMap& map, const DualMap& d, const Cotriviality& c) {
    json j;
    j["map"] = map.str();
    j["degree"] = d.degree;
    j["components"] = components_json(d.components);
    j["isCotrivial"] = c.cotrivial;
    if (c.center) j["cotrivialCenter"] = c.center->str();
    return dump(j);
}

std::string classification_json(const RationalMap& map, const QuadricClassification& c, FieldMode mode) {
    json j = quadric_json(c);
    j["map"] = map.str();
    j["field"] = field_name(mode);
    return dump(j);
}

std::string check_json(const RationalMap& map, bool planar) {
    json j;
    j["map"] = map.str();
    j["degree"] = map.degree();
    j["isPlanarization"] = planar;
    return dump(j);
}

std::string equivalence_json(bool equivalent) {
    json j;
    j["equivalent"] = equivalent;
    return dump(j);
}

std::string catalog_json() {
    json arr = json::array();
    for (const auto& f : catalog()) {
        json e;
        e["label"] = f.label;
        e["map"] = f.map.str();
        e["components"] = components_json(f.map.components());
        json x;
        x["mapDegree"] = f.expected.map_degree;
        x["surfaceDegree"] = f.expected.surface_degree;
        if (f.expected.surface_equation)
            x["surfaceEquation"] = to_string(canonical(parse_poly(*f.expected.surface_equation)));
        x["baseWeight"] = f.expected.base_weight;
        x["topologicalDegree"] = f.expected.topological_degree;
        x["cotrivial"] = f.expected.cotrivial;
        x["dualDegree"] = f.expected.dual_degree;
        e["expected"] = x;
        arr.push_back(std::move(e));
    }
    return dump(arr);
}

std::string witness_text(const EquivalenceWitness& w) {
    std::ostringstream out;
    auto print = [&](const char* name, const Matrix<QuadExt>& m) {
        out << name << ":\n";
        for (std::size_t i = 0; i < m.rows(); ++i) {
            out << "  [";
            for (std::size_t k = 0; k < m.cols(); ++k) out << (k ? ", " : "") << m(i, k).str();
            out << "]\n";
        }
    };
    print("eta", w.eta);
    print("mu", w.mu);
    return out.str();
}

}  // namespace planarize
