#ifndef PLANARIZE_CATALOG_HPP
#define PLANARIZE_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planarize/ratmap.hpp"

namespace planarize {

struct ExpectedInvariants {
    int map_degree = 0;
    int surface_degree = 0;
    /// In (t, u, v, w), as printed in the literature (C1-C6 only).
    std::optional<std::string> surface_equation;
    int base_weight = 0;
    int topological_degree = 0;
    bool cotrivial = false;
    int dual_degree = 0;
};

struct NormalForm {
    std::string label;
    std::string text;
    RationalMap map;
    ExpectedInvariants expected;
};

/// Q1-Q10, C1-C6, Phi1a, Phi1b, Phi2 (Phi3 is Q10).
const std::vector<NormalForm>& catalog();

/// nullptr for unknown labels.
const NormalForm* find_normal_form(std::string_view label);

struct InvariantSignature {
    int map_degree = 0;
    bool trivial = false;
    bool cotrivial = false;
    /// Sorted.
    std::vector<unsigned> base_multiplicities;
    unsigned base_weight = 0;
    std::optional<int> surface_degree;
    std::optional<int> topological_degree;
    std::optional<int> dual_degree;
    /// Sorted field discriminants of the base points, 0 for rational ones.
    std::vector<Integer> base_field_discs;
    /// False when some step reported an incomplete or failed computation.
    bool complete = true;

    /// Compares the invariants, ignoring `complete`.
    bool same_invariants(const InvariantSignature& o) const;
};

InvariantSignature invariant_signature(const RationalMap& map, std::uint64_t seed = 0);

/// Catalog labels with the same signature; necessary condition only.
std::vector<std::string> match_against_catalog(const RationalMap& map, std::uint64_t seed = 0);

/// Same, for a signature computed elsewhere. Trivial signatures match nothing.
std::vector<std::string> match_signature(const InvariantSignature& s);

}  // namespace planarize

#endif
