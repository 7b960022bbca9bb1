#ifndef PLANARIZE_REPORT_HPP
#define PLANARIZE_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planarize/catalog.hpp"
#include "planarize/classify.hpp"
#include "planarize/planarity.hpp"
#include "planarize/ratmap.hpp"

namespace planarize {

const char* tool_version();

struct AnalyzeOptions {
    std::uint64_t seed = 0;
    unsigned dmax = 4;
    FieldMode field = FieldMode::Rational;
};

struct StepError {
    std::string kind;
    std::string message;
};

/// Everything analyze() found; absent members were not computed or failed
/// (failures are listed in `errors` by step name).
struct AnalysisReport {
    std::string input;
    std::string map;
    int degree = 0;
    std::uint64_t seed = 0;
    unsigned dmax = 4;
    FieldMode field = FieldMode::Rational;

    bool is_planarization = false;
    std::optional<bool> is_trivial;
    std::optional<bool> is_cotrivial;
    std::optional<bool> image_spans_line;
    std::optional<ProjPoint> cotrivial_center;
    /// trivial, co-trivial, quadratic, dual quadratic or unclassified.
    std::optional<std::string> planarization_class;

    std::optional<BaseLocus> base_locus;
    std::optional<SurfaceModel> surface;
    std::optional<TopologicalDegree> topological_degree;
    std::optional<DegreeFormula> degree_formula;
    std::optional<DualMap> dual;
    std::optional<QuadricClassification> quadric;
    std::optional<std::vector<std::string>> catalog_matches;

    std::map<std::string, StepError> errors;
};

/// Runs every step, recording failures instead of throwing.
AnalysisReport analyze(const RationalMap& map, const AnalyzeOptions& options = {}, std::string input = "");

/// Single JSON document, keys sorted, two-space indent.
std::string to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

// Sub-reports for the individual subcommands.
std::string base_locus_json(const RationalMap& map, const BaseLocus& b);
std::string surface_json(const RationalMap& map, const SurfaceModel& s);
std::string dual_json(const RationalMap& map, const DualMap& d, const Cotriviality& c);
std::string classification_json(const RationalMap& map, const QuadricClassification& c, FieldMode mode);
std::string check_json(const RationalMap& map, bool planar);
std::string equivalence_json(bool equivalent);
/// Array of NormalForm records.
std::string catalog_json();

std::string witness_text(const EquivalenceWitness& w);

}  // namespace planarize

#endif
