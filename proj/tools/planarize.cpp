// planarize: command line front end for the planarization toolkit.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "planarize/catalog.hpp"
#include "planarize/classify.hpp"
#include "planarize/parser.hpp"
#include "planarize/planarity.hpp"
#include "planarize/report.hpp"

using namespace planarize;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Common {
    bool as_json = false;
    std::uint64_t seed = 0;
    unsigned dmax = 4;
    std::string field = "rational";
    std::string file;
    std::string map;
};

void add_common(CLI::App* sub, Common& c, bool with_map = true) {
    sub->add_flag("--json", c.as_json, "Emit JSON");
    sub->add_option("--seed", c.seed, "Seed for randomized steps")->capture_default_str();
    sub->add_option("--dmax", c.dmax, "Largest surface degree tried")->capture_default_str()->check(CLI::Range(1, 6));
    sub->add_option("--field", c.field, "rational or complex")
        ->check(CLI::IsMember({"rational", "complex"}))
        ->capture_default_str();
    if (with_map) {
        sub->add_option("--file", c.file, "Read maps from a file, one per line");
        // A plain string: CLI11 would strip the brackets of a vector option.
        sub->add_option("map", c.map, "Map such as \"[x^2 : x*y : y^2 : z^2]\"");
    }
}

// Inline maps plus the non-blank lines of --file.
std::vector<std::string> inputs(const Common& c) {
    std::vector<std::string> out;
    if (!c.map.empty()) out.push_back(c.map);
    if (!c.file.empty()) {
        std::ifstream in(c.file);
        if (!in) throw std::runtime_error("cannot read " + c.file);
        std::string line;
        while (std::getline(in, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
    if (out.empty()) throw std::runtime_error("no map given");
    return out;
}

FieldMode field_of(const Common& c) { return c.field == "complex" ? FieldMode::Complex : FieldMode::Rational; }

void print_parse_error(const std::string& text, const ParseError& e) {
    std::cerr << "parse error at offset " << e.offset() << ": " << e.message() << "\n  " << text << "\n  "
              << std::string(std::min(e.offset(), text.size()), ' ') << "^\n";
}

// Collects per-map JSON documents; a single map prints its document alone.
struct Output {
    bool as_json;
    std::vector<json> docs;

    void add(const std::string& doc) { docs.push_back(json::parse(doc)); }
    void flush() const {
        if (!as_json || docs.empty()) return;
        if (docs.size() == 1)
            std::cout << docs.front().dump(2) << "\n";
        else
            std::cout << json(docs).dump(2) << "\n";
    }
};

// Runs `body` on each parsed input; returns the worst exit code.
template <class F>
int for_each_map(const Common& c, F&& body) {
    int code = kOk;
    Output out{c.as_json, {}};
    for (const auto& text : inputs(c)) {
        try {
            const RationalMap map = parse_rational_map(text);
            code = std::max(code, body(text, map, out));
        } catch (const ParseError& e) {
            print_parse_error(text, e);
            code = kInputError;
        } catch (const MathError& e) {
            std::cerr << "error: " << e.what() << "\n";
            code = kInputError;
        }
    }
    out.flush();
    return code;
}

Matrix<QuadExt> parse_matrix(const std::string& text, std::size_t n) {
    // Rows separated by ';', entries by ',' or whitespace.
    Matrix<QuadExt> m(n, n, QuadExt(0));
    std::stringstream rows(text);
    std::string row;
    std::size_t i = 0;
    while (std::getline(rows, row, ';')) {
        if (i >= n) throw std::runtime_error("too many rows in matrix \"" + text + "\"");
        std::replace(row.begin(), row.end(), ',', ' ');
        std::stringstream entries(row);
        std::string e;
        std::size_t j = 0;
        while (entries >> e) {
            if (j >= n) throw std::runtime_error("too many entries in row " + std::to_string(i + 1));
            const Poly p = parse_poly(e);
            if (!p.is_constant()) throw std::runtime_error("matrix entry \"" + e + "\" is not a number");
            m(i, j++) = p.constant_term();
        }
        if (j != n) throw std::runtime_error("row " + std::to_string(i + 1) + " needs " + std::to_string(n) + " entries");
        ++i;
    }
    if (i != n) throw std::runtime_error("matrix needs " + std::to_string(n) + " rows");
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of planarizations P^2 -> P^3"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    Common check_o, analyze_o, dual_o, impl_o, base_o, class_o, cat_o, eq_o;
    auto* check = app.add_subcommand("check", "Is the map a planarization? Exit 1 if not");
    add_common(check, check_o);
    auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report");
    add_common(analyze_cmd, analyze_o);
    auto* dual = app.add_subcommand("dual", "Dual planarization");
    add_common(dual, dual_o);
    auto* impl = app.add_subcommand("implicitize", "Equation of the image surface");
    add_common(impl, impl_o);
    auto* base = app.add_subcommand("base-locus", "Base points with multiplicities");
    add_common(base, base_o);
    auto* classify = app.add_subcommand("classify", "Class of a quadratic map with quadric image");
    add_common(classify, class_o);
    auto* cat = app.add_subcommand("catalog", "List the built-in normal forms");
    add_common(cat, cat_o, false);

    auto* eq = app.add_subcommand("verify-equiv", "Check phi = mu . phi'(eta x) for a given witness");
    add_common(eq, eq_o, false);
    std::string phi_text, phi2_text, eta_text = "1,0,0;0,1,0;0,0,1", mu_text = "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1";
    eq->add_option("phi", phi_text, "Map phi")->required();
    eq->add_option("phi_prime", phi2_text, "Map phi' (or a catalog label)")->required();
    eq->add_option("--eta", eta_text, "3x3 source matrix, rows separated by ';'");
    eq->add_option("--mu", mu_text, "4x4 target matrix, rows separated by ';'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*check) {
            return for_each_map(check_o, [&](const std::string&, const RationalMap& map, Output& out) {
                const bool planar = is_planarization(map, check_o.seed);
                if (check_o.as_json)
                    out.add(check_json(map, planar));
                else
                    std::cout << "planarization: " << (planar ? "yes" : "no") << " (degree " << map.degree() << ")\n";
                return planar ? kOk : kNegative;
            });
        }
        if (*analyze_cmd) {
            AnalyzeOptions o{analyze_o.seed, analyze_o.dmax, field_of(analyze_o)};
            return for_each_map(analyze_o, [&](const std::string& text, const RationalMap& map, Output& out) {
                const AnalysisReport r = analyze(map, o, text);
                if (analyze_o.as_json)
                    out.add(to_json(r));
                else
                    std::cout << to_text(r);
                return kOk;
            });
        }
        if (*dual) {
            return for_each_map(dual_o, [&](const std::string&, const RationalMap& map, Output& out) {
                const DualMap d = dual_map(map, dual_o.seed);
                const Cotriviality c = cotriviality(map, dual_o.seed);
                if (dual_o.as_json) {
                    out.add(dual_json(map, d, c));
                } else {
                    std::cout << "dual (degree " << d.degree << "): [";
                    for (std::size_t i = 0; i < 4; ++i) std::cout << (i ? " : " : "") << to_string(d.components[i]);
                    std::cout << "]\n";
                    if (c.cotrivial) std::cout << "co-trivial" << (c.center ? ", center " + c.center->str() : "") << "\n";
                }
                return kOk;
            });
        }
        if (*impl) {
            return for_each_map(impl_o, [&](const std::string&, const RationalMap& map, Output& out) {
                const SurfaceModel s = implicitize(map, impl_o.dmax, impl_o.seed);
                if (impl_o.as_json) {
                    out.add(surface_json(map, s));
                } else {
                    for (const auto& e : s.equations) std::cout << to_string(e) << " = 0\n";
                    if (s.image_dimension == 1) std::cout << "(image is a curve)\n";
                }
                return kOk;
            });
        }
        if (*base) {
            return for_each_map(base_o, [&](const std::string&, const RationalMap& map, Output& out) {
                const BaseLocus b = base_locus(map, base_o.seed);
                if (base_o.as_json) {
                    out.add(base_locus_json(map, b));
                } else {
                    for (const auto& p : b.points) std::cout << p.point.str() << "  multiplicity " << p.multiplicity << "\n";
                    std::cout << "weight " << b.weight << (b.complete ? "" : " (incomplete)") << "\n";
                }
                return kOk;
            });
        }
        if (*classify) {
            return for_each_map(class_o, [&](const std::string&, const RationalMap& map, Output& out) {
                const QuadricClassification c = classify_quadric_image(map, field_of(class_o), class_o.seed);
                if (class_o.as_json) {
                    out.add(classification_json(map, c, field_of(class_o)));
                } else {
                    std::cout << to_string(c.label) << "  " << quadric_normal_form(c.label).str() << "\n";
                    if (c.witness) std::cout << witness_text(*c.witness);
                }
                return kOk;
            });
        }
        if (*cat) {
            if (cat_o.as_json) {
                std::cout << catalog_json() << "\n";
            } else {
                for (const auto& f : catalog()) std::cout << f.label << "\t" << f.map.str() << "\n";
            }
            return kOk;
        }
        if (*eq) {
            auto load = [](const std::string& text) {
                if (const NormalForm* f = find_normal_form(text)) return f->map;
                return parse_rational_map(text);
            };
            try {
                const RationalMap phi = load(phi_text), phi2 = load(phi2_text);
                const EquivalenceWitness w{parse_matrix(eta_text, 3), parse_matrix(mu_text, 4)};
                const bool ok = verify_equivalence(phi, phi2, w);
                if (eq_o.as_json)
                    std::cout << equivalence_json(ok) << "\n";
                else
                    std::cout << "equivalent: " << (ok ? "yes" : "no") << "\n";
                return ok ? kOk : kNegative;
            } catch (const ParseError& e) {
                std::cerr << "parse error at offset " << e.offset() << ": " << e.message() << "\n";
                return kInputError;
            } catch (const MathError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kInputError;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
