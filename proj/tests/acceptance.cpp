// Acceptance checks. Prints one PASS/FAIL line per criterion; with arguments,
// runs only the listed criteria. Exit status is the number of failures.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "planarize/intersection.hpp"
#include "planarize/planarity.hpp"
#include "planarize/report.hpp"
#include "support.hpp"

using namespace planarize;
using namespace planarize::testing;

namespace {

// Collects mismatches for one criterion.
struct Check {
    std::ostringstream notes;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        notes << "    " << what << "\n";
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::string> labels(std::initializer_list<const char*> prefixes, int from, int to) {
    std::vector<std::string> out;
    for (const char* p : prefixes)
        for (int i = from; i <= to; ++i) out.push_back(p + std::to_string(i));
    return out;
}

void c1_surface_equations(Check& c) {
    for (int i = 1; i <= 6; ++i) {
        const std::string label = "C" + std::to_string(i);
        const NormalForm& f = *find_normal_form(label);
        const auto t0 = Clock::now();
        const SurfaceModel s = implicitize(f.map);
        const double t = seconds_since(t0);
        c.expect(s.degree == 3, label + ": surface degree " + std::to_string(s.degree));
        c.expect(s.equations.size() == 1 && proportional(s.equations[0], parse_poly(*f.expected.surface_equation)),
                 label + ": equation " + (s.equations.empty() ? "none" : to_string(s.equations[0])));
        c.expect(t < 5.0, label + ": took " + std::to_string(t) + " s");
    }
}

void c2_planarity(Check& c) {
    const auto t0 = Clock::now();
    for (const auto& f : catalog()) c.expect(is_planarization(f.map), f.label + " not a planarization");
    for (int i = 1; i <= 6; ++i) {
        const RationalMap& m = form("C" + std::to_string(i));
        c.expect(determinant(line_restriction_matrix(m)).is_zero(), "C" + std::to_string(i) + ": det not identically 0");
    }
    const RationalMap bad = M("[x^3 : y^3 : z^3 : x^2*y]");
    c.expect(!is_planarization(bad), "[x^3 : y^3 : z^3 : x^2*y] accepted");
    const std::array<Rational, 3> p{1, 1, 1}, q{1, 2, 3};
    const Rational det = determinant(line_restriction_matrix(bad, p, q));
    c.expect(det.abs() == Rational(12), "witness determinant " + det.str());
    const double t = seconds_since(t0);
    c.expect(t < 10.0, "took " + std::to_string(t) + " s");
}

void c3_cotriviality(Check& c) {
    const std::map<std::string, std::string> centers{{"Phi1a", "[0:0:0:1]"}, {"Phi2", "[0:0:1:0]"}};
    for (const char* label : {"Phi1a", "Phi1b", "Phi2"}) {
        const Cotriviality r = cotriviality(form(label));
        c.expect(r.cotrivial, std::string(label) + " not co-trivial");
        if (auto it = centers.find(label); it != centers.end())
            c.expect(r.center && r.center->str() == it->second,
                     std::string(label) + ": center " + (r.center ? r.center->str() : "none"));
    }
    auto plain = labels({"Q"}, 1, 10);
    for (const auto& l : labels({"C"}, 1, 6)) plain.push_back(l);
    for (const auto& label : plain) c.expect(!is_cotrivial(form(label)), label + " co-trivial");
}

void c4_dual_degrees(Check& c) {
    std::map<std::string, int> want;
    for (const auto& l : labels({"Q"}, 1, 6)) want[l] = 3;
    for (const auto& l : labels({"Q"}, 7, 9)) want[l] = 2;
    for (const auto& l : labels({"C"}, 1, 6)) want[l] = 2;
    want["Q10"] = 3;
    for (const auto& [label, d] : want) {
        const int got = dual_map(form(label)).degree;
        c.expect(got == d, label + ": dual degree " + std::to_string(got) + ", expected " + std::to_string(d));
    }
}

void c5_double_dual(Check& c) {
    const auto t0 = Clock::now();
    auto all = labels({"Q"}, 1, 10);
    for (const auto& l : labels({"C"}, 1, 6)) all.push_back(l);
    for (const auto& label : all) c.expect(double_dual_check(form(label)), label + ": double dual differs");
    const double t = seconds_since(t0);
    c.expect(t < 30.0, "took " + std::to_string(t) + " s");
}

void c6_degree_formula(Check& c) {
    for (const auto& f : catalog()) {
        for (std::uint64_t seed = 0; seed <= 4; ++seed) {
            const DegreeFormula d = degree_formula_check(f.map, seed);
            c.expect(d.holds, f.label + " seed " + std::to_string(seed) + ": " + std::to_string(d.map_degree_squared) +
                                  " != " + std::to_string(d.surface_degree) + "*" +
                                  std::to_string(d.topological_degree) + " + " + std::to_string(d.base_weight));
        }
    }
    struct Triple {
        const char* label;
        int sq, surf, k, base;
    };
    for (const Triple& t : {Triple{"C1", 9, 3, 2, 3}, Triple{"Q10", 4, 2, 2, 0}, Triple{"Q8", 4, 3, 1, 1}}) {
        const DegreeFormula d = degree_formula_check(form(t.label));
        c.expect(d.map_degree_squared == t.sq && d.surface_degree == t.surf && d.topological_degree == t.k &&
                     d.base_weight == t.base,
                 std::string(t.label) + ": unexpected triple");
    }
}

void c7_base_loci(Check& c) {
    const BaseLocus phi = base_locus(form("Phi1a"));
    std::set<std::string> pts;
    for (const auto& b : phi.points) pts.insert(b.point.str());
    c.expect(pts == std::set<std::string>{"[0:1:0]", "[0:0:1]"} && phi.weight == 2, "Phi1a base locus");

    const BaseLocus c1 = base_locus(form("C1"));
    pts.clear();
    for (const auto& b : c1.points) pts.insert(b.point.str());
    c.expect(pts == std::set<std::string>{"[1:0:0]", "[0:1:0]", "[0:0:1]"} && c1.weight == 3, "C1 base locus");

    for (const auto& f : catalog()) c.expect(base_locus(f.map).complete, f.label + ": incomplete base locus");
}

void c8_classifier(Check& c) {
    const auto t0 = Clock::now();
    int failures = 0;
    for (const char* label : {"Phi1a", "Phi1b", "Phi2", "Q10"}) {
        const std::string want = std::string(label) == "Q10" ? "Phi3" : label;
        Rng rng(42);
        for (int i = 0; i < 100; ++i) {
            const RationalMap m = conjugate(form(label), random_witness(rng));
            try {
                const QuadricClassification r = classify_quadric_image(m, FieldMode::Rational, static_cast<std::uint64_t>(i));
                const bool ok = to_string(r.label) == want &&
                                (!r.witness || verify_equivalence(m, quadric_normal_form(r.label), *r.witness));
                if (!ok && failures++ < 5) c.expect(false, want + " sample " + std::to_string(i) + ": got " + to_string(r.label));
            } catch (const MathError& e) {
                if (failures++ < 5) c.expect(false, want + " sample " + std::to_string(i) + ": " + e.what());
            }
        }
    }
    c.expect(failures == 0, std::to_string(failures) + " of 400 failed");
    const double t = seconds_since(t0);
    c.expect(t < 60.0, "took " + std::to_string(t) + " s");
}

void c9_properties(Check& c) {
    const Ring plane({"x", "y"});
    const std::vector<QuadExt> o{0, 0};
    const Poly one = Poly::constant(plane, Rational(1));
    auto curve = [&](Rng& rng) {
        Poly p(plane);
        for (unsigned d = 1; d <= 2; ++d)
            for (const auto& m : monomials_of_degree(2, d))
                if (rng.uniform(0, 2) != 0) p.add_term(m, Rational(rng.uniform(-4, 4)));
        return p.is_zero() ? Poly::variable(plane, 0) : p;
    };
    auto add = [](std::optional<unsigned> a, std::optional<unsigned> b) -> std::optional<unsigned> {
        if (!a || !b) return std::nullopt;
        return *a + *b;
    };
    c.expect(intersection_multiplicity(Poly::variable(plane, 0), Poly::variable(plane, 1), o) == 1u, "I(x, y) != 1");
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        const Poly f = curve(rng), g = curve(rng), h = curve(rng), a = curve(rng);
        const auto fg = intersection_multiplicity(f, g, o);
        const std::string pair = "Fulton pair " + to_string(f) + ", " + to_string(g);
        c.expect(!fg || *fg >= 1, pair + ": (i) at a common point");
        c.expect(intersection_multiplicity(f + one, g, o) == 0u, pair + ": (i) away from F");
        c.expect(!intersection_multiplicity(f * h, g * h, o), pair + ": (ii)");
        c.expect(intersection_multiplicity(g, f, o) == fg, pair + ": (iii)");
        c.expect(intersection_multiplicity(f, g * h, o) == add(fg, intersection_multiplicity(f, h, o)), pair + ": (iv)");
        c.expect(intersection_multiplicity(f, g + a * f, o) == fg, pair + ": (v)");
    }
    for (int i = 0; i < 100; ++i) {
        const auto d = static_cast<unsigned>(rng.uniform(0, 6));
        Poly p(Ring::xyz());
        for (const auto& m : monomials_of_degree(3, d))
            if (rng.uniform(0, 1) == 0) p.add_term(m, rng.rational());
        c.expect(X * p.derivative(0) + Y * p.derivative(1) + Z * p.derivative(2) == p * Rational(static_cast<long>(d)),
                 "Euler: " + to_string(p));
    }
    for (int n = 0; n < 50;) {
        const Poly p = random_form(rng, 2, 4), q1 = random_form(rng, 1, 4), q2 = random_form(rng, 2, 4);
        if (!p.depends_on(0) || !q1.depends_on(0) || !q2.depends_on(0)) continue;
        ++n;
        c.expect(resultant(p, q1 * q2, 0) == resultant(p, q1, 0) * resultant(p, q2, 0), "Res: " + to_string(p));
    }
    for (int i = 0; i < 50; ++i) {
        const auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto cols = static_cast<std::size_t>(rng.uniform(2, 7));
        Matrix<Rational> m(rows, cols, Rational(0));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t j = 0; j < cols; ++j) m(r, j) = rng.uniform(0, 2) == 0 ? Rational(0) : rng.rational();
        for (const auto& v : kernel_basis(m))
            for (std::size_t r = 0; r < rows; ++r) {
                Rational s;
                for (std::size_t j = 0; j < cols; ++j) s += m(r, j) * v[j];
                c.expect(s.is_zero(), "kernel vector does not annihilate");
            }
    }
    for (const char* label : {"Q1", "Q7", "Q10", "Phi2"}) {
        const Matrix<Poly> m = line_restriction_matrix(form(label));
        const std::vector<Poly> v = symbolic_kernel_vector(m);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Poly s(m(r, 0).ring());
            for (std::size_t j = 0; j < m.cols(); ++j) s += m(r, j) * v[j];
            c.expect(s.is_zero(), std::string(label) + ": symbolic kernel vector");
        }
    }
}

void c10_determinism(Check& c) {
    AnalyzeOptions o;
    o.seed = 7;
    for (const auto& f : catalog()) {
        const std::string a = to_json(analyze(f.map, o, f.text));
        const std::string b = to_json(analyze(f.map, o, f.text));
        c.expect(a == b, f.label + ": outputs differ");
    }
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "surface equations of C1-C6", c1_surface_equations},
        {2, "planarity suite", c2_planarity},
        {3, "co-triviality flags and centers", c3_cotriviality},
        {4, "dual degrees", c4_dual_degrees},
        {5, "double dual identity", c5_double_dual},
        {6, "degree formula, seeds 0..4", c6_degree_formula},
        {7, "base loci", c7_base_loci},
        {8, "classifier robustness, 4 x 100 witnesses", c8_classifier},
        {9, "property suites", c9_properties},
        {10, "deterministic analyze --json --seed 7", c10_determinism},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const auto& crit : all) {
        if (!only.empty() && !only.count(crit.id)) continue;
        Check c;
        const auto t0 = Clock::now();
        try {
            crit.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << std::setw(2) << crit.id << ": " << (c.ok ? "PASS" : "FAIL") << "  " << crit.title
                  << " (" << std::fixed << std::setprecision(1) << seconds_since(t0) << " s)\n"
                  << c.notes.str() << std::flush;
        if (!c.ok) ++failed;
    }
    return failed;
}
