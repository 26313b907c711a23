// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "nbif/atinfinity.hpp"
#include "nbif/bound.hpp"
#include "nbif/cli.hpp"
#include "nbif/criticality.hpp"
#include "nbif/fan.hpp"
#include "oracles.hpp"

using namespace nbif;

namespace {

// Tolerances and sizes.
constexpr double kSmallExampleSeconds = 1.0;
constexpr double kQuarticExampleSeconds = 5.0;
constexpr int kOracleDigits = 50;
constexpr int kCorpusSize = 60;
constexpr int kMetamorphicSize = 50;
constexpr int kSturmTrials = 1000;
constexpr int kGradientTrials = 50;
constexpr double kCriticalValueTolerance = 1e-8;
constexpr int kFanTrials = 100;
constexpr double kFiberWindow = 4.0;
constexpr int kFiberGrid = 800;

// Collects failure messages of one criterion.
struct Check {
    std::vector<std::string> failures;
    std::string note;
    void operator()(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

BiPoly term(const Rational& c, long m, long n) { return BiPoly::monomial(c, m, n); }

Rational rat(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

bool same_set(const std::vector<RealAlgebraicNumber>& a, const std::vector<RealAlgebraicNumber>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a)
        if (std::none_of(b.begin(), b.end(), [&](const auto& y) { return alg_eq(x, y); })) return false;
    return true;
}

std::vector<RealAlgebraicNumber> values(const BifurcationReport& r) {
    std::vector<RealAlgebraicNumber> v;
    for (const auto& e : r.b_set) v.push_back(e.value);
    return v;
}

bool b_is_zero_only(const BifurcationReport& r) {
    return r.b_set.size() == 1 && r.b_set[0].value.is_rational() && r.b_set[0].value.rational_value() == 0;
}

// --- criteria 1 to 5 ---------------------------------------------------------

void example1_odd(Check& check) {
    const BiPoly f = parse_poly("x*(1+x*y^2)");
    const auto r = bifurcation_set(f);
    check(b_is_zero_only(r), "B_f != {0}");
    check(r.sigma.empty(), "Sigma_f not empty");
    check(r.cond_ii.holds, "condition (ii) false");
    const auto c = counts(f);
    check(c.exact_split && c.exact_split->cleav == 2 && c.exact_split->vanish == 0, "counts split != (2, 0)");
    check(theorem5_bound(f).total == 1, "bound != 1");
}

void example1_even(Check& check) {
    const auto r = bifurcation_set(parse_poly("x*(1+x^2*y^2)"));
    check(r.b_set.empty(), "B_f not empty");
}

void example2(Check& check) {
    const BiPoly f = parse_poly("x + 1/2x^2y^2 + 4/3x^3y^3 + 1/4x^4y^4");
    const auto r = bifurcation_set(f);
    check(r.b_set.size() == 3, "|B_f| = " + std::to_string(r.b_set.size()));

    // b(t) = t^2/2 + 4t^3/3 + t^4/4 at t = -2 -+ sqrt(3), exactly in Q(sqrt 3).
    for (int sign : {-1, 1}) {
        const oracle::QSqrt3 t{-2, sign};
        const oracle::QSqrt3 t2 = t * t, t3 = t2 * t, t4 = t3 * t;
        auto scale = [](const oracle::QSqrt3& v, const Rational& c) { return oracle::QSqrt3{v.a * c, v.b * c}; };
        const oracle::QSqrt3 b = scale(t2, rat(1, 2)) + scale(t3, rat(4, 3)) + scale(t4, rat(1, 4));
        const oracle::Enclosure e = oracle::enclose(b, kOracleDigits);
        Rational tol(1);
        for (int i = 0; i < kOracleDigits; ++i) tol /= 10;
        check(e.hi - e.lo <= tol, "oracle enclosure too wide");
        // (z - a)^2 - 3 b^2 isolates b on the oracle enclosure.
        const RealAlgebraicNumber expected(UniPoly{b.a * b.a - 3 * b.b * b.b, -2 * b.a, 1}, e.lo, e.hi);
        bool found = false;
        for (const auto& v : r.b_set) {
            if (!alg_eq(v.value, expected)) continue;
            found = true;
            RealAlgebraicNumber w = v.value;
            check(w.lo() <= e.lo && e.hi <= w.hi(), "isolating interval misses the oracle");
            w.refine_to(tol);
            check(w.lo() <= e.hi && e.lo <= w.hi(), "refined interval misses the oracle");
        }
        check(found, "b(-2" + std::string(sign < 0 ? "-" : "+") + "sqrt 3) missing");
    }
    check(std::any_of(r.b_set.begin(), r.b_set.end(),
                      [](const auto& v) { return v.value.is_rational() && v.value.rational_value() == 0; }),
          "0 missing");
    const auto c = counts(f);
    check(c.total == 6, "total != 6");
    check(c.exact_split && c.exact_split->cleav == 4 && c.exact_split->vanish == 2, "split != (4, 2)");
    check(theorem5_bound(f).total == 3, "bound != 3");
}

void example2_a0(Check& check) {
    const BiPoly f = parse_poly("x + 1/2x^2y^2 + 1/4x^4y^4");
    const auto bad = faces_of_class(infinity_faces(f), FaceClass::zero);
    check(bad.size() == 1, "expected one bad face");
    for (const auto& face : bad) {
        check(is_morse_bad_face(face), "bad face not Morse");
        check(count_real_roots(bad_face_b(face).derivative(), RootFilter::nonzero()) == 0,
              "nonzero critical point of b");
    }
    check(check_hypotheses(f).ok(), "hypotheses fail");
    const auto r = bifurcation_set(f);
    check(r.cond_iii.empty(), "condition (iii) values present");
    check(b_is_zero_only(r), "B_f != {0}");
}

void broughton(Check& check) {
    const BiPoly f = parse_poly("x + x^2*y");
    const auto r = bifurcation_set(f);
    check(r.sigma.empty(), "Sigma_f not empty");
    check(b_is_zero_only(r), "B_f != {0}");

    // Fiber topology on a window: c = 0 must differ from every other sample.
    auto topo = [](double c) {
        return oracle::fiber_topology([c](double x, double y) { return x + x * x * y - c; }, kFiberWindow, kFiberGrid);
    };
    const auto t0 = topo(0.0);
    std::ostringstream at0;
    at0 << "c = 0: " << t0.components << " components, " << t0.ends << " ends";
    check(t0.components == 3 && t0.ends == 6, at0.str());
    for (double c : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
        const auto t = topo(c);
        std::ostringstream os;
        os << "c = " << c << ": " << t.components << " components, " << t.ends << " ends";
        check(t.components == 2 && t.ends == 4, os.str());
        const bool in_b = std::any_of(r.b_set.begin(), r.b_set.end(), [&](const auto& v) {
            return alg_eq(v.value, RealAlgebraicNumber::from_rational(Rational(c)));
        });
        check(!in_b, os.str() + " reported as bifurcation value");
    }
}

// --- corpus ------------------------------------------------------------------

bool within_bidegree(const BiPoly& f) { return f.degree_in(Var::x) <= 5 && f.degree_in(Var::y) <= 5; }

std::vector<BiPoly> build_corpus(int size) {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> e(0, 5), c(-3, 3), kind(0, 2), k(1, 4), small(0, 1);
    const BiPoly xy = term(1, 1, 1);
    const BiPoly xy1 = xy - BiPoly::constant(1);
    std::vector<BiPoly> out;
    for (int trial = 0; static_cast<int>(out.size()) < size && trial < 20000; ++trial) {
        BiPoly f;
        switch (kind(rng)) {
            case 0:
                for (int i = 0, n = 3 + small(rng) + small(rng); i < n; ++i) f.add_term(e(rng), e(rng), c(rng));
                break;
            case 1:
                // A planted face with d = 0 along (1, -1), as in the second example.
                f.add_term(k(rng), 0, 1);
                for (int j = 1; j <= 4; ++j) f.add_term(j, j, rat(c(rng), k(rng)));
                if (small(rng)) f.add_term(e(rng), e(rng), c(rng));
                break;
            default:
                // A planted double root on a face.
                f = term(1, 0, small(rng)) * xy1 * xy1;
                for (int i = 0; i < 2; ++i) f.add_term(e(rng), e(rng), c(rng));
                break;
        }
        if (f.is_constant() || !within_bidegree(f)) continue;
        if (!check_hypotheses(f).ok() || !has_isolated_singularities(f)) continue;
        if (std::any_of(out.begin(), out.end(), [&](const BiPoly& g) { return g == f; })) continue;
        out.push_back(f);
    }
    return out;
}

// Minus faces with a multiple root violate the hypotheses but drive the ledger.
std::vector<BiPoly> build_ledger_set(int size) {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> e(0, 5), c(-3, 3), a(0, 2), k(1, 2);
    std::vector<BiPoly> out;
    for (int trial = 0; static_cast<int>(out.size()) < size && trial < 5000; ++trial) {
        const BiPoly root = term(1, k(rng), 1) - BiPoly::constant(c(rng) == 0 ? 2 : 1);
        BiPoly f = term(1, 0, a(rng)) * root * root;
        for (int i = 0; i < 2; ++i) f.add_term(e(rng), e(rng), c(rng));
        if (f.is_constant() || !within_bidegree(f)) continue;
        out.push_back(f);
    }
    return out;
}

void ledger_monotone(const BiPoly& f, Check& check, int& refined) {
    const std::string tag = " for " + f.to_string();
    const Ledger l = refine_bound(f, 8);
    for (std::size_t i = 1; i < l.entries.size(); ++i)
        check(l.entries[i].Lambda <= l.entries[i - 1].Lambda, "ledger increases" + tag);
    check(l.final_bound <= theorem5_bound(f).total, "refined bound above the unrefined one" + tag);
    check(refine_bound(f, 0).final_bound == theorem5_bound(f).total, "depth 0 differs from the bound" + tag);
    if (l.entries.size() > 1) ++refined;
}

void count_identity(const std::vector<BiPoly>& corpus, Check& check) {
    check(static_cast<int>(corpus.size()) >= 50, "corpus has " + std::to_string(corpus.size()) + " entries");
    int with_bad = 0, with_zero = 0, split = 0;
    for (const auto& f : corpus) {
        const auto c = counts(f);
        if (!faces_of_class(infinity_faces(f), FaceClass::zero).empty()) ++with_bad;
        if (c.R_zero > 0) ++with_zero;
        if (c.exact_split && c.exact_split->vanish > 0) ++split;
        const std::string tag = " for " + f.to_string();
        check(c.total == 2 * (c.R_plus + c.R_zero), "total != 2(R+ + R0)" + tag);
        check(0 <= c.vanish_min && c.vanish_min <= c.vanish_max && c.vanish_max <= 2 * c.R_zero, "vanish range" + tag);
        if (c.exact_split)
            check(c.exact_split->cleav + c.exact_split->vanish == c.total && c.exact_split->vanish >= 0 &&
                      c.exact_split->vanish <= 2 * c.R_zero,
                  "exact split" + tag);
    }
    check.note = std::to_string(corpus.size()) + " polynomials, " + std::to_string(with_bad) + " with a bad face, " +
                 std::to_string(with_zero) + " with R0 > 0, " + std::to_string(split) + " with vanishing families";
}

void bound_inequality(const std::vector<BiPoly>& corpus, Check& check) {
    check(static_cast<int>(corpus.size()) >= 50, "corpus too small");
    int nonempty = 0, refined = 0, tight = 0;
    for (const auto& f : corpus) {
        const std::string tag = " for " + f.to_string();
        const long n = static_cast<long>(bifurcation_set(f).b_set.size());
        if (n > 0) ++nonempty;
        const auto t5 = theorem5_bound(f);
        check(t5.total >= n, "bound < |B_f|" + tag);
        const Ledger l = refine_bound(f, 8);
        for (std::size_t i = 1; i < l.entries.size(); ++i)
            check(l.entries[i].Lambda <= l.entries[i - 1].Lambda, "ledger increases" + tag);
        check(l.final_bound >= n, "refined bound < |B_f|" + tag);
        if (l.entries.size() > 1) ++refined;
        if (t5.total == n) ++tight;
        check(refine_bound(f, 0).final_bound == t5.total, "depth 0 differs from the bound" + tag);
    }
    const auto extra = build_ledger_set(40);
    int extra_refined = 0;
    for (const auto& f : extra) ledger_monotone(f, check, extra_refined);
    check(extra_refined >= 10, "only " + std::to_string(extra_refined) + " refined ledgers in the planted set");
    check.note = std::to_string(nonempty) + " with nonempty B_f, " + std::to_string(refined) + " refined ledgers, " +
                 std::to_string(tight) + " with bound = |B_f|; planted multiple roots: " +
                 std::to_string(extra.size()) + " polynomials, " + std::to_string(extra_refined) + " refined ledgers";
}

void metamorphic(const std::vector<BiPoly>& corpus, Check& check) {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    int used = 0;
    for (const auto& f : corpus) {
        if (used == kMetamorphicSize) break;
        ++used;
        const std::string tag = " for " + f.to_string();
        const Rational q = rat(num(rng), den(rng));
        Rational lambda = rat(num(rng), den(rng));
        if (lambda == 0) lambda = rat(-3, 2);
        const auto base = values(bifurcation_set(f));
        std::vector<RealAlgebraicNumber> shifted, scaled;
        for (const auto& v : base) {
            shifted.push_back(alg_image(UniPoly{q, 1}, v));
            scaled.push_back(alg_image(UniPoly{0, lambda}, v));
        }
        check(same_set(values(bifurcation_set(swap_xy(f))), base), "swap" + tag);
        check(same_set(values(bifurcation_set(f + BiPoly::constant(q))), shifted), "shift" + tag);
        check(same_set(values(bifurcation_set(f * lambda)), scaled), "scale" + tag);
    }
    check(used == kMetamorphicSize, "only " + std::to_string(used) + " polynomials");
}

// --- criteria 9 and 10 -------------------------------------------------------

void sturm_vs_numeric(Check& check) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> deg(1, 10), c(-9, 9);
    int mismatches = 0;
    for (int trial = 0; trial < kSturmTrials; ++trial) {
        const int d = deg(rng);
        std::vector<Rational> q(d + 1);
        std::vector<double> dq(d + 1);
        for (int i = 0; i <= d; ++i) q[i] = c(rng);
        if (q[d] == 0) q[d] = 1;
        for (int i = 0; i <= d; ++i) dq[i] = q[i].get_d();
        const UniPoly p(q);
        const auto numeric = oracle::real_roots(dq);
        const auto exact = isolate_real_roots(p);
        bool ok = count_real_roots(p) == static_cast<int>(numeric.size()) && exact.size() == numeric.size();
        for (std::size_t i = 0; ok && i < exact.size(); ++i)
            ok = std::abs(exact[i].to_double() - numeric[i]) <= 1e-4 * std::max(1.0, std::abs(numeric[i]));
        if (!ok) {
            ++mismatches;
            if (mismatches <= 3) check(false, "mismatch on " + p.to_string('x'));
        }
    }
    check(mismatches == 0, std::to_string(mismatches) + " mismatches");
    check.note = std::to_string(kSturmTrials) + " univariate polynomials; ";
}

oracle::Dense to_dense(const BiPoly& f) {
    oracle::Dense d(f.degree_in(Var::x) + 1, std::vector<double>(f.degree_in(Var::y) + 1, 0.0));
    for (const auto& [e, c] : f.terms()) d[e.first][e.second] = c.get_d();
    return d;
}

void critical_values_vs_numeric(Check& check) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-5, 5), deg(3, 4);
    int compared = 0, matched = 0;
    for (int trial = 0; trial < kGradientTrials; ++trial) {
        const int n = deg(rng);
        BiPoly f;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) {
                int v = c(rng);
                if (v == 0) v = 1;
                f.add_term(i, j, v);
            }
        const auto exact = critical_values(f);
        const auto numeric = oracle::critical_values(to_dense(f));
        const std::string tag = " for " + f.to_string();
        auto near = [](double a, double b) { return std::abs(a - b) <= kCriticalValueTolerance; };
        for (const auto& v : exact) {
            const double x = v.to_double();
            check(std::any_of(numeric.begin(), numeric.end(), [&](double y) { return near(x, y); }),
                  "certified value " + v.approx(256, 12) + " not found numerically" + tag);
        }
        for (double y : numeric)
            check(std::any_of(exact.begin(), exact.end(), [&](const auto& v) { return near(v.to_double(), y); }),
                  "numeric value " + std::to_string(y) + " not certified" + tag);
        matched += static_cast<int>(exact.size());
        ++compared;
    }
    check(compared == kGradientTrials, "incomplete");
    check.note += std::to_string(compared) + " polynomials, " + std::to_string(matched) + " critical values";
}

long nonzero_roots(const UniPoly& p) { return p.is_zero() ? 0 : count_real_roots(p, RootFilter::nonzero()); }

struct ChartCounts {
    long r_plus = 0, r_zero = 0, mu = 0;
    bool operator==(const ChartCounts& o) const { return r_plus == o.r_plus && r_zero == o.r_zero && mu == o.mu; }
};

ChartCounts chart_counts(const BiPoly& f, const AdmissibleFan& fan) {
    ChartCounts c;
    for (const auto& face : infinity_faces(f)) {
        const Chart ch = chart_expansion(f, fan, fan.index_of(face.P));
        switch (face.cls) {
            case FaceClass::plus: c.r_plus += nonzero_roots(ch.g); break;
            case FaceClass::zero:
                c.r_zero += nonzero_roots(ch.g * Rational(ch.d_right) + UniPoly{0, 1} * ch.g.derivative());
                break;
            case FaceClass::minus: c.mu += multiple_root_excess(ch.g); break;
        }
    }
    return c;
}

void check_fan(const BiPoly& f, const AdmissibleFan& fan, const std::string& tag, Check& check) {
    for (std::size_t k = 0; k < fan.size(); ++k) {
        const Covector& a = fan.ray(k);
        const Covector& b = fan.ray(k + 1);
        check(a.p * b.q - a.q * b.p == 1, "determinant != 1" + tag);
        const Chart ch = chart_expansion(f, fan, k);
        check(ch.reconstruct() == monomial_substitute(f, ch.map), "chart reconstruction" + tag);
    }
}

void fan_invariants(Check& check) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> e(0, 5), c(-3, 3), r(-7, 7), extra(1, 3);
    auto random_ray = [&]() {
        for (;;) {
            const long p = r(rng), q = r(rng);
            if ((p < 0 || q < 0) && std::gcd(p, q) == 1) return Covector{p, q};
        }
    };
    int done = 0;
    long rays = 0;
    for (int trial = 0; done < kFanTrials && trial < 10 * kFanTrials; ++trial) {
        BiPoly f;
        for (int i = 0; i < 4; ++i) f.add_term(e(rng), e(rng), c(rng));
        f = reduced(f);
        if (f.is_zero() || f.is_constant()) continue;
        std::vector<Covector> required;
        for (const auto& face : infinity_faces(f)) required.push_back(face.P);
        std::vector<Covector> refined = required;
        for (int i = 0, n = extra(rng); i < n; ++i) refined.push_back(random_ray());
        const AdmissibleFan A = complete_fan(required), B = complete_fan(refined);
        const std::string tag = " for " + f.to_string();
        check_fan(f, A, tag, check);
        check_fan(f, B, tag, check);
        const ChartCounts ca = chart_counts(f, A), cb = chart_counts(f, B);
        check(ca == cb, "chart counts differ between completions" + tag);
        ChartCounts lib;
        lib.r_plus = r_plus(f);
        lib.r_zero = r_zero(f);
        for (const auto& face : faces_of_class(infinity_faces(f), FaceClass::minus)) lib.mu += mu_face(face);
        check(ca == lib, "chart counts differ from face counts" + tag);
        rays += static_cast<long>(B.size());
        ++done;
    }
    check.note = std::to_string(done) + " fans, " + std::to_string(rays) + " rays in the refined completions";
    check(done == kFanTrials, "only " + std::to_string(done) + " fans");
}

}  // namespace

int main() {
    int failed = 0;
    auto criterion = [&](int id, const std::string& name, double limit, const std::function<void(Check&)>& body) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(check);
        } catch (const std::exception& e) {
            check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (limit > 0 && secs >= limit) check(false, "took " + std::to_string(secs) + " s");
        const bool ok = check.failures.empty();
        if (!ok) ++failed;
        std::printf("%s %2d %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, name.c_str(), secs);
        if (!check.note.empty()) std::printf("       %s\n", check.note.c_str());
        for (std::size_t i = 0; i < check.failures.size() && i < 8; ++i)
            std::printf("       %s\n", check.failures[i].c_str());
        std::fflush(stdout);
    };

    criterion(1, "x(1+xy^2): B_f, counts and bound", kSmallExampleSeconds, example1_odd);
    criterion(2, "x(1+x^2y^2): empty B_f", kSmallExampleSeconds, example1_even);
    criterion(3, "x + x^2y^2/2 + 4x^3y^3/3 + x^4y^4/4 against a 50-digit oracle", kQuarticExampleSeconds, example2);
    criterion(4, "x + x^2y^2/2 + x^4y^4/4: Morse bad face without critical points", 0, example2_a0);
    criterion(5, "Broughton polynomial against fiber sampling", 0, broughton);
    std::vector<BiPoly> corpus;
    criterion(6, "count identity on the corpus", 0, [&](Check& check) {
        corpus = build_corpus(kCorpusSize);
        count_identity(corpus, check);
    });
    criterion(7, "bound inequality and ledger on the corpus", 0,
              [&](Check& check) { bound_inequality(corpus, check); });
    criterion(8, "swap, shift and scale metamorphics", 0, [&](Check& check) { metamorphic(corpus, check); });
    criterion(9, "Sturm counts and critical values against numeric solvers", 0, [](Check& check) {
        sturm_vs_numeric(check);
        critical_values_vs_numeric(check);
    });
    criterion(10, "fan determinants, chart reconstruction and chart independence", 0, fan_invariants);
    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
