#include "doctest.h"

#include <random>

#include "nbif/atinfinity.hpp"

using namespace nbif;

namespace {

BiPoly term(const Rational& c, long m, long n) { return BiPoly::monomial(c, m, n); }

BiPoly example1(long m, long n) { return term(1, 1, 0) + term(1, m + 1, 2 * n); }

BiPoly example2(long m, long a) {
    return term(1, 1, 0) + term(Rational(1, m), m, m) + term(Rational(2 * a, m + 1), m + 1, m + 1) +
           term(Rational(1, m + 2), m + 2, m + 2);
}

// 50-digit value of b(t) = t^2/2 + 4t^3/3 + t^4/4 at t = -2 + sgn sqrt(3).
mpf_class example2_value(int sgn_) {
    const mp_bitcnt_t bits = 400;
    mpf_class r(3, bits);
    r = sqrt(r);
    mpf_class t(-2, bits);
    t += sgn_ * r;
    mpf_class t2(t * t, bits), t3(t2 * t, bits), t4(t3 * t, bits);
    mpf_class v(t2 / 2, bits);
    v += mpf_class(4 * t3, bits) / 3;
    v += t4 / 4;
    return v;
}

bool encloses(RealAlgebraicNumber a, const mpf_class& v) {
    a.refine_to(Rational(Integer(1), Integer(1) << 180));
    return mpf_class(a.lo(), 400) <= v && v <= mpf_class(a.hi(), 400);
}

// Degenerate iff the gradient of f_P vanishes along a real curve in the torus.
bool degenerate_oracle(const BiPoly& fp) {
    const BiPoly g = bigcd(partial(fp, Var::x), partial(fp, Var::y));
    const BiPoly c = factor_axes(g).F;
    if (c.is_constant()) return false;
    const BiPoly sq = exact_divide(c, bigcd(c, bigcd(partial(c, Var::x), partial(c, Var::y))));
    return has_real_branch(sq);
}

}  // namespace

TEST_CASE("nondegeneracy of faces") {
    auto faces = infinity_faces(example1(1, 1));
    REQUIRE(faces.size() == 2);
    CHECK(is_nondegenerate(faces[0]));
    CHECK(is_nondegenerate(faces[1]));

    // x (1 + x y^2)^2 is singular along x y^2 = -1.
    const BiPoly sq = term(1, 1, 0) + term(2, 2, 2) + term(1, 3, 4);
    for (const auto& face : infinity_faces(sq)) {
        CHECK(face.phi == UniPoly{Rational(1), Rational(2), Rational(1)});
        CHECK_FALSE(is_nondegenerate(face));
        const BiPoly fp = face_function(sq, face.P);
        CHECK(partial(fp, Var::x).eval(-1, 1) == 0);
        CHECK(partial(fp, Var::y).eval(-1, 1) == 0);
    }
    for (const auto& face : infinity_faces(term(1, 1, 0) + term(1, 3, 4)))
        CHECK(is_nondegenerate(face));  // phi = 1 + t^2

    const auto bad = faces_of_class(infinity_faces(example2(2, 2)), FaceClass::zero);
    REQUIRE(bad.size() == 1);
    CHECK_THROWS_AS(is_nondegenerate(bad[0]), BadFaceNotAllowed);
}

TEST_CASE("nondegeneracy agrees with the gradient oracle") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> e(0, 4), c(-3, 3), k(0, 2);
    int checked = 0, degenerate = 0;
    for (int trial = 0; checked < 100 && trial < 2000; ++trial) {
        BiPoly f;
        for (int i = 0; i < 4; ++i) f.add_term(e(rng), e(rng), c(rng));
        // Planted squares produce degenerate faces often enough to matter.
        if (k(rng) == 0) f = f * f;
        for (const auto& face : infinity_faces(f)) {
            if (face.d == 0) continue;
            const bool nd = is_nondegenerate(face);
            CHECK(nd == !degenerate_oracle(face_function(f, face.P)));
            ++checked;
            if (!nd) ++degenerate;
        }
    }
    CHECK(checked >= 100);
    CHECK(degenerate > 0);
}

TEST_CASE("Morse condition on bad faces") {
    for (long m = 2; m <= 5; ++m) {
        for (long a : {-3, -2, -1, 0, 1, 2, 3}) {
            const auto bad = faces_of_class(infinity_faces(example2(m, a)), FaceClass::zero);
            REQUIRE(bad.size() == 1);
            CHECK(is_morse_bad_face(bad[0]) == (a != 1 && a != -1));
        }
    }
    // b(t) = t^4 - 2t^2 on the face of x^4 y^4 - 2 x^2 y^2 + x.
    const auto bad = faces_of_class(infinity_faces(term(1, 4, 4) + term(-2, 2, 2) + term(1, 1, 0)), FaceClass::zero);
    REQUIRE(bad.size() == 1);
    CHECK(bad_face_b(bad[0]) == UniPoly{0, 0, -2, 0, 1});
    CHECK(is_morse_bad_face(bad[0]));
    const auto plus = faces_of_class(infinity_faces(example1(1, 1)), FaceClass::plus);
    CHECK_THROWS_AS(is_morse_bad_face(plus[0]), NotBadFace);
}

TEST_CASE("condition (ii)") {
    const auto odd = condition_ii(example1(1, 1));
    CHECK(odd.holds);
    REQUIRE(odd.witnesses.size() == 1);
    CHECK(odd.witnesses[0].P == Covector{2, -1});
    CHECK(odd.witnesses[0].phi == UniPoly{1, 1});
    CHECK_FALSE(condition_ii(example1(2, 1)).holds);
    CHECK(condition_ii(term(1, 1, 0) + term(1, 2, 1)).holds);
    // The constant term is removed first.
    CHECK(condition_ii(example1(1, 1) + BiPoly::constant(5)).holds);
}

TEST_CASE("condition (iii)") {
    const auto c = condition_iii(example2(2, 2));
    REQUIRE(c.size() == 2);
    std::vector<double> t{c[0].t_star.to_double(), c[1].t_star.to_double()};
    std::sort(t.begin(), t.end());
    CHECK(t[0] == doctest::Approx(-2 - std::sqrt(3.0)));
    CHECK(t[1] == doctest::Approx(-2 + std::sqrt(3.0)));
    CHECK(condition_iii(example2(2, 0)).empty());
    CHECK(condition_iii(example1(1, 1)).empty());
    CHECK_THROWS_AS(condition_iii(example2(2, 1)), MorseViolation);
}

TEST_CASE("bifurcation set of the first example") {
    for (long m = 1; m <= 4; ++m) {
        for (long n = 1; n <= 3; ++n) {
            const auto r = bifurcation_set(example1(m, n));
            CHECK(r.sigma.empty());
            if (m % 2 == 1) {
                REQUIRE(r.b_set.size() == 1);
                CHECK(r.b_set[0].value.sign() == 0);
                CHECK(r.b_set[0].provenance == "cond_ii");
            } else {
                CHECK(r.b_set.empty());
            }
        }
    }
}

TEST_CASE("bifurcation set of the second example") {
    const auto r = bifurcation_set(example2(2, 2));
    CHECK(r.sigma.empty());
    REQUIRE(r.b_set.size() == 3);
    CHECK(encloses(r.b_set[0].value, example2_value(-1)));
    CHECK(r.b_set[1].value.sign() == 0);
    CHECK(encloses(r.b_set[2].value, example2_value(1)));
    CHECK(r.b_set[0].provenance == "cond_iii");
    CHECK(r.b_set[1].provenance == "cond_ii");

    const auto small = bifurcation_set(example2(2, 0));
    REQUIRE(small.b_set.size() == 1);
    CHECK(small.b_set[0].value.sign() == 0);
    CHECK_THROWS_AS(bifurcation_set(example2(2, 1)), HypothesisViolated);
    try {
        bifurcation_set(example2(3, -1));
    } catch (const HypothesisViolated& e) {
        CHECK_FALSE(e.verdict().morse_bad_faces);
        CHECK(e.verdict().non_morse_faces.size() == 1);
        CHECK(e.verdict().nondegenerate_plus_minus);
    }
}

TEST_CASE("bifurcation set of the Broughton polynomial") {
    const auto r = bifurcation_set(term(1, 1, 0) + term(1, 2, 1));
    CHECK(r.sigma.empty());
    REQUIRE(r.b_set.size() == 1);
    CHECK(r.b_set[0].value.sign() == 0);
}

TEST_CASE("counts of the examples") {
    const auto c1 = counts(example1(1, 1));
    CHECK(c1.R_plus == 1);
    CHECK(c1.R_zero == 0);
    CHECK(c1.total == 2);
    REQUIRE(c1.exact_split);
    CHECK(c1.exact_split->cleav == 2);
    CHECK(c1.exact_split->vanish == 0);

    for (long m = 2; m <= 8; ++m) {
        const auto c2 = counts(example2(m, 2));
        CHECK(c2.R_plus == 1);
        CHECK(c2.R_zero == 2);
        CHECK(c2.total == 6);
        REQUIRE(c2.exact_split);
        CHECK(c2.exact_split->cleav == 4);
        CHECK(c2.exact_split->vanish == 2);
        CHECK(c2.vanish_min == 2);
        CHECK(c2.vanish_max == 2);
    }
    const auto c3 = counts(example2(2, 0));
    CHECK(c3.R_zero == 0);
    CHECK(c3.exact_split->vanish == 0);

    const BiPoly circle = term(1, 2, 0) + term(1, 0, 2) - BiPoly::constant(1);
    CHECK(check_hypotheses(circle * circle).ok());
    CHECK_THROWS_AS(counts(circle * circle), NonIsolatedSingularities);
}

TEST_CASE("tangency on the second example chart") {
    const BiPoly f = example2(8, 2);
    std::vector<Covector> req;
    for (const auto& face : infinity_faces(f)) req.push_back(face.P);
    const AdmissibleFan fan = complete_fan(req);
    const std::size_t k = fan.index_of({1, -1});
    CHECK(fan.ray(k + 1) == Covector{8, -7});
    const Chart ch = chart_expansion(f, fan, k);
    CHECK(ch.d_left == 0);
    CHECK(ch.d_right == 8);
    CHECK(ch.h == BiPoly::constant(1));
    const UniPoly b = bad_face_b(faces_of_class(infinity_faces(f), FaceClass::zero)[0]);
    for (const auto& t : isolate_real_roots(b.derivative())) {
        if (t.sign() == 0) continue;
        CHECK(classify_tangency(ch, alg_image(b, t), t) == Tangency::one_side);
    }
}

TEST_CASE("tangency on synthetic charts") {
    Chart ch;
    ch.g = UniPoly{1, -2, 1};
    ch.h = BiPoly::constant(1);
    const auto one = RealAlgebraicNumber::from_rational(1);
    const auto zero = RealAlgebraicNumber::from_rational(0);
    CHECK(classify_tangency(ch, zero, one) == Tangency::one_side);
    ch.h = term(1, 0, 1) - BiPoly::constant(1);
    CHECK(classify_tangency(ch, zero, one) == Tangency::undetermined);
    ch.h = term(1, 1, 0);
    CHECK(classify_tangency(ch, zero, one) == Tangency::undetermined);
    CHECK_THROWS_AS(classify_tangency(ch, one, one), NotDoubleRoot);
    ch.g = UniPoly{-1, 3, -3, 1};
    CHECK_THROWS_AS(classify_tangency(ch, zero, one), NotDoubleRoot);
    ch.d_left = 1;
    CHECK_THROWS_AS(classify_tangency(ch, zero, one), NotBadFace);
    CHECK(std::string(to_string(Tangency::one_side)) == "one_side");
}

TEST_CASE("shift, scale and swap on a small corpus") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> e(0, 4), c(-3, 3);
    int used = 0;
    for (int trial = 0; used < 15 && trial < 500; ++trial) {
        BiPoly f;
        for (int i = 0; i < 4; ++i) f.add_term(e(rng), e(rng), c(rng));
        if (f.is_constant() || !check_hypotheses(f).ok() || !has_isolated_singularities(f)) continue;
        ++used;
        const auto base = bifurcation_set(f);
        const Rational q(7, 3), lam(-5, 2);
        const auto shifted = bifurcation_set(f + BiPoly::constant(q));
        const auto scaled = bifurcation_set(f * lam);
        const auto swapped = bifurcation_set(swap_xy(f));
        REQUIRE(shifted.b_set.size() == base.b_set.size());
        REQUIRE(scaled.b_set.size() == base.b_set.size());
        REQUIRE(swapped.b_set.size() == base.b_set.size());
        const std::size_t n = base.b_set.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& v = base.b_set[i].value;
            CHECK(alg_eq(shifted.b_set[i].value, alg_image(UniPoly{q, 1}, v)));
            CHECK(alg_eq(scaled.b_set[n - 1 - i].value, alg_image(UniPoly{0, lam}, v)));
            CHECK(alg_eq(swapped.b_set[i].value, v));
        }
        const auto c0 = counts(f), cs = counts(swap_xy(f));
        CHECK(c0.R_plus == cs.R_plus);
        CHECK(c0.R_zero == cs.R_zero);
        CHECK(c0.total == 2 * (c0.R_plus + c0.R_zero));
        CHECK(c0.vanish_max <= 2 * c0.R_zero);
    }
    CHECK(used >= 15);
}
