#include <algorithm>

#include "nbif/atinfinity.hpp"

namespace nbif {

namespace {

bool has_nonzero_real_multiple_root(const UniPoly& p) {
    for (const auto& sf : squarefree_decomposition(p))
        if (sf.multiplicity >= 2 && count_real_roots(sf.factor, RootFilter::nonzero()) > 0) return true;
    return false;
}

std::vector<RealAlgebraicNumber> nonzero_real_roots(const UniPoly& p) {
    std::vector<RealAlgebraicNumber> out;
    if (p.degree() <= 0) return out;
    for (const auto& r : isolate_real_roots(p))
        if (r.sign() != 0) out.push_back(r);
    return out;
}

std::vector<Face> bad_faces(const BiPoly& f) { return faces_of_class(infinity_faces(f), FaceClass::zero); }

std::vector<Face> plus_faces_reduced(const BiPoly& f) {
    const BiPoly ft = reduced(f);
    if (ft.is_zero()) return {};
    return faces_of_class(infinity_faces(ft), FaceClass::plus);
}

void require_hypotheses(const BiPoly& f) {
    if (f.is_constant()) throw ConstantPolynomial();
    HypothesisVerdict v = check_hypotheses(f);
    if (!v.ok()) throw HypothesisViolated(std::move(v));
}

void add_value(std::vector<BifurcationValue>& set, const RealAlgebraicNumber& v, const std::string& tag) {
    for (auto& e : set) {
        if (!alg_eq(e.value, v)) continue;
        if (("+" + e.provenance + "+").find("+" + tag + "+") == std::string::npos) e.provenance += "+" + tag;
        return;
    }
    set.push_back({v, tag});
}

}  // namespace

bool is_nondegenerate(const Face& face) {
    if (face.d == 0) throw BadFaceNotAllowed();
    return !has_nonzero_real_multiple_root(face.phi);
}

bool is_morse_bad_face(const Face& face) {
    const UniPoly db = bad_face_b(face).derivative();
    return count_real_roots(gcd(db, db.derivative()), RootFilter::nonzero()) == 0;
}

BiPoly reduced(const BiPoly& f) { return f - BiPoly::constant(f.coeff(0, 0)); }

HypothesisVerdict check_hypotheses(const BiPoly& f) {
    HypothesisVerdict v;
    std::vector<Face> checked = plus_faces_reduced(f);
    for (const auto& face : faces_of_class(infinity_faces(f), FaceClass::minus)) checked.push_back(face);
    for (const auto& face : checked) {
        if (is_nondegenerate(face)) continue;
        v.nondegenerate_plus_minus = false;
        v.degenerate_faces.push_back(face);
    }
    for (const auto& face : bad_faces(f)) {
        if (is_morse_bad_face(face)) continue;
        v.morse_bad_faces = false;
        v.non_morse_faces.push_back(face);
    }
    return v;
}

ConditionII condition_ii(const BiPoly& f) {
    ConditionII r;
    // The step monomial of a primitive direction takes every nonzero real value.
    for (const auto& face : plus_faces_reduced(f)) {
        if (count_real_roots(face.phi, RootFilter::nonzero()) == 0) continue;
        r.holds = true;
        r.witnesses.push_back(face);
    }
    return r;
}

std::vector<BadCriticalValue> condition_iii(const BiPoly& f) {
    std::vector<BadCriticalValue> out;
    for (const auto& face : bad_faces(f)) {
        if (!is_morse_bad_face(face)) throw MorseViolation();
        const UniPoly b = bad_face_b(face);
        for (const auto& t : nonzero_real_roots(b.derivative())) out.push_back({face, t, alg_image(b, t)});
    }
    return out;
}

BifurcationReport bifurcation_set(const BiPoly& f) {
    require_hypotheses(f);
    BifurcationReport r;
    r.sigma = critical_values(f);
    r.cond_ii = condition_ii(f);
    r.cond_iii = condition_iii(f);
    for (const auto& v : r.sigma) add_value(r.b_set, v, "critical");
    if (r.cond_ii.holds) add_value(r.b_set, RealAlgebraicNumber::from_rational(f.coeff(0, 0)), "cond_ii");
    for (const auto& c : r.cond_iii) add_value(r.b_set, c.value, "cond_iii");
    std::sort(r.b_set.begin(), r.b_set.end(),
              [](const BifurcationValue& a, const BifurcationValue& b) { return alg_compare(a.value, b.value) < 0; });
    return r;
}

long r_plus(const BiPoly& f) {
    long n = 0;
    for (const auto& face : plus_faces_reduced(f)) n += count_real_roots(face.phi, RootFilter::nonzero());
    return n;
}

long r_zero(const BiPoly& f) {
    long n = 0;
    for (const auto& face : bad_faces(f)) n += count_real_roots(bad_face_b(face).derivative(), RootFilter::nonzero());
    return n;
}

CountReport counts(const BiPoly& f) {
    require_hypotheses(f);
    if (!has_isolated_singularities(f)) throw NonIsolatedSingularities();
    CountReport r;
    r.R_plus = r_plus(f);
    r.R_zero = r_zero(f);
    r.total = 2 * (r.R_plus + r.R_zero);

    std::vector<Covector> required;
    for (const auto& face : infinity_faces(f)) required.push_back(face.P);
    const AdmissibleFan fan = complete_fan(required);
    long one_side = 0, undetermined = 0;
    for (const auto& face : bad_faces(f)) {
        const Chart chart = chart_expansion(f, fan, fan.index_of(face.P));
        const UniPoly b = bad_face_b(face);
        for (const auto& t : nonzero_real_roots(b.derivative())) {
            // On the divisor v = t when q < 0 < p, and v = 1/t when p < 0 < q.
            const RealAlgebraicNumber s = face.P.q < 0 ? t : alg_reciprocal(t);
            if (classify_tangency(chart, alg_image(b, t), s) == Tangency::one_side)
                ++one_side;
            else
                ++undetermined;
        }
    }
    r.vanish_min = one_side;
    r.vanish_max = one_side + 2 * undetermined;
    if (undetermined == 0) r.exact_split = CountReport::Split{r.total - one_side, one_side};
    return r;
}

const char* to_string(Tangency t) {
    switch (t) {
        case Tangency::one_side: return "one_side";
        case Tangency::both_sides: return "both_sides";
        case Tangency::isolated: return "isolated";
        case Tangency::undetermined: return "undetermined";
    }
    return "?";
}

Tangency classify_tangency(const Chart& chart, const RealAlgebraicNumber& c, const RealAlgebraicNumber& s) {
    if (chart.d_left != 0) throw NotBadFace();
    if (s.sign() == 0 || chart.g.is_zero()) throw NotDoubleRoot();
    // With G(v) = v^{d_right} g(v): G(s) = c, G'(s) = 0, G''(s) != 0, and
    // G' = v^{d_right - 1} K with K = d_right g + v g'.
    const long d = chart.d_right;
    const RealAlgebraicNumber value = d >= 0 ? alg_image(chart.g * UniPoly::monomial(1, static_cast<int>(d)), s)
                                             : alg_image_rational(chart.g, UniPoly::monomial(1, static_cast<int>(-d)), s);
    if (!alg_eq(value, c)) throw NotDoubleRoot();
    const UniPoly K = chart.g * Rational(d) + UniPoly::variable() * chart.g.derivative();
    if (!is_root(K, s) || sign_at(K.derivative(), s) == 0) throw NotDoubleRoot();
    std::vector<Rational> h0;
    for (const auto& [e, coef] : chart.h.terms()) {
        if (e.first != 0) continue;
        if (h0.size() <= static_cast<std::size_t>(e.second)) h0.resize(static_cast<std::size_t>(e.second) + 1);
        h0[static_cast<std::size_t>(e.second)] += coef;
    }
    return sign_at(UniPoly(std::move(h0)), s) != 0 ? Tangency::one_side : Tangency::undetermined;
}

}  // namespace nbif
