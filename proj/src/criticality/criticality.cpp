#include <algorithm>

#include "nbif/criticality.hpp"

namespace nbif {

namespace {

// Shears tried in turn: 0, 1, -1, 2, -2, ...
Rational shear_value(int k) { return k % 2 == 1 ? Rational((k + 1) / 2) : Rational(-(k / 2)); }
constexpr int kMaxShears = 64;

bool constant_lead_in_y(const BiPoly& p) {
    const auto c = coefficients_in(p, Var::y);
    return !c.empty() && c.back().degree() == 0;
}

UniPoly pow_mod(const UniPoly& b, int e, const UniPoly& m) {
    UniPoly r = UniPoly::constant(1) % m;
    for (int i = 0; i < e; ++i) r = (r * b) % m;
    return r;
}

// Over the roots of F the common zeros are the points (x, Y(x)).
struct Group {
    UniPoly F;
    UniPoly Y;
};

// Rational parametrization of the common zeros of a and b, both with
// constant leading coefficient in y. Returns false when some projection
// fibre holds more than one common zero (the shear is not generic).
bool parametrize(BiPoly a, BiPoly b, std::vector<Group>& groups) {
    if (a.degree_in(Var::y) < b.degree_in(Var::y)) std::swap(a, b);
    const long q = b.degree_in(Var::y);
    if (q <= 0) return true;  // b is a nonzero constant
    const auto sub = subresultant_coefficients(a, b);
    const UniPoly& h = sub[0][0];
    if (h.is_zero()) throw DegenerateInput("polynomials share a common factor");
    if (h.degree() <= 0) return true;
    UniPoly G = squarefree_part(h);
    const auto cb = coefficients_in(b, Var::y);
    for (long k = 1; k <= q && G.degree() > 0; ++k) {
        UniPoly F;
        std::vector<UniPoly> S;
        if (k < q) {
            const UniPoly& skk = sub[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
            const UniPoly C = skk.is_zero() ? G.monic() : gcd(G, skk);
            F = G / C;
            G = C;
            S = sub[static_cast<std::size_t>(k)];
        } else {
            F = G;
            G = UniPoly::constant(1);
            S = cb;
        }
        if (F.degree() <= 0) continue;
        const auto K = static_cast<std::size_t>(k);
        const UniPoly lead = S[K] % F;
        const UniPoly Y = (-(S[K - 1]) * inverse_mod(lead * Rational(k), F)) % F;
        const UniPoly negY = -Y;
        for (long i = 0; i <= k; ++i) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
            const UniPoly expected = (lead * Rational(binom) * pow_mod(negY, static_cast<int>(k - i), F)) % F;
            if (S[static_cast<std::size_t>(i)] % F != expected) return false;
        }
        groups.push_back({F, Y});
    }
    return true;
}

BiPoly squarefree_curve(const BiPoly& g) {
    return exact_divide(g, bigcd(g, bigcd(partial(g, Var::x), partial(g, Var::y))));
}

}  // namespace

std::vector<RealAlgebraicNumber> values_on_common_zeros(const BiPoly& a, const BiPoly& b, const BiPoly& f) {
    if (a.is_zero() || b.is_zero()) throw DegenerateInput("values_on_common_zeros: zero polynomial");
    std::vector<RealAlgebraicNumber> values;
    if (a.is_constant() || b.is_constant()) return values;
    for (int k = 0; k < kMaxShears; ++k) {
        const Rational s = shear_value(k);
        const BiPoly as = shear_x(a, s), bs = shear_x(b, s);
        if (!constant_lead_in_y(as) || !constant_lead_in_y(bs)) continue;
        std::vector<Group> groups;
        if (!parametrize(as, bs, groups)) continue;
        const auto fc = coefficients_in(shear_x(f, s), Var::y);
        for (const auto& grp : groups) {
            UniPoly V;
            for (auto it = fc.rbegin(); it != fc.rend(); ++it) V = (V * grp.Y + *it) % grp.F;
            for (const auto& root : isolate_real_roots(grp.F)) insert_unique(values, alg_image(V, root));
        }
        sort_ascending(values);
        return values;
    }
    throw DegenerateInput("no generic projection found");
}

bool has_real_branch(const BiPoly& c) {
    if (c.is_constant()) return false;
    for (int k = 0; k < kMaxShears; ++k) {
        const BiPoly cs = shear_x(c, shear_value(k));
        if (!constant_lead_in_y(cs)) continue;
        const long dy = cs.degree_in(Var::y);
        if (dy == 1) return true;  // a graph over the x-axis
        const UniPoly disc = resultant_elim(cs, partial(cs, Var::y), Var::y);
        if (disc.is_zero()) throw DegenerateInput("has_real_branch: curve is not square-free");
        // The number of real points over x is constant between critical abscissae.
        std::vector<Rational> samples;
        const auto roots = disc.degree() > 0 ? isolate_real_roots(disc) : std::vector<RealAlgebraicNumber>{};
        if (roots.empty()) {
            samples.push_back(0);
        } else {
            samples.push_back(roots.front().lo() - 1);
            for (std::size_t i = 0; i + 1 < roots.size(); ++i) samples.push_back((roots[i].hi() + roots[i + 1].lo()) / 2);
            samples.push_back(roots.back().hi() + 1);
        }
        for (const auto& x0 : samples)
            if (count_real_roots(specialize(cs, Var::x, x0)) > 0) return true;
        return false;
    }
    throw DegenerateInput("no generic projection found");
}

std::vector<RealAlgebraicNumber> critical_values(const BiPoly& f) {
    if (f.is_constant()) throw ConstantPolynomial();
    const BiPoly fx = partial(f, Var::x), fy = partial(f, Var::y);
    const BiPoly g = bigcd(fx, fy);
    std::vector<RealAlgebraicNumber> values;
    if (!fx.is_zero() && !fy.is_zero())
        values = values_on_common_zeros(exact_divide(fx, g), exact_divide(fy, g), f);
    if (!g.is_constant()) {
        // f is constant on each connected component of the critical curve, and
        // the points of the curve critical for the distance to a generic point
        // meet every component.
        const BiPoly c = squarefree_curve(g);
        const BiPoly cx = partial(c, Var::x), cy = partial(c, Var::y);
        for (int i = 1;; ++i) {
            if (i > kMaxShears) throw DegenerateInput("no generic base point found");
            Rational x0(2 * i + 1, 3 * i + 4), y0(-(5 * i + 2), 7 * i + 3);
            x0.canonicalize();
            y0.canonicalize();
            const BiPoly L = (BiPoly::x() - BiPoly::constant(x0)) * cy - (BiPoly::y() - BiPoly::constant(y0)) * cx;
            if (!bigcd(c, L).is_constant()) continue;
            for (const auto& v : values_on_common_zeros(c, L, f)) insert_unique(values, v);
            break;
        }
        sort_ascending(values);
    }
    return values;
}

bool has_isolated_singularities(const BiPoly& f) {
    if (f.is_constant()) throw ConstantPolynomial();
    const BiPoly g = bigcd(partial(f, Var::x), partial(f, Var::y));
    if (g.is_constant()) return true;
    return !has_real_branch(squarefree_curve(g));
}

}  // namespace nbif
