#include <algorithm>

#include "nbif/bivar.hpp"

namespace nbif {

namespace {

// Polynomial in the main variable with coefficients in Q[other].
using YPoly = std::vector<UniPoly>;

void trim(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int ydeg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

YPoly scale(const YPoly& p, const UniPoly& c) {
    YPoly r;
    r.reserve(p.size());
    for (const auto& a : p) r.push_back(a * c);
    trim(r);
    return r;
}

// a - c * y^k * b
YPoly sub_shifted(YPoly a, const YPoly& b, const UniPoly& c, int k) {
    const std::size_t need = b.size() + static_cast<std::size_t>(k);
    if (a.size() < need) a.resize(need);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(k)] -= c * b[i];
    trim(a);
    return a;
}

UniPoly content(const YPoly& p) {
    UniPoly g;
    for (const auto& c : p) {
        g = g.is_zero() ? c.monic() : gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

YPoly divide_coeffs(const YPoly& p, const UniPoly& c) {
    YPoly r;
    r.reserve(p.size());
    for (const auto& a : p) r.push_back(a / c);
    return r;
}

YPoly primitive_part(const YPoly& p) {
    if (p.empty()) return p;
    return divide_coeffs(p, content(p));
}

YPoly prem(const YPoly& a, const YPoly& b) {
    YPoly r = a;
    int e = ydeg(a) - ydeg(b) + 1;
    const UniPoly& lb = b.back();
    while (!r.empty() && ydeg(r) >= ydeg(b)) {
        const UniPoly lr = r.back();
        const int k = ydeg(r) - ydeg(b);
        r = sub_shifted(scale(r, lb), b, lr, k);
        --e;
    }
    for (; e > 0; --e) r = scale(r, lb);
    return r;
}

UniPoly bareiss_det(std::vector<std::vector<UniPoly>> M) {
    const std::size_t n = M.size();
    if (n == 0) return UniPoly::constant(1);
    bool negate = false;
    UniPoly prev = UniPoly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && M[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(M[r], M[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                UniPoly t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                M[i][j] = t / prev;
            }
        }
        prev = M[k][k];
    }
    return negate ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

// Determinant of the j-th Sylvester submatrix whose last column is y^i.
UniPoly sylvester_minor(const YPoly& a, const YPoly& b, int j, int i) {
    const int p = ydeg(a), q = ydeg(b);
    const int n = p + q - 2 * j;
    std::vector<int> cols;
    for (int e = p + q - j - 1; e > j; --e) cols.push_back(e);
    cols.push_back(i);
    std::vector<std::vector<UniPoly>> M;
    M.reserve(static_cast<std::size_t>(n));
    auto row = [&](const YPoly& src, int shift) {
        std::vector<UniPoly> r;
        r.reserve(cols.size());
        for (int e : cols) {
            const int idx = e - shift;
            r.push_back(idx >= 0 && idx < static_cast<int>(src.size()) ? src[static_cast<std::size_t>(idx)] : UniPoly{});
        }
        M.push_back(std::move(r));
    };
    for (int k = q - j - 1; k >= 0; --k) row(a, k);
    for (int k = p - j - 1; k >= 0; --k) row(b, k);
    return bareiss_det(std::move(M));
}

YPoly to_ypoly(const BiPoly& f, Var main) {
    if (!f.is_polynomial()) throw DegenerateInput("elimination requires a polynomial (no negative exponents)");
    return coefficients_in(f, main);
}

BiPoly normalize_lead(const BiPoly& f) {
    if (f.is_zero()) return f;
    const auto lead = std::max_element(f.terms().begin(), f.terms().end(), [](const auto& a, const auto& b) {
        const long da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da < db;
        return a.first.first < b.first.first;
    });
    return f * (1 / lead->second);
}

}  // namespace

std::vector<UniPoly> coefficients_in(const BiPoly& f, Var main) {
    std::vector<std::vector<Rational>> raw;
    for (const auto& [e, c] : f.terms()) {
        const long k = main == Var::y ? e.second : e.first;
        const long o = main == Var::y ? e.first : e.second;
        if (k < 0 || o < 0) throw DegenerateInput("coefficients_in: negative exponent");
        if (raw.size() <= static_cast<std::size_t>(k)) raw.resize(static_cast<std::size_t>(k) + 1);
        auto& slot = raw[static_cast<std::size_t>(k)];
        if (slot.size() <= static_cast<std::size_t>(o)) slot.resize(static_cast<std::size_t>(o) + 1);
        slot[static_cast<std::size_t>(o)] += c;
    }
    std::vector<UniPoly> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.emplace_back(std::move(r));
    return out;
}

BiPoly from_coefficients(const std::vector<UniPoly>& c, Var main) {
    BiPoly r;
    for (std::size_t k = 0; k < c.size(); ++k) {
        for (int o = 0; o <= c[k].degree(); ++o) {
            const long kk = static_cast<long>(k);
            if (main == Var::y)
                r.add_term(o, kk, c[k].coeff(o));
            else
                r.add_term(kk, o, c[k].coeff(o));
        }
    }
    return r;
}

UniPoly resultant_elim(const BiPoly& f, const BiPoly& g, Var var) {
    const YPoly a = to_ypoly(f, var), b = to_ypoly(g, var);
    if (ydeg(a) < 1 || ydeg(b) < 1) throw DegenerateInput("resultant_elim: degree 0 in the eliminated variable");
    return sylvester_minor(a, b, 0, 0);
}

std::vector<std::vector<UniPoly>> subresultant_coefficients(const BiPoly& f, const BiPoly& g) {
    const YPoly a = to_ypoly(f, Var::y), b = to_ypoly(g, Var::y);
    const int top = std::min(ydeg(a), ydeg(b));
    std::vector<std::vector<UniPoly>> out;
    for (int j = 0; j < top; ++j) {
        std::vector<UniPoly> row;
        for (int i = 0; i <= j; ++i) row.push_back(sylvester_minor(a, b, j, i));
        out.push_back(std::move(row));
    }
    return out;
}

BiPoly bigcd(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero()) return normalize_lead(g);
    if (g.is_zero()) return normalize_lead(f);
    YPoly a = to_ypoly(f, Var::y), b = to_ypoly(g, Var::y);
    const UniPoly c = gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (ydeg(a) < ydeg(b)) std::swap(a, b);
    YPoly last;
    if (ydeg(b) == 0) {
        last = {UniPoly::constant(1)};
    } else {
        while (true) {
            YPoly r = prem(a, b);
            if (r.empty()) {
                last = b;
                break;
            }
            if (ydeg(r) == 0) {
                last = {UniPoly::constant(1)};
                break;
            }
            a = std::move(b);
            b = primitive_part(r);
        }
    }
    return normalize_lead(from_coefficients(scale(last, c), Var::y));
}

BiPoly exact_divide(const BiPoly& f, const BiPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial();
    YPoly r = to_ypoly(f, Var::y);
    const YPoly b = to_ypoly(g, Var::y);
    YPoly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0);
    while (!r.empty() && ydeg(r) >= ydeg(b)) {
        DivMod dm = divmod(r.back(), b.back());
        if (!dm.remainder.is_zero()) throw DegenerateInput("exact_divide: not divisible");
        const int k = ydeg(r) - ydeg(b);
        q[static_cast<std::size_t>(k)] = dm.quotient;
        r = sub_shifted(std::move(r), b, dm.quotient, k);
    }
    if (!r.empty()) throw DegenerateInput("exact_divide: not divisible");
    return from_coefficients(q, Var::y);
}

}  // namespace nbif
