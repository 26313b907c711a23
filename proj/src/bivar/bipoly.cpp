#include <algorithm>
#include <sstream>

#include "nbif/bivar.hpp"

namespace nbif {

BiPoly::BiPoly(Terms terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (sgn(it->second) == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, long m, long n) {
    BiPoly p;
    p.add_term(m, n, c);
    return p;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

bool BiPoly::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.first >= 0 && t.first.second >= 0; });
}

Rational BiPoly::coeff(long m, long n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(long m, long n, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(Exponent{m, n}, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

long BiPoly::degree_in(Var v) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, v == Var::x ? e.first : e.second);
    return d;
}

long BiPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

namespace {

Rational ipow(const Rational& base, long k) {
    if (k < 0) return 1 / ipow(base, -k);
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= base;
    return r;
}

Integer binomial(long n, long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * ipow(x, e.first) * ipow(y, e.second);
    return acc;
}

BiPoly BiPoly::pow(unsigned k) const {
    BiPoly r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Rational>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        const long da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    auto power = [](char v, long k) {
        std::string s(1, v);
        if (k < 0) return s + "^(" + std::to_string(k) + ")";
        if (k > 1) s += "^" + std::to_string(k);
        return s;
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : order) {
        const bool neg = sgn(c) < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const Rational mag = abs(c);
        std::vector<std::string> parts;
        if (mag != 1 || (e.first == 0 && e.second == 0)) parts.push_back(mag.get_str());
        if (e.first != 0) parts.push_back(power('x', e.first));
        if (e.second != 0) parts.push_back(power('y', e.second));
        for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
    }
    return os.str();
}

BiPoly partial(const BiPoly& f, Var v) {
    BiPoly r;
    for (const auto& [e, c] : f.terms()) {
        const long k = v == Var::x ? e.first : e.second;
        if (k == 0) continue;
        if (v == Var::x)
            r.add_term(e.first - 1, e.second, c * k);
        else
            r.add_term(e.first, e.second - 1, c * k);
    }
    return r;
}

Exponent MonomialMap::apply(const Exponent& e) const {
    return {e.first * r0 + e.second * s0, e.first * r1 + e.second * s1};
}

MonomialMap MonomialMap::inverse() const {
    const long d = det();
    if (d != 1 && d != -1) throw InvalidCovector("monomial map is not unimodular");
    return {s1 * d, -s0 * d, -r1 * d, r0 * d};
}

BiPoly monomial_substitute(const BiPoly& f, const MonomialMap& M) {
    BiPoly r;
    for (const auto& [e, c] : f.terms()) {
        const Exponent t = M.apply(e);
        r.add_term(t.first, t.second, c);
    }
    return r;
}

BiPoly translate_y(const BiPoly& F, const Rational& s) {
    BiPoly r;
    for (const auto& [e, c] : F.terms()) {
        if (e.second < 0) throw DegenerateInput("translate_y: negative power of y");
        for (long k = 0; k <= e.second; ++k)
            r.add_term(e.first, k, c * Rational(binomial(e.second, k)) * ipow(s, e.second - k));
    }
    return r;
}

BiPoly shear_x(const BiPoly& f, const Rational& s) {
    BiPoly r;
    for (const auto& [e, c] : f.terms()) {
        if (e.first < 0) throw DegenerateInput("shear_x: negative power of x");
        for (long k = 0; k <= e.first; ++k)
            r.add_term(e.first - k, e.second + k, c * Rational(binomial(e.first, k)) * ipow(s, k));
    }
    return r;
}

BiPoly swap_xy(const BiPoly& f) {
    BiPoly r;
    for (const auto& [e, c] : f.terms()) r.add_term(e.second, e.first, c);
    return r;
}

UniPoly specialize(const BiPoly& f, Var fixed, const Rational& value) {
    std::vector<Rational> out;
    for (const auto& [e, c] : f.terms()) {
        const long keep = fixed == Var::x ? e.second : e.first;
        const long gone = fixed == Var::x ? e.first : e.second;
        if (keep < 0) throw DegenerateInput("specialize: negative exponent");
        if (out.size() <= static_cast<std::size_t>(keep)) out.resize(static_cast<std::size_t>(keep) + 1);
        out[static_cast<std::size_t>(keep)] += c * ipow(value, gone);
    }
    return UniPoly(std::move(out));
}

AxisFactorization factor_axes(const BiPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    long a = f.terms().begin()->first.first, b = f.terms().begin()->first.second;
    for (const auto& [e, c] : f.terms()) {
        a = std::min(a, e.first);
        b = std::min(b, e.second);
    }
    BiPoly F;
    for (const auto& [e, c] : f.terms()) F.add_term(e.first - a, e.second - b, c);
    return {a, b, F};
}

}  // namespace nbif
