#include <algorithm>
#include <sstream>

#include "nbif/exactmath.hpp"

namespace nbif {

Rational parse_rational(const std::string& text) {
    Rational q(text, 10);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::lead() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.back();
}

Rational UniPoly::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::shift(const Rational& s) const {
    // Horner with the linear polynomial (t + s).
    UniPoly acc;
    const UniPoly lin{s, Rational(1)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= lin;
        acc += constant(*it);
    }
    return acc;
}

UniPoly UniPoly::reverse() const {
    std::vector<Rational> r(coeffs_.rbegin(), coeffs_.rend());
    return UniPoly(std::move(r));
}

UniPoly UniPoly::negate_variable() const {
    std::vector<Rational> r = coeffs_;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return UniPoly(std::move(r));
}

int UniPoly::strip_zero_roots(UniPoly& rest) const {
    if (is_zero()) throw ZeroPolynomial();
    std::size_t k = 0;
    while (sgn(coeffs_[k]) == 0) ++k;
    rest = UniPoly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
    return static_cast<int>(k);
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    UniPoly r = *this;
    const Rational inv = 1 / lead();
    r *= inv;
    return r;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return {};
    Integer den = 1;
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Integer g = 0;
    std::vector<Integer> ints;
    ints.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        Integer v = c.get_num() * (den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (sgn(ints.back()) < 0) g = -g;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(Integer(v / g));
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string UniPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) {
            os << mag.get_str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial();
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational inv = 1 / b.lead();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] * inv;
        if (sgn(c) == 0) continue;
        quot[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).quotient; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a.primitive();
    UniPoly y = b.primitive();
    while (!y.is_zero()) {
        UniPoly r = (x % y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
    // Extended Euclid tracking only the coefficient of a.
    UniPoly r0 = m, r1 = a % m;
    UniPoly s0, s1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        DivMod qr = divmod(r0, r1);
        UniPoly s2 = s0 - qr.quotient * s1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw DegenerateInput("inverse_mod: polynomials are not coprime");
    return (s0 * (1 / r0.lead())) % m;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.degree() <= 0) return UniPoly::constant(1);
    return (p / gcd(p, p.derivative())).primitive();
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    // res(a, b) = (-1)^(m n) lc(b)^(m - deg r) res(b, r) with r = a mod b.
    UniPoly x = a, y = b;
    Rational acc = 1;
    while (true) {
        const int m = x.degree(), n = y.degree();
        if (n == 0) {
            for (int i = 0; i < m; ++i) acc *= y.lead();
            return acc;
        }
        UniPoly r = x % y;
        if (r.is_zero()) return 0;
        if ((m * n) % 2 == 1) acc = -acc;
        const int dr = r.degree();
        for (int i = 0; i < m - dr; ++i) acc *= y.lead();
        x = std::move(y);
        y = std::move(r);
    }
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<SquarefreeFactor> out;
    if (p.degree() == 0) return out;
    UniPoly f = p.monic();
    UniPoly a0 = gcd(f, f.derivative());
    UniPoly b = f / a0;
    UniPoly c = f.derivative() / a0;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly a = gcd(b, d);
        if (a.degree() > 0) out.push_back({a.monic(), i});
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

}  // namespace nbif
