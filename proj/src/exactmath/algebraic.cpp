#include <algorithm>
#include <cmath>

#include "nbif/exactmath.hpp"

namespace nbif {

RealAlgebraicNumber::RealAlgebraicNumber() : minpoly_{Rational(0), Rational(1)}, lo_(0), hi_(0) {}

RealAlgebraicNumber RealAlgebraicNumber::from_rational(const Rational& q) {
    return RealAlgebraicNumber(UniPoly{Rational(-q), Rational(1)}, q, q);
}

RealAlgebraicNumber::RealAlgebraicNumber(const UniPoly& defining, Rational lo, Rational hi)
    : minpoly_(defining), lo_(std::move(lo)), hi_(std::move(hi)) {
    normalize();
}

void RealAlgebraicNumber::normalize() {
    if (minpoly_.degree() < 1) throw DegenerateInput("algebraic number needs a nonconstant defining polynomial");
    if (lo_ > hi_) std::swap(lo_, hi_);
    if (minpoly_.degree() == 1) lo_ = hi_ = -minpoly_.coeff(0) / minpoly_.coeff(1);
    if (lo_ == hi_) {
        minpoly_ = UniPoly{Rational(-lo_), Rational(1)}.primitive();
        return;
    }
    minpoly_ = minpoly_.primitive();
}

void RealAlgebraicNumber::refine() {
    if (is_rational()) return;
    Rational mid = (lo_ + hi_) / 2;
    const int s = minpoly_.sign_at(mid);
    if (s == 0) {
        lo_ = hi_ = mid;
        normalize();
        return;
    }
    if (minpoly_.sign_at(lo_) != s)
        hi_ = mid;
    else
        lo_ = mid;
}

void RealAlgebraicNumber::refine_to(const Rational& width) {
    while (!is_rational() && hi_ - lo_ > width) refine();
}

void RealAlgebraicNumber::separate_from_zero() {
    if (is_rational()) return;
    if (!(lo_ < 0 && 0 < hi_)) return;
    if (minpoly_.sign_at(0) == 0) {
        lo_ = hi_ = 0;
        normalize();
        return;
    }
    while (!is_rational() && lo_ < 0 && 0 < hi_) refine();
}

int RealAlgebraicNumber::sign() const {
    if (is_rational()) return sgn(lo_);
    RealAlgebraicNumber c = *this;
    c.separate_from_zero();
    return c.is_rational() ? sgn(c.lo_) : (c.lo_ >= 0 ? 1 : -1);
}

double RealAlgebraicNumber::to_double() const {
    if (is_rational()) return lo_.get_d();
    RealAlgebraicNumber c = *this;
    // The magnitude is read off a unit-width interval, not the isolating one.
    c.refine_to(Rational(1));
    const Rational mag = std::max(abs(c.lo_), abs(c.hi_));
    Rational w = mag > 1 ? mag : Rational(1);
    w /= Rational(Integer(1) << 60);
    c.refine_to(w);
    Rational mid = (c.lo_ + c.hi_) / 2;
    return mid.get_d();
}

namespace {

std::string format_decimal(const mpf_class& f, int digits) {
    mp_exp_t e = 0;
    std::string m = f.get_str(e, 10, static_cast<std::size_t>(digits));
    if (m.empty()) return "0";
    std::string sign;
    if (m[0] == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    const long k = static_cast<long>(m.size());
    std::string body;
    if (e > 30 || e < -10) {
        body = m.substr(0, 1);
        if (k > 1) body += "." + m.substr(1);
        body += "e" + std::to_string(static_cast<long>(e) - 1);
    } else if (e <= 0) {
        body = "0." + std::string(static_cast<std::size_t>(-e), '0') + m;
    } else if (e >= k) {
        body = m + std::string(static_cast<std::size_t>(e - k), '0');
    } else {
        body = m.substr(0, static_cast<std::size_t>(e)) + "." + m.substr(static_cast<std::size_t>(e));
    }
    return sign + body;
}

}  // namespace

std::string RealAlgebraicNumber::approx(unsigned bits, int digits) const {
    RealAlgebraicNumber c = *this;
    c.refine_to(Rational(1) / Rational(Integer(1) << bits));
    Rational mid = c.is_rational() ? c.lo_ : Rational((c.lo_ + c.hi_) / 2);
    mpf_class f(0, bits + 64);
    f = mid;
    return format_decimal(f, digits);
}

int sign_at(const UniPoly& p, const RealAlgebraicNumber& alpha) {
    if (p.is_zero()) return 0;
    if (alpha.is_rational()) return p.sign_at(alpha.rational_value());
    const UniPoly g = gcd(p, alpha.minpoly());
    if (g.degree() > 0) {
        SturmSequence sg(g);
        // Endpoints are not roots of the defining polynomial, hence not of g.
        if (sg.count_half_open(alpha.lo(), alpha.hi()) == 1) return 0;
    }
    RealAlgebraicNumber a = alpha;
    SturmSequence sp(p);
    while (!a.is_rational() && sp.count_closed(a.lo(), a.hi()) != 0) a.refine();
    if (a.is_rational()) return p.sign_at(a.rational_value());
    return p.sign_at(a.lo());
}

bool is_root(const UniPoly& p, const RealAlgebraicNumber& alpha) { return sign_at(p, alpha) == 0; }

UniPoly multiplication_charpoly(const UniPoly& b, const UniPoly& m) {
    const int n = m.degree();
    if (n < 1) throw DegenerateInput("multiplication_charpoly: modulus must be nonconstant");
    const auto N = static_cast<std::size_t>(n);
    std::vector<std::vector<Rational>> H(N, std::vector<Rational>(N));
    UniPoly col = b % m;
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t i = 0; i < N; ++i) H[i][j] = col.coeff(static_cast<int>(i));
        col = (col * UniPoly::variable()) % m;
    }
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t c = 0; c + 2 < N; ++c) {
        std::size_t piv = c + 1;
        while (piv < N && sgn(H[piv][c]) == 0) ++piv;
        if (piv == N) continue;
        if (piv != c + 1) {
            std::swap(H[piv], H[c + 1]);
            for (std::size_t r = 0; r < N; ++r) std::swap(H[r][piv], H[r][c + 1]);
        }
        const Rational inv = 1 / H[c + 1][c];
        for (std::size_t k = c + 2; k < N; ++k) {
            if (sgn(H[k][c]) == 0) continue;
            const Rational u = H[k][c] * inv;
            for (std::size_t j = 0; j < N; ++j) H[k][j] -= u * H[c + 1][j];
            for (std::size_t r = 0; r < N; ++r) H[r][c + 1] += u * H[r][k];
        }
    }
    std::vector<UniPoly> p(N + 1);
    p[0] = UniPoly::constant(1);
    for (std::size_t k = 1; k <= N; ++k) {
        p[k] = UniPoly{Rational(-H[k - 1][k - 1]), Rational(1)} * p[k - 1];
        Rational t = 1;
        for (std::size_t i = 1; i < k; ++i) {
            t *= H[k - i][k - i - 1];
            if (sgn(t) == 0) break;
            p[k] -= (H[k - i - 1][k - 1] * t) * p[k - i - 1];
        }
    }
    return p[N];
}

RealAlgebraicNumber alg_image(const UniPoly& b, const RealAlgebraicNumber& alpha) {
    if (alpha.is_rational()) return RealAlgebraicNumber::from_rational(b.eval(alpha.rational_value()));
    const UniPoly r = b % alpha.minpoly();
    if (r.is_constant()) return RealAlgebraicNumber::from_rational(r.coeff(0));
    const UniPoly q = squarefree_part(multiplication_charpoly(r, alpha.minpoly()));
    SturmSequence sq(q);
    RealAlgebraicNumber a = alpha;
    while (true) {
        if (a.is_rational()) return RealAlgebraicNumber::from_rational(r.eval(a.rational_value()));
        const RationalInterval J = eval_interval(r, a.interval());
        if (sq.count_closed(J.lo, J.hi) == 1) {
            if (q.sign_at(J.lo) == 0) return RealAlgebraicNumber::from_rational(J.lo);
            if (q.sign_at(J.hi) == 0) return RealAlgebraicNumber::from_rational(J.hi);
            RealAlgebraicNumber out(q, J.lo, J.hi);
            Rational v;
            if (try_rationalize(out, v)) return RealAlgebraicNumber::from_rational(v);
            return out;
        }
        a.refine();
    }
}

RealAlgebraicNumber alg_image_rational(const UniPoly& num, const UniPoly& den, const RealAlgebraicNumber& alpha) {
    if (alpha.is_rational()) {
        const Rational d = den.eval(alpha.rational_value());
        if (sgn(d) == 0) throw DegenerateInput("alg_image_rational: denominator vanishes");
        return RealAlgebraicNumber::from_rational(num.eval(alpha.rational_value()) / d);
    }
    const UniPoly g = gcd(alpha.minpoly(), den);
    const UniPoly m2 = alpha.minpoly() / g;
    if (m2.degree() < 1 || !is_root(m2, alpha))
        throw DegenerateInput("alg_image_rational: denominator vanishes");
    RealAlgebraicNumber a2(m2, alpha.lo(), alpha.hi());
    const UniPoly inv = inverse_mod(den % m2, m2);
    return alg_image((num * inv) % m2, a2);
}

RealAlgebraicNumber alg_reciprocal(const RealAlgebraicNumber& alpha) {
    if (alpha.is_rational()) {
        if (sgn(alpha.rational_value()) == 0) throw DegenerateInput("reciprocal of zero");
        return RealAlgebraicNumber::from_rational(1 / alpha.rational_value());
    }
    RealAlgebraicNumber a = alpha;
    a.separate_from_zero();
    if (a.is_rational()) return alg_reciprocal(a);
    // An endpoint may be 0 itself; move it inward.
    while (sgn(a.lo()) == 0 || sgn(a.hi()) == 0) a.refine();
    if (a.is_rational()) return alg_reciprocal(a);
    return RealAlgebraicNumber(a.minpoly().reverse(), 1 / a.hi(), 1 / a.lo());
}

RealAlgebraicNumber alg_negate(const RealAlgebraicNumber& alpha) {
    if (alpha.is_rational()) return RealAlgebraicNumber::from_rational(-alpha.rational_value());
    return RealAlgebraicNumber(alpha.minpoly().negate_variable(), -alpha.hi(), -alpha.lo());
}

namespace {

bool rational_equals(const Rational& q, const RealAlgebraicNumber& a) {
    if (a.is_rational()) return a.rational_value() == q;
    return a.lo() < q && q < a.hi() && a.minpoly().sign_at(q) == 0;
}

bool disjoint(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
    if (a.is_rational() && b.is_rational()) return a.lo() != b.lo();
    return a.hi() <= b.lo() || b.hi() <= a.lo();
}

}  // namespace

bool alg_eq(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
    if (a.is_rational()) return rational_equals(a.rational_value(), b);
    if (b.is_rational()) return rational_equals(b.rational_value(), a);
    if (disjoint(a, b)) return false;
    const UniPoly g = gcd(a.minpoly(), b.minpoly());
    if (g.degree() < 1) return false;
    SturmSequence sg(g);
    if (sg.count_half_open(a.lo(), a.hi()) != 1) return false;
    if (sg.count_half_open(b.lo(), b.hi()) != 1) return false;
    RealAlgebraicNumber x = a, y = b;
    while (true) {
        if (x.is_rational() || y.is_rational()) return alg_eq(x, y);
        if (disjoint(x, y)) return false;
        const Rational lo = std::min(x.lo(), y.lo());
        const Rational hi = std::max(x.hi(), y.hi());
        if (sg.count_closed(lo, hi) == 1) return true;
        x.refine();
        y.refine();
    }
}

int alg_compare(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
    if (a.is_rational() && b.is_rational()) {
        const int c = cmp(a.lo(), b.lo());
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    if (alg_eq(a, b)) return 0;
    RealAlgebraicNumber x = a, y = b;
    while (!disjoint(x, y)) {
        x.refine();
        y.refine();
        if (x.is_rational() && y.is_rational()) break;
        // A point inside the other's open interval: shrink the open one.
        if (x.is_rational()) {
            while (!disjoint(x, y)) y.refine();
        } else if (y.is_rational()) {
            while (!disjoint(x, y)) x.refine();
        }
    }
    return x.lo() < y.lo() ? -1 : 1;
}

bool try_rationalize(const RealAlgebraicNumber& alpha, Rational& out) {
    if (alpha.is_rational()) {
        out = alpha.rational_value();
        return true;
    }
    const Integer L = abs(alpha.minpoly().lead().get_num());
    static const Integer limit("100000000");
    if (L > limit) return false;
    RealAlgebraicNumber a = alpha;
    a.refine_to(Rational(1) / Rational(L * L * 2));
    if (a.is_rational()) {
        out = a.rational_value();
        return true;
    }
    const unsigned long l = L.get_ui();
    for (unsigned long q = 1; q * q <= l; ++q) {
        if (l % q != 0) continue;
        for (unsigned long den : {q, l / q}) {
            Integer lo_num = a.lo().get_num() * den;
            Integer p;
            mpz_fdiv_q(p.get_mpz_t(), lo_num.get_mpz_t(), a.lo().get_den_mpz_t());
            for (int k = 0; k < 3; ++k, ++p) {
                Rational cand(p, Integer(den));
                cand.canonicalize();
                if (a.lo() < cand && cand < a.hi() && a.minpoly().sign_at(cand) == 0) {
                    out = cand;
                    return true;
                }
            }
        }
    }
    return false;
}

std::size_t insert_unique(std::vector<RealAlgebraicNumber>& set, const RealAlgebraicNumber& value) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (alg_eq(set[i], value)) return i;
    }
    set.push_back(value);
    return set.size() - 1;
}

void sort_ascending(std::vector<RealAlgebraicNumber>& values) {
    std::sort(values.begin(), values.end(),
              [](const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) { return alg_compare(a, b) < 0; });
}

}  // namespace nbif
