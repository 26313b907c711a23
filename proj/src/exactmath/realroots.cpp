#include <algorithm>

#include "nbif/exactmath.hpp"

namespace nbif {

namespace {

// Divides by the absolute content so signs are preserved.
UniPoly positive_scale(const UniPoly& p) {
    if (p.is_zero()) return p;
    UniPoly prim = p.primitive();
    return sgn(p.lead()) < 0 ? -prim : prim;
}

int sign_variations(const std::vector<int>& signs) {
    int last = 0, count = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

SturmSequence::SturmSequence(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    seq_.push_back(squarefree_part(p));
    if (seq_.front().degree() <= 0) return;
    seq_.push_back(positive_scale(seq_.front().derivative()));
    while (seq_.back().degree() > 0) {
        UniPoly r = seq_[seq_.size() - 2] % seq_.back();
        if (r.is_zero()) break;
        seq_.push_back(positive_scale(-r));
    }
}

int SturmSequence::variations_at(const Rational& t) const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& q : seq_) s.push_back(q.sign_at(t));
    return sign_variations(s);
}

int SturmSequence::variations_at_pos_inf() const {
    std::vector<int> s;
    for (const auto& q : seq_) s.push_back(sgn(q.lead()));
    return sign_variations(s);
}

int SturmSequence::variations_at_neg_inf() const {
    std::vector<int> s;
    for (const auto& q : seq_) s.push_back(q.degree() % 2 == 0 ? sgn(q.lead()) : -sgn(q.lead()));
    return sign_variations(s);
}

int SturmSequence::count_half_open(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_closed(const Rational& a, const Rational& b) const {
    if (a > b) return 0;
    const int at_a = seq_.front().sign_at(a) == 0 ? 1 : 0;
    if (a == b) return at_a;
    return count_half_open(a, b) + at_a;
}

int SturmSequence::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

int count_real_roots(const UniPoly& p, const RootFilter& filter) {
    if (p.is_zero()) throw ZeroPolynomial();
    SturmSequence sturm(p);
    switch (filter.mode) {
        case RootMode::all:
            return sturm.count_all();
        case RootMode::nonzero:
            return sturm.count_all() - (sgn(p.coeff(0)) == 0 ? 1 : 0);
        case RootMode::in_interval:
            return sturm.count_closed(filter.lo, filter.hi);
    }
    return 0;
}

Rational root_bound(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.lead())));
    Rational bound = 1;
    while (bound <= m + 1) bound *= 2;
    return bound;
}

RationalInterval eval_interval(const UniPoly& p, const RationalInterval& x) {
    RationalInterval acc{0, 0};
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        Rational a = acc.lo * x.lo, b = acc.lo * x.hi, d = acc.hi * x.lo, e = acc.hi * x.hi;
        Rational lo = std::min({a, b, d, e});
        Rational hi = std::max({a, b, d, e});
        acc = {lo + *it, hi + *it};
    }
    return acc;
}

namespace {

struct Isolator {
    const UniPoly& p;
    const SturmSequence& sturm;
    std::vector<RealAlgebraicNumber>& out;

    int count_open(const Rational& lo, const Rational& hi) const {
        return sturm.count_half_open(lo, hi) - (p.sign_at(hi) == 0 ? 1 : 0);
    }

    // Roots strictly inside (lo, hi); endpoints may be roots already reported.
    void run(Rational lo, Rational hi, int count) {
        if (count == 0) return;
        if (count == 1 && p.sign_at(lo) != 0 && p.sign_at(hi) != 0) {
            out.emplace_back(p, lo, hi);
            return;
        }
        Rational mid = (lo + hi) / 2;
        if (p.sign_at(mid) == 0) {
            const int left = count_open(lo, mid);
            run(lo, mid, left);
            out.push_back(RealAlgebraicNumber::from_rational(mid));
            run(mid, hi, count - left - 1);
            return;
        }
        const int left = count_open(lo, mid);
        run(lo, mid, left);
        run(mid, hi, count - left);
    }
};

}  // namespace

std::vector<RealAlgebraicNumber> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<RealAlgebraicNumber> out;
    if (p.degree() <= 0) return out;
    SturmSequence sturm(p);
    const UniPoly& base = sturm.base();
    const Rational bound = root_bound(base);
    Isolator iso{base, sturm, out};
    iso.run(-bound, bound, sturm.count_all());
    for (auto& r : out) {
        Rational q;
        if (!r.is_rational() && try_rationalize(r, q)) r = RealAlgebraicNumber::from_rational(q);
    }
    return out;
}

}  // namespace nbif
