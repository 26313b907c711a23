#pragma once

// Exact arithmetic kernel: rationals (GMP), dense univariate polynomials over Q,
// Sturm-sequence root counting and isolation, and real algebraic numbers
// represented by a square-free defining polynomial plus an isolating interval.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nbif/errors.hpp"

namespace nbif {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Dense univariate polynomial over Q; coefficient i multiplies t^i.
/// The coefficient vector never carries trailing zeros, so degree() == -1
/// identifies the zero polynomial.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);
    static UniPoly variable() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of t^i, zero beyond the degree.
    Rational coeff(int i) const;
    const Rational& lead() const;

    Rational eval(const Rational& t) const;
    int sign_at(const Rational& t) const { return sgn(eval(t)); }
    UniPoly derivative() const;

    /// p(t + s).
    UniPoly shift(const Rational& s) const;
    /// t^deg p(1/t).
    UniPoly reverse() const;
    /// p(-t).
    UniPoly negate_variable() const;
    /// Divides by the largest power of t dividing p; returns that power.
    int strip_zero_roots(UniPoly& rest) const;

    UniPoly monic() const;
    /// Integer coefficients with gcd 1 and positive leading coefficient.
    UniPoly primitive() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Inverse of a modulo m; throws DegenerateInput when gcd(a, m) != 1.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);
UniPoly squarefree_part(const UniPoly& p);

/// Resultant of two univariate polynomials over Q (Euclidean algorithm).
Rational resultant(const UniPoly& a, const UniPoly& b);

struct SquarefreeFactor {
    UniPoly factor;
    int multiplicity;
};

/// Yun decomposition: p = lead * prod factor^multiplicity, monic factors,
/// strictly increasing multiplicities, constant factors omitted.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p);

/// Sturm sequence of the square-free part of a polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const UniPoly& p);

    int variations_at(const Rational& t) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    /// Distinct roots in the half-open interval (a, b], a < b.
    int count_half_open(const Rational& a, const Rational& b) const;
    /// Distinct roots in [a, b].
    int count_closed(const Rational& a, const Rational& b) const;
    int count_all() const;

    const UniPoly& base() const { return seq_.front(); }

private:
    std::vector<UniPoly> seq_;
};

enum class RootMode { all, nonzero, in_interval };

/// Filter for count_real_roots; interval bounds are inclusive.
struct RootFilter {
    RootMode mode = RootMode::all;
    Rational lo;
    Rational hi;

    static RootFilter all() { return {}; }
    static RootFilter nonzero() { return {RootMode::nonzero, 0, 0}; }
    static RootFilter closed(Rational a, Rational b) { return {RootMode::in_interval, std::move(a), std::move(b)}; }
};

/// Number of distinct real roots of p under the filter.
int count_real_roots(const UniPoly& p, const RootFilter& filter = RootFilter::all());

/// Power of two bounding the absolute value of every root.
Rational root_bound(const UniPoly& p);

struct RationalInterval {
    Rational lo;
    Rational hi;

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

/// Enclosure of p over [lo, hi] by interval Horner evaluation.
RationalInterval eval_interval(const UniPoly& p, const RationalInterval& x);

/// A real root of a square-free polynomial with integer coprime
/// coefficients, pinned down by an interval that contains no other root.
/// The interval is either open (lo < hi, neither endpoint a root) or a single
/// point, in which case the defining polynomial is the linear one.
class RealAlgebraicNumber {
public:
    /// Zero.
    RealAlgebraicNumber();
    static RealAlgebraicNumber from_rational(const Rational& q);
    /// Trusts the caller on the isolation invariant; normalizes the polynomial
    /// and collapses linear or point representations.
    RealAlgebraicNumber(const UniPoly& defining, Rational lo, Rational hi);

    const UniPoly& minpoly() const { return minpoly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    RationalInterval interval() const { return {lo_, hi_}; }

    bool is_rational() const { return lo_ == hi_; }
    const Rational& rational_value() const { return lo_; }
    int sign() const;

    /// One bisection step; keeps the value, tightens the interval.
    void refine();
    /// Refines until hi - lo <= width.
    void refine_to(const Rational& width);
    /// Refines until the interval does not contain 0 (no-op for 0 itself).
    void separate_from_zero();

    double to_double() const;
    /// Decimal approximation refined to 2^-bits, with `digits` significant digits.
    std::string approx(unsigned bits = 256, int digits = 20) const;

private:
    void normalize();

    UniPoly minpoly_;
    Rational lo_;
    Rational hi_;
};

std::vector<RealAlgebraicNumber> isolate_real_roots(const UniPoly& p);

/// Sign of p at alpha, exact.
int sign_at(const UniPoly& p, const RealAlgebraicNumber& alpha);
bool is_root(const UniPoly& p, const RealAlgebraicNumber& alpha);

/// Characteristic polynomial of multiplication by b in Q[t]/(m).
UniPoly multiplication_charpoly(const UniPoly& b, const UniPoly& m);

/// The exact value b(alpha).
RealAlgebraicNumber alg_image(const UniPoly& b, const RealAlgebraicNumber& alpha);
/// The exact value num(alpha)/den(alpha); den(alpha) must be nonzero.
RealAlgebraicNumber alg_image_rational(const UniPoly& num, const UniPoly& den, const RealAlgebraicNumber& alpha);
RealAlgebraicNumber alg_reciprocal(const RealAlgebraicNumber& alpha);
RealAlgebraicNumber alg_negate(const RealAlgebraicNumber& alpha);

bool alg_eq(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b);
/// -1, 0, +1.
int alg_compare(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b);

/// Rational root of the (square-free) defining polynomial equal to alpha,
/// if alpha is rational and the denominator search bound is not exceeded.
bool try_rationalize(const RealAlgebraicNumber& alpha, Rational& out);

/// Appends `value` to `set` unless an alg_eq-equal element is present;
/// returns the index of the (new or existing) element.
std::size_t insert_unique(std::vector<RealAlgebraicNumber>& set, const RealAlgebraicNumber& value);
void sort_ascending(std::vector<RealAlgebraicNumber>& values);

}  // namespace nbif
