#pragma once

// Sparse bivariate (Laurent) polynomials over Q, monomial changes of
// coordinates, and the elimination tools used for critical points.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nbif/exactmath.hpp"

namespace nbif {

using Exponent = std::pair<long, long>;

enum class Var { x, y };

class BiPoly {
public:
    using Terms = std::map<Exponent, Rational>;

    BiPoly() = default;
    explicit BiPoly(Terms terms);

    static BiPoly constant(const Rational& c);
    static BiPoly monomial(const Rational& c, long m, long n);
    static BiPoly x() { return monomial(1, 1, 0); }
    static BiPoly y() { return monomial(1, 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// All exponents nonnegative.
    bool is_polynomial() const;
    Rational coeff(long m, long n) const;
    std::size_t size() const { return terms_.size(); }

    void add_term(long m, long n, const Rational& c);

    /// Largest exponent of var (polynomial role); -1 for zero.
    long degree_in(Var v) const;
    long total_degree() const;

    /// Laurent evaluation; zero coordinates are fine where no negative power hits them.
    Rational eval(const Rational& x, const Rational& y) const;
    BiPoly pow(unsigned k) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rational& c);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    /// Canonical text accepted by the CLI parser, e.g. "x^2*y - 1/2*y + 3".
    std::string to_string() const;

private:
    Terms terms_;
};

BiPoly partial(const BiPoly& f, Var v);

/// x = u^{r0} v^{r1}, y = u^{s0} v^{s1}; columns (r0, s0) and (r1, s1).
struct MonomialMap {
    long r0, s0, r1, s1;

    long det() const { return r0 * s1 - r1 * s0; }
    /// (m, n) -> (m r0 + n s0, m r1 + n s1).
    Exponent apply(const Exponent& e) const;
    /// Inverse map; requires det = +-1.
    MonomialMap inverse() const;
    static MonomialMap identity() { return {1, 0, 0, 1}; }
};

BiPoly monomial_substitute(const BiPoly& f, const MonomialMap& M);

/// F(x, y + s).
BiPoly translate_y(const BiPoly& F, const Rational& s);
/// f(x + s y, y).
BiPoly shear_x(const BiPoly& f, const Rational& s);
/// f(y, x).
BiPoly swap_xy(const BiPoly& f);
/// f(x, y0) as a polynomial in x, or f(x0, y) as a polynomial in y.
UniPoly specialize(const BiPoly& f, Var fixed, const Rational& value);

struct AxisFactorization {
    long alpha;
    long beta;
    BiPoly F;
};

/// f = x^alpha y^beta F with neither x nor y dividing F. Works for Laurent f too.
AxisFactorization factor_axes(const BiPoly& f);

/// f as a polynomial in `main` with coefficients in the other variable.
std::vector<UniPoly> coefficients_in(const BiPoly& f, Var main);
BiPoly from_coefficients(const std::vector<UniPoly>& c, Var main);

/// Resultant with respect to var, a polynomial in the other variable.
/// Throws DegenerateInput when either input has degree 0 in var.
UniPoly resultant_elim(const BiPoly& f, const BiPoly& g, Var var);

/// Subresultant coefficients with respect to y: out[j][i] is the coefficient
/// of y^i in the j-th subresultant, for 0 <= j < min(deg_y f, deg_y g).
std::vector<std::vector<UniPoly>> subresultant_coefficients(const BiPoly& f, const BiPoly& g);

/// Greatest common divisor in Q[x, y], normalized to a monic leading
/// coefficient in the graded lexicographic order.
BiPoly bigcd(const BiPoly& f, const BiPoly& g);
/// Exact quotient f / g; throws DegenerateInput when g does not divide f.
BiPoly exact_divide(const BiPoly& f, const BiPoly& g);

}  // namespace nbif
