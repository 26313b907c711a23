#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nbif/atinfinity.hpp"

namespace nbif {

/// f^sigma = x^d (y + s)^{d_prime} F(x, y) with F = y^mu g(y) + x h(x, y), g(0) != 0.
struct ChartNormalForm {
    long d = 0;
    long d_prime = 0;
    Rational s;
    long mu = 0;
    BiPoly F;
};

/// Translated coordinates at a nonzero rational root s of chart.g.
ChartNormalForm chart_normal_form(const Chart& chart, const Rational& s);

struct LocalPolygon {
    std::vector<Exponent> support;   // of x^d F, sorted
    std::vector<Exponent> vertices;  // lower-left chain, top to bottom
    std::vector<Face> faces;         // compact faces, covectors with p, q > 0, counter-clockwise
};

LocalPolygon local_polygon(const ChartNormalForm& cnf);

struct Heights {
    long plus = 0;
    long zero = 0;
    long minus = 0;
};

Heights heights(const ChartNormalForm& cnf);

/// (mu - 1) summed over the nonzero real roots of p of multiplicity mu >= 2.
long multiple_root_excess(const UniPoly& p);

/// Throws WrongFaceClass unless face.cls is minus.
long mu_face(const Face& face);

struct Theorem5Bound {
    long sigma = 0;
    long epsilon = 0;
    long R_zero = 0;
    long mu_sum = 0;
    std::vector<std::pair<Covector, long>> mu_per_face;
    long total = 0;
};

/// |Sigma_f| + epsilon + R0 + sum of mu over the negative faces. Throws ConstantPolynomial.
Theorem5Bound theorem5_bound(const BiPoly& f);

/// Lambda of a compact local face, every multiple root counted as untreated.
/// Throws NonPositiveCovector.
long lambda_value(const Covector& Q, const ChartNormalForm& cnf);

struct LedgerEntry {
    std::string site;  // "global" for the first entry
    long depth = 0;
    Rational s;
    long mu = 0;
    Heights heights;
    long epsilon = 0;  // epsilon for the first entry, epsilon_sigma after
    std::vector<std::pair<Covector, long>> lambdas;
    long Lambda = 0;
};

struct Ledger {
    long sigma = 0;
    std::vector<LedgerEntry> entries;
    /// Multiple-root sites left untreated: irrational, or beyond the depth limit.
    long untreated = 0;
    long final_bound = 0;
};

constexpr long kMaxRefineDepth = 64;

/// Successive modifications at rational multiple roots, breadth first, down
/// to max_depth (capped at kMaxRefineDepth). Throws ConstantPolynomial.
Ledger refine_bound(const BiPoly& f, long max_depth);

}  // namespace nbif
