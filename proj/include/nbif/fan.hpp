#pragma once

#include <cstddef>
#include <vector>

#include "nbif/newton.hpp"

namespace nbif {

/// Counter-clockwise covectors starting (1, 0), (0, 1) with unimodular
/// consecutive cones, the wrap-around cone included.
struct AdmissibleFan {
    std::vector<Covector> rays;

    std::size_t size() const { return rays.size(); }
    const Covector& ray(std::size_t k) const { return rays[k % rays.size()]; }
    /// Index of P among the rays; throws InvalidCovector when absent.
    std::size_t index_of(const Covector& P) const;
};

AdmissibleFan complete_fan(const std::vector<Covector>& required);

/// Inserts rays between consecutive entries of a non-cyclic chain until every
/// consecutive determinant is 1. Requires positive consecutive determinants.
std::vector<Covector> unimodular_chain(const std::vector<Covector>& chain);

/// f(u, v) = u^{d_left} v^{d_right} (g(v) + u h(u, v)) on the cone (left, right).
struct Chart {
    std::size_t index = 0;
    MonomialMap map{1, 0, 0, 1};
    long d_left = 0;
    long d_right = 0;
    UniPoly g;
    BiPoly h;

    /// u^{d_left} v^{d_right} (g(v) + u h(u, v)) as a Laurent polynomial.
    BiPoly reconstruct() const;
};

Chart chart_for_cone(const BiPoly& f, const Covector& left, const Covector& right);
/// Chart of the cone (rays[k], rays[k + 1]), wrapping at the end.
Chart chart_expansion(const BiPoly& f, const AdmissibleFan& fan, std::size_t k);

}  // namespace nbif
