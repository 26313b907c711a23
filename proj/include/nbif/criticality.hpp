#pragma once

#include <vector>

#include "nbif/bivar.hpp"

namespace nbif {

/// Real critical values of f, exact and deduplicated, ascending.
std::vector<RealAlgebraicNumber> critical_values(const BiPoly& f);

/// True iff {f_x = f_y = 0} is a finite subset of R^2.
bool has_isolated_singularities(const BiPoly& f);

/// Values of f at the real common zeros of a and b, which must be coprime.
std::vector<RealAlgebraicNumber> values_on_common_zeros(const BiPoly& a, const BiPoly& b, const BiPoly& f);

/// True iff the real zero set of the square-free polynomial c contains a
/// one-dimensional branch.
bool has_real_branch(const BiPoly& c);

}  // namespace nbif
