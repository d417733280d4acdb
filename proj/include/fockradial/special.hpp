#pragma once

#include "fockradial/multi_index.hpp"

namespace fockradial {

/// log(k!) via lgamma.
double log_factorial(unsigned k);

/// log(alpha!) = sum_j log(alpha_j!).
double log_factorial(const MultiIndex& alpha);

/// 1/sqrt(alpha!), evaluated in log space.
double inv_sqrt_factorial(const MultiIndex& alpha);

/// gamma!/sqrt((2 gamma)!), the weight that turns (f, h_{2 gamma}) into the
/// shell coefficient of a radial function. Log space throughout, so degrees
/// well beyond the double-precision factorial range are fine.
double shell_weight(const MultiIndex& gamma);

} // namespace fockradial
