#pragma once

#include "fockradial/multi_index.hpp"
#include "fockradial/types.hpp"

#include <span>
#include <vector>

namespace fockradial {

/// h_0(t), ..., h_max_order(t) for the L^2-normalized Hermite functions,
/// via h_{k+1} = sqrt(2/(k+1)) t h_k - sqrt(k/(k+1)) h_{k-1}, h_0 = pi^{-1/4} e^{-t^2/2}.
std::vector<double> hermite_functions(unsigned max_order, double t);

/// Same recurrence seeded with pi^{-1/4}: the polynomials p_k = h_k e^{t^2/2},
/// orthonormal against e^{-t^2}. Avoids the Gaussian underflow for large |t|.
std::vector<double> hermite_polynomials(unsigned max_order, double t);

/// Single 1-D Hermite function h_k(t).
double hermite_function(unsigned k, double t);

/// h_alpha(x) = prod_j h_{alpha_j}(x_j).
double hermite_eval(const MultiIndex& alpha, std::span<const double> x);

/// Per-axis tables of hermite_polynomials, one row per coordinate of x.
std::vector<std::vector<double>> hermite_polynomial_tables(unsigned max_order, std::span<const double> x);

} // namespace fockradial
