#pragma once

#include <cstddef>
#include <vector>

namespace fockradial {

/// n-point Gauss rule. Nodes ascending, weights positive.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Gauss-Hermite rule for the weight e^{-x^2} on R: exact for x^m, m <= 2n-1.
///
/// Nodes come from the Golub-Welsch eigenproblem and are then polished by
/// Newton steps on h_n. Weights use the Christoffel-Darboux form
/// w_i = e^{-x_i^2} / (n h_{n-1}(x_i)^2), which keeps small tail weights
/// relatively accurate. The rule is exactly symmetric about 0.
QuadratureRule gauss_hermite(std::size_t n);

/// Gauss-Laguerre rule for the weight e^{-x} on [0, inf).
QuadratureRule gauss_laguerre(std::size_t n);

} // namespace fockradial
