#include "fockradial/quadrature.hpp"

#include "fockradial/hermite.hpp"
#include "fockradial/types.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace fockradial {

namespace {

// Eigenvalues of the symmetric tridiagonal Jacobi matrix.
std::vector<double> jacobi_eigenvalues(const std::vector<double>& diag, const std::vector<double>& offdiag)
{
  const auto n = static_cast<Eigen::Index>(diag.size());
  Eigen::VectorXd d(n);
  Eigen::VectorXd e(n > 1 ? n - 1 : 0);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = diag[i];
  for (Eigen::Index i = 0; i + 1 < n; ++i) e(i) = offdiag[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Golub-Welsch eigen-solve failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// h_n(x) and h_{n-1}(x) through the function recurrence.
std::pair<double, double> hermite_pair(std::size_t n, double x)
{
  auto h = hermite_polynomials(static_cast<unsigned>(n), x);
  return {h[n], h[n - 1]};
}

} // namespace

QuadratureRule gauss_hermite(std::size_t n)
{
  require(n >= 1, "gauss_hermite: n must be >= 1");
  std::vector<double> diag(n, 0.0);
  std::vector<double> off(n - 1);
  for (std::size_t k = 1; k < n; ++k) off[k - 1] = std::sqrt(static_cast<double>(k) / 2.0);
  auto nodes = jacobi_eigenvalues(diag, off);

  const double nn = static_cast<double>(n);
  // Polish the non-negative half and mirror it; the middle node of an odd rule is 0.
  QuadratureRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  for (std::size_t i = n / 2; i < n; ++i) {
    std::size_t mirror = n - 1 - i;
    double x = (i == mirror) ? 0.0 : std::abs(nodes[i]);
    if (i != mirror) {
      // Newton on the orthonormal polynomial p_n, with p_n' = sqrt(2n) p_{n-1}.
      for (int it = 0; it < 3; ++it) {
        auto [pn, pn1] = hermite_pair(n, x);
        double step = pn / (std::sqrt(2.0 * nn) * pn1);
        x -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
      }
    }
    double pn1 = hermite_pair(n, x).second;
    // e^{-x^2}/(n h_{n-1}^2) with h_{n-1} = p_{n-1} e^{-x^2/2}.
    double w = 1.0 / (nn * pn1 * pn1);
    rule.nodes[i] = x;
    rule.nodes[mirror] = -x;
    rule.weights[i] = w;
    rule.weights[mirror] = w;
  }
  return rule;
}

QuadratureRule gauss_laguerre(std::size_t n)
{
  require(n >= 1, "gauss_laguerre: n must be >= 1");
  std::vector<double> diag(n);
  std::vector<double> off(n - 1);
  for (std::size_t k = 0; k < n; ++k) diag[k] = 2.0 * static_cast<double>(k) + 1.0;
  for (std::size_t k = 1; k < n; ++k) off[k - 1] = static_cast<double>(k);
  auto nodes = jacobi_eigenvalues(diag, off);

  // L_0..L_{n+1} at x through (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
  auto laguerre = [n](double x) {
    std::vector<double> L(n + 2);
    L[0] = 1.0;
    L[1] = 1.0 - x;
    for (std::size_t k = 1; k <= n; ++k) {
      const double kk = static_cast<double>(k);
      L[k + 1] = ((2.0 * kk + 1.0 - x) * L[k] - kk * L[k - 1]) / (kk + 1.0);
    }
    return L;
  };

  const double nn = static_cast<double>(n);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = nodes[i];
    for (int it = 0; it < 3; ++it) {
      auto L = laguerre(x);
      double deriv = nn * (L[n] - L[n - 1]) / x;
      double step = L[n] / deriv;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, x)) break;
    }
    auto L = laguerre(x);
    rule.nodes[i] = x;
    rule.weights[i] = x / ((nn + 1.0) * (nn + 1.0) * L[n + 1] * L[n + 1]);
  }
  return rule;
}

} // namespace fockradial
