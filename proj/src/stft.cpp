#include "fockradial/stft.hpp"

#include "fockradial/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fockradial {

namespace {

constexpr Complex kI{0.0, 1.0};

double squared_norm(std::span<const double> v)
{
  double s = 0.0;
  for (double t : v) s += t * t;
  return s;
}

double dot(std::span<const double> a, std::span<const double> b)
{
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

} // namespace

PhasePoint::PhasePoint(RealPoint x_, RealPoint xi_) : x(std::move(x_)), xi(std::move(xi_))
{
  require(x.size() == xi.size(), "PhasePoint: x and xi differ in length");
}

HermiteExpansion gaussian_window(std::size_t dim)
{
  require(dim >= 1, "gaussian_window: dim must be >= 1");
  return HermiteExpansion::basis(MultiIndex::zero(dim));
}

std::size_t default_stft_order(unsigned degree)
{
  return std::max<std::size_t>(32, 2 * static_cast<std::size_t>(degree) + 8);
}

Complex stft_gaussian(const HermiteExpansion& f, const PhasePoint& p, std::size_t order)
{
  require(p.dim() == f.dim(), "stft_gaussian: dimension mismatch");
  const std::size_t n = order ? order : default_stft_order(f.degree());
  const auto rule = gauss_hermite(n);
  const unsigned N = f.degree();
  const std::size_t d = f.dim();

  // The integrand factors per axis for every term, so gather
  // m_j[k] = sum_i w_i p_k(u_i + x_j/2) e^{-i (u_i + x_j/2) xi_j}.
  std::vector<std::vector<Complex>> moments(d, std::vector<Complex>(N + 1));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const double y = rule.nodes[i] + 0.5 * p.x[j];
      const auto poly = hermite_polynomials(N, y);
      const Complex phase = rule.weights[i] * std::exp(-kI * (y * p.xi[j]));
      for (unsigned k = 0; k <= N; ++k) moments[j][k] += poly[k] * phase;
    }
  }
  Complex sum{};
  for (const auto& [alpha, a] : f.terms()) {
    Complex term = a;
    for (std::size_t j = 0; j < d; ++j) term *= moments[j][alpha[j]];
    sum += term;
  }
  const double dd = static_cast<double>(d);
  return std::pow(2.0 * std::numbers::pi, -dd / 2.0) * std::pow(std::numbers::pi, -dd / 4.0) *
         std::exp(-0.25 * squared_norm(p.x)) * sum;
}

Complex stft_gaussian(const SampledFunction& f, const PhasePoint& p)
{
  require(p.dim() == f.dim(), "stft_gaussian: dimension mismatch");
  const std::size_t d = f.dim();
  const std::size_t n = f.order();
  const auto& rule = f.rule();
  // f(y) phi(y - x) = g(y) e^{-|y|^2} pi^{-d/4} e^{<x,y> - |x|^2/2}.
  std::vector<std::vector<Complex>> factors(d, std::vector<Complex>(n));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const double y = rule.nodes[i];
      factors[j][i] = rule.weights[i] * std::exp(Complex(p.x[j] * y, -p.xi[j] * y));
    }
  Complex sum{};
  std::vector<std::size_t> digits(d);
  const auto& values = f.values();
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    std::size_t rest = flat;
    Complex k = values[flat];
    for (std::size_t j = d; j-- > 0;) {
      k *= factors[j][rest % n];
      rest /= n;
    }
    sum += k;
  }
  const double dd = static_cast<double>(d);
  return std::pow(2.0 * std::numbers::pi, -dd / 2.0) * std::pow(std::numbers::pi, -dd / 4.0) *
         std::exp(-0.5 * squared_norm(p.x)) * sum;
}

Complex uv_apply(const PhaseFunction& F, const PhasePoint& p)
{
  const std::size_t d = p.dim();
  RealPoint x(d);
  RealPoint xi(d);
  for (std::size_t j = 0; j < d; ++j) {
    x[j] = std::sqrt(2.0) * p.x[j];
    xi[j] = -std::sqrt(2.0) * p.xi[j];
  }
  const double dd = static_cast<double>(d);
  return std::pow(2.0 * std::numbers::pi, dd / 2.0) *
         std::exp(0.5 * (squared_norm(p.x) + squared_norm(p.xi))) * std::exp(-kI * dot(p.x, p.xi)) * F(x, xi);
}

Complex stft_from_bargmann(const FockSeries& F, const PhasePoint& p)
{
  require(p.dim() == F.dim(), "stft_from_bargmann: dimension mismatch");
  const std::size_t d = p.dim();
  ComplexPoint z(d);
  for (std::size_t j = 0; j < d; ++j) z[j] = Complex(p.x[j], -p.xi[j]) / std::sqrt(2.0);
  const double dd = static_cast<double>(d);
  return std::pow(2.0 * std::numbers::pi, -dd / 2.0) *
         std::exp(-0.25 * (squared_norm(p.x) + squared_norm(p.xi))) * std::exp(-0.5 * kI * dot(p.x, p.xi)) *
         eval_fock_series(F, z);
}

double bridge_residual(const HermiteExpansion& f, std::span<const PhasePoint> points, std::size_t order)
{
  require(!points.empty(), "bridge_residual: empty point set");
  const FockSeries F = bargmann_of_expansion(f);
  const PhaseFunction stft = [&](std::span<const double> x, std::span<const double> xi) {
    return stft_gaussian(f, PhasePoint(RealPoint(x.begin(), x.end()), RealPoint(xi.begin(), xi.end())), order);
  };
  double worst = 0.0;
  for (const auto& p : points) {
    require(p.dim() == f.dim(), "bridge_residual: dimension mismatch");
    ComplexPoint z(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) z[j] = Complex(p.x[j], p.xi[j]);
    const Complex lhs = eval_fock_series(F, z);
    worst = std::max(worst, std::abs(lhs - uv_apply(stft, p)) / (1.0 + std::abs(lhs)));
  }
  return worst;
}

double inverse_bridge_residual(const HermiteExpansion& f, std::span<const PhasePoint> points, std::size_t order)
{
  require(!points.empty(), "inverse_bridge_residual: empty point set");
  const FockSeries F = bargmann_of_expansion(f);
  double worst = 0.0;
  for (const auto& p : points) {
    const Complex direct = stft_gaussian(f, p, order);
    worst = std::max(worst, std::abs(stft_from_bargmann(F, p) - direct) / (1.0 + std::abs(direct)));
  }
  return worst;
}

} // namespace fockradial
