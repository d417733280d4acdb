#include "fockradial/radial.hpp"

#include "fockradial/fock.hpp"
#include "fockradial/hermite.hpp"
#include "fockradial/quadrature.hpp"
#include "fockradial/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fockradial {

NonRadialError::NonRadialError(RadialReport report)
  : std::runtime_error("input is not radial symmetric (odd mass " + std::to_string(report.odd_mass) + ")"),
    report_(std::move(report))
{
}

RadialReport radial_test(const HermiteExpansion& f, double tol)
{
  require(tol > 0.0, "radial_test: tol must be positive");
  RadialReport report;
  report.tol = tol;
  for (const auto& [alpha, a] : f.terms())
    if (alpha.has_odd_entry()) report.odd_mass = std::max(report.odd_mass, std::abs(a));

  const unsigned K = f.degree() / 2;
  RadialProfile profile{f.dim(), {}};
  bool shells_ok = true;
  for (unsigned k = 0; k <= K; ++k) {
    const auto shell = enumerate_shell(f.dim(), k);
    std::vector<Complex> v;
    v.reserve(shell.size());
    Complex mean{};
    double largest = 0.0;
    for (const auto& gamma : shell) {
      v.push_back(shell_weight(gamma) * f.coefficient(gamma.doubled()));
      mean += v.back();
      largest = std::max(largest, std::abs(v.back()));
    }
    mean /= static_cast<double>(v.size());
    double spread = 0.0;
    for (const auto& vg : v) spread = std::max(spread, std::abs(vg - mean));
    const double deviation = spread / std::max(largest, kShellFloor);
    report.shell_deviations.push_back(deviation);
    shells_ok = shells_ok && deviation <= tol;
    profile.c.push_back(mean);
  }
  report.is_radial = report.odd_mass <= tol && shells_ok;
  if (report.is_radial) report.profile = std::move(profile);
  return report;
}

RadialProfile extract_profile(const HermiteExpansion& f, double tol)
{
  auto report = radial_test(f, tol);
  if (!report.is_radial) throw NonRadialError(std::move(report));
  return *report.profile;
}

Complex eval_F0(const RadialProfile& p, Complex w)
{
  Complex sum{};
  Complex power = 1.0; // w^k / k!
  for (std::size_t k = 0; k < p.c.size(); ++k) {
    if (k > 0) power *= w / static_cast<double>(k);
    sum += p.c[k] * power;
  }
  return sum;
}

double unitary_pullback_residual(const HermiteExpansion& f, const OrthogonalMatrix& U,
                                 std::span<const ComplexPoint> points)
{
  require(U.dim() == f.dim(), "unitary_pullback_residual: matrix and expansion dimensions differ");
  require(!points.empty(), "unitary_pullback_residual: empty point set");
  const FockSeries F = bargmann_of_expansion(f);
  double worst = 0.0;
  for (const auto& z : points) {
    const Complex base = eval_fock_series(F, z);
    const Complex moved = eval_fock_series(F, U.apply(std::span<const Complex>(z)));
    worst = std::max(worst, std::abs(moved - base) / (1.0 + std::abs(base)));
  }
  return worst;
}

namespace {

unsigned default_truncation(double s, double y_max)
{
  const double base = 2.0 * s * y_max * y_max;
  if (base <= 0.0) return 1;
  const double log_base = std::log(base);
  const double threshold = std::log(1e-16);
  for (unsigned k = 1;; ++k)
    if (k * log_base - std::lgamma(2.0 * k + 1.0) < threshold) return k;
}

} // namespace

Complex eval_via_E0(const HermiteExpansion& f, std::span<const double> x, std::optional<unsigned> truncation)
{
  require(x.size() == f.dim(), "eval_via_E0: dimension mismatch");
  require(!truncation || *truncation >= 1, "eval_via_E0: truncation order must be >= 1");
  double s = 0.0;
  for (double t : x) s += t * t;
  const unsigned N = f.degree();

  // Grow the rule until it integrates polynomial part x truncated series exactly.
  std::size_t n = 32;
  unsigned K = truncation.value_or(1);
  QuadratureRule rule = gauss_hermite(n);
  for (int iter = 0; iter < 16; ++iter) {
    if (!truncation) K = default_truncation(s, rule.nodes.back());
    const std::size_t needed = (N + 2 * static_cast<std::size_t>(K) + 2) / 2;
    if (needed <= n) break;
    n = needed;
    rule = gauss_hermite(n);
  }

  // E0's series only involves y_1; the remaining axes see the bare weight.
  std::vector<Complex> first(N + 1);
  std::vector<Complex> other(N + 1);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double y = rule.nodes[i];
    const auto poly = hermite_polynomials(N, y);
    double series = 0.0;
    double term = 1.0; // (2 y^2 s)^k / (2k)!
    const double ratio = 2.0 * y * y * s;
    for (unsigned k = 0; k <= K; ++k) {
      if (k > 0) term *= ratio / ((2.0 * k - 1.0) * (2.0 * k));
      series += term;
    }
    for (unsigned k = 0; k <= N; ++k) {
      first[k] += rule.weights[i] * poly[k] * series;
      other[k] += rule.weights[i] * poly[k];
    }
  }
  Complex sum{};
  for (const auto& [alpha, a] : f.terms()) {
    Complex term = a * first[alpha[0]];
    for (std::size_t j = 1; j < alpha.dim(); ++j) term *= other[alpha[j]];
    sum += term;
  }
  const double d = static_cast<double>(f.dim());
  return std::pow(std::numbers::pi, -d / 4.0) * std::exp(-0.5 * s) * sum;
}

HermiteExpansion reduce_dimension(const HermiteExpansion& f, double tol)
{
  const RadialProfile p = extract_profile(f, tol);
  CoefficientMap::Terms terms;
  for (unsigned k = 0; k < p.c.size(); ++k)
    terms[MultiIndex{2 * k}] = p.c[k] * std::exp(0.5 * log_factorial(2 * k) - log_factorial(k));
  const unsigned degree = p.c.empty() ? 0u : 2u * static_cast<unsigned>(p.c.size() - 1);
  return HermiteExpansion(1, std::move(terms), std::max(kDefaultDegreeCap, degree));
}

HermiteExpansion synth_radial(const RadialProfile& p, std::size_t dim)
{
  require(dim >= 1, "synth_radial: dim must be >= 1");
  CoefficientMap::Terms terms;
  for (unsigned k = 0; k < p.c.size(); ++k)
    for (const auto& gamma : enumerate_shell(dim, k)) terms[gamma.doubled()] = p.c[k] / shell_weight(gamma);
  const unsigned degree = p.c.empty() ? 0u : 2u * static_cast<unsigned>(p.c.size() - 1);
  return HermiteExpansion(dim, std::move(terms), std::max(kDefaultDegreeCap, degree));
}

RadialProfile gaussian_profile(double a, std::size_t dim, unsigned K)
{
  require(a > 0.0, "gaussian_profile: a must be positive");
  require(dim >= 1, "gaussian_profile: dim must be >= 1");
  const double d = static_cast<double>(dim);
  const double lambda = (1.0 - 2.0 * a) / (2.0 * (2.0 * a + 1.0));
  const double C = std::pow(std::numbers::pi, d / 4.0) * std::pow(a + 0.5, -d / 2.0);
  RadialProfile p{dim, {}};
  double ck = C;
  for (unsigned k = 0; k <= K; ++k) {
    p.c.emplace_back(ck);
    ck *= lambda;
  }
  return p;
}

HermiteExpansion synth_gaussian(double a, std::size_t dim, unsigned K)
{
  return synth_radial(gaussian_profile(a, dim, K), dim);
}

HermiteExpansion preset_h0(std::size_t dim)
{
  return HermiteExpansion::basis(MultiIndex::zero(dim));
}

HermiteExpansion preset_h2_shell(std::size_t dim)
{
  require(dim >= 1, "preset_h2_shell: dim must be >= 1");
  CoefficientMap::TermList terms;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<unsigned> e(dim, 0u);
    e[j] = 2;
    terms.emplace_back(MultiIndex(std::move(e)), 1.0);
  }
  return HermiteExpansion(dim, terms);
}

} // namespace fockradial
