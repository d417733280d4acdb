#include "fockradial/fock.hpp"

#include "fockradial/hermite.hpp"
#include "fockradial/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fockradial {

namespace {

std::size_t checked_grid_size(std::size_t dim, std::size_t n)
{
  std::size_t size = 1;
  for (std::size_t j = 0; j < dim; ++j) size *= n;
  return size;
}

// Row-major digits of a flat grid index.
void unflatten(std::size_t flat, std::size_t n, std::vector<std::size_t>& digits)
{
  for (std::size_t j = digits.size(); j-- > 0;) {
    digits[j] = flat % n;
    flat /= n;
  }
}

// 1/sqrt(k!) for k <= max_degree; shared table for the default degree range.
std::vector<double> inv_sqrt_factorials(unsigned max_degree)
{
  static const std::vector<double> cached = [] {
    std::vector<double> v(kDefaultDegreeCap * 4 + 1);
    for (unsigned k = 0; k < v.size(); ++k) v[k] = std::exp(-0.5 * log_factorial(k));
    return v;
  }();
  if (max_degree < cached.size()) return {cached.begin(), cached.begin() + max_degree + 1};
  std::vector<double> v(max_degree + 1);
  for (unsigned k = 0; k <= max_degree; ++k) v[k] = std::exp(-0.5 * log_factorial(k));
  return v;
}

// w^k / sqrt(k!) for k = 0..max_degree, powers by repeated multiplication.
std::vector<Complex> scaled_powers(Complex w, const std::vector<double>& scale)
{
  std::vector<Complex> row(scale.size());
  Complex power = 1.0;
  for (std::size_t k = 0; k < scale.size(); ++k) {
    row[k] = power * scale[k];
    power *= w;
  }
  return row;
}

Complex bilinear(std::span<const Complex> z, std::span<const Complex> w)
{
  Complex s{};
  for (std::size_t j = 0; j < z.size(); ++j) s += z[j] * w[j];
  return s;
}

} // namespace

SampledFunction::SampledFunction(std::size_t dim, std::size_t order, std::vector<Complex> weighted_values)
  : dim_(dim), rule_(gauss_hermite(order)), values_(std::move(weighted_values))
{
  require(dim_ >= 1, "SampledFunction: dim must be >= 1");
  require(values_.size() == checked_grid_size(dim_, order),
          "SampledFunction: expected " + std::to_string(checked_grid_size(dim_, order)) + " samples, got " +
              std::to_string(values_.size()));
  for (const auto& v : values_)
    require(std::isfinite(v.real()) && std::isfinite(v.imag()), "SampledFunction: non-finite sample");
}

SampledFunction SampledFunction::from_expansion(const HermiteExpansion& f, std::size_t order)
{
  const auto rule = gauss_hermite(order);
  const std::size_t size = checked_grid_size(f.dim(), order);
  // Per-node polynomial tables, shared across axes.
  std::vector<std::vector<double>> poly;
  poly.reserve(order);
  for (double y : rule.nodes) poly.push_back(hermite_polynomials(f.degree(), y));

  std::vector<Complex> values(size);
  std::vector<std::size_t> digits(f.dim());
  for (std::size_t flat = 0; flat < size; ++flat) {
    unflatten(flat, order, digits);
    Complex s{};
    for (const auto& [alpha, a] : f.terms()) {
      double v = 1.0;
      for (std::size_t j = 0; j < f.dim(); ++j) v *= poly[digits[j]][alpha[j]];
      s += a * v;
    }
    values[flat] = s;
  }
  return SampledFunction(f.dim(), order, std::move(values));
}

SampledFunction SampledFunction::from_function(std::size_t dim, std::size_t order,
                                               const std::function<Complex(std::span<const double>)>& f)
{
  const auto rule = gauss_hermite(order);
  const std::size_t size = checked_grid_size(dim, order);
  std::vector<Complex> values(size);
  std::vector<std::size_t> digits(dim);
  RealPoint y(dim);
  for (std::size_t flat = 0; flat < size; ++flat) {
    unflatten(flat, order, digits);
    double r2 = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      y[j] = rule.nodes[digits[j]];
      r2 += y[j] * y[j];
    }
    values[flat] = f(y) * std::exp(0.5 * r2);
  }
  return SampledFunction(dim, order, std::move(values));
}

RealPoint SampledFunction::node(std::size_t flat_index) const
{
  std::vector<std::size_t> digits(dim_);
  unflatten(flat_index, order(), digits);
  RealPoint y(dim_);
  for (std::size_t j = 0; j < dim_; ++j) y[j] = rule_.nodes[digits[j]];
  return y;
}

double SampledFunction::weight(std::size_t flat_index) const
{
  std::vector<std::size_t> digits(dim_);
  unflatten(flat_index, order(), digits);
  double w = 1.0;
  for (auto d : digits) w *= rule_.weights[d];
  return w;
}

FockSeries bargmann_of_expansion(const HermiteExpansion& f)
{
  return FockSeries(f.dim(), f.terms(), f.degree_cap());
}

HermiteExpansion inverse_bargmann(const FockSeries& F)
{
  return HermiteExpansion(F.dim(), F.terms(), F.degree_cap());
}

Complex eval_fock_series(const FockSeries& F, std::span<const Complex> z)
{
  require(z.size() == F.dim(), "eval_fock_series: point has dimension " + std::to_string(z.size()) +
                                   ", series has " + std::to_string(F.dim()));
  const auto scale = inv_sqrt_factorials(F.degree());
  std::vector<std::vector<Complex>> tables;
  tables.reserve(z.size());
  for (const auto& zj : z) tables.push_back(scaled_powers(zj, scale));
  Complex s{};
  for (const auto& [alpha, a] : F.terms()) {
    Complex m = a;
    for (std::size_t j = 0; j < alpha.dim(); ++j) m *= tables[j][alpha[j]];
    s += m;
  }
  return s;
}

Complex bargmann_kernel(std::span<const Complex> z, std::span<const double> y)
{
  require(z.size() == y.size(), "bargmann_kernel: dimension mismatch");
  const double d = static_cast<double>(z.size());
  Complex zz{};
  Complex zy{};
  double yy = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    zz += z[j] * z[j];
    zy += z[j] * y[j];
    yy += y[j] * y[j];
  }
  return std::pow(std::numbers::pi, -d / 4.0) * std::exp(-0.5 * (zz + yy) + std::sqrt(2.0) * zy);
}

Complex bargmann_of_samples(const SampledFunction& f, std::span<const Complex> z)
{
  require(z.size() == f.dim(), "bargmann_of_samples: dimension mismatch");
  const std::size_t n = f.order();
  const auto& rule = f.rule();
  const double d = static_cast<double>(f.dim());

  // A_d(z,y) f(y) = pi^{-d/4} e^{-<z,z>/2} prod_j e^{sqrt2 z_j y_j} * g(y) e^{-|y|^2}.
  std::vector<std::vector<Complex>> factors(f.dim(), std::vector<Complex>(n));
  for (std::size_t j = 0; j < f.dim(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      factors[j][i] = rule.weights[i] * std::exp(std::sqrt(2.0) * z[j] * rule.nodes[i]);

  Complex sum{};
  std::vector<std::size_t> digits(f.dim());
  const auto& values = f.values();
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    unflatten(flat, n, digits);
    Complex k = values[flat];
    for (std::size_t j = 0; j < f.dim(); ++j) k *= factors[j][digits[j]];
    sum += k;
  }
  return std::pow(std::numbers::pi, -d / 4.0) * std::exp(-0.5 * bilinear(z, z)) * sum;
}

Complex a2_inner(const FockSeries& F, const FockSeries& G)
{
  require(F.dim() == G.dim(), "a2_inner: dimension mismatch");
  Complex s{};
  for (const auto& [alpha, a] : F.terms()) {
    auto it = G.terms().find(alpha);
    if (it != G.terms().end()) s += a * std::conj(it->second);
  }
  return s;
}

Complex a2_inner_quadrature(const FockSeries& F, const FockSeries& G, std::size_t radial_order,
                            std::size_t angular_order)
{
  require(F.dim() == G.dim(), "a2_inner_quadrature: dimension mismatch");
  const unsigned N = std::max(F.degree(), G.degree());
  const std::size_t m = radial_order ? radial_order : N + 2;
  const std::size_t q = angular_order ? angular_order : 2 * N + 4;
  const auto laguerre = gauss_laguerre(m);

  // One complex coordinate: d mu_1 = pi^{-1} e^{-|w|^2} d lambda = (2 pi)^{-1} e^{-rho} d rho d theta.
  std::vector<Complex> points;
  std::vector<double> weights;
  points.reserve(m * q);
  weights.reserve(m * q);
  for (std::size_t a = 0; a < m; ++a) {
    const double r = std::sqrt(laguerre.nodes[a]);
    for (std::size_t b = 0; b < q; ++b) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(b) / static_cast<double>(q);
      points.push_back(std::polar(r, theta));
      weights.push_back(laguerre.weights[a] / static_cast<double>(q));
    }
  }

  // Both series are evaluated from per-axis tables of w^k/sqrt(k!) at the 1-D points.
  const auto scale = inv_sqrt_factorials(N);
  std::vector<std::vector<Complex>> tables;
  tables.reserve(points.size());
  for (const auto& w : points) tables.push_back(scaled_powers(w, scale));

  const std::size_t dim = F.dim();
  const std::size_t per_axis = points.size();
  const std::size_t total = checked_grid_size(dim, per_axis);
  std::vector<std::size_t> digits(dim);
  auto eval = [&](const FockSeries& S) {
    Complex v{};
    for (const auto& [alpha, a] : S.terms()) {
      Complex m = a;
      for (std::size_t j = 0; j < dim; ++j) m *= tables[digits[j]][alpha[j]];
      v += m;
    }
    return v;
  };
  Complex sum{};
  for (std::size_t flat = 0; flat < total; ++flat) {
    unflatten(flat, per_axis, digits);
    double w = 1.0;
    for (std::size_t j = 0; j < dim; ++j) w *= weights[digits[j]];
    sum += w * eval(F) * std::conj(eval(G));
  }
  return sum;
}

DecayReport decay_margin(const FockSeries& F, double s, double t, double eps, double C,
                         std::span<const ComplexPoint> samples)
{
  require(!samples.empty(), "decay_margin: empty sample set");
  require(s > 0.5 && t > 0.5, "decay_margin: s and t must exceed 1/2");
  require(eps > 0.0 && C > 0.0, "decay_margin: eps and C must be positive");
  DecayReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (const auto& z : samples) {
    double x2 = 0.0;
    double xi2 = 0.0;
    for (const auto& zj : z) {
      x2 += zj.real() * zj.real();
      xi2 += zj.imag() * zj.imag();
    }
    const double M = std::pow(std::sqrt(x2), 1.0 / t) + std::pow(std::sqrt(xi2), 1.0 / s);
    const double margin = C * std::exp(0.5 * (x2 + xi2) - eps * M) - std::abs(eval_fock_series(F, z));
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_point = z;
    }
  }
  report.pass = report.worst_margin >= 0.0;
  return report;
}

} // namespace fockradial
