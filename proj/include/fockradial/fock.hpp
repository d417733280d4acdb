#pragma once

#include "fockradial/expansion.hpp"
#include "fockradial/quadrature.hpp"

#include <functional>
#include <span>

namespace fockradial {

/// Samples of f on the tensor Gauss-Hermite grid of order n, stored
/// Gaussian-factored: values()[i] = f(y_i) e^{|y_i|^2/2}. Integrals against
/// e^{-|y|^2}-type kernels then reduce to the plain Gauss-Hermite sum.
///
/// Grid order is row-major: the last coordinate varies fastest.
class SampledFunction {
public:
  SampledFunction(std::size_t dim, std::size_t order, std::vector<Complex> weighted_values);

  /// Samples f = sum a_alpha h_alpha through its polynomial part.
  static SampledFunction from_expansion(const HermiteExpansion& f, std::size_t order);

  /// Samples an arbitrary function handle; the e^{|y|^2/2} factor is applied here.
  static SampledFunction from_function(std::size_t dim, std::size_t order,
                                       const std::function<Complex(std::span<const double>)>& f);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return rule_.size(); }
  std::size_t grid_size() const noexcept { return values_.size(); }
  const QuadratureRule& rule() const noexcept { return rule_; }
  const std::vector<Complex>& values() const noexcept { return values_; }

  /// Grid node for a flat row-major index.
  RealPoint node(std::size_t flat_index) const;
  /// Product of per-axis weights at a flat index.
  double weight(std::size_t flat_index) const;

private:
  std::size_t dim_;
  QuadratureRule rule_;
  std::vector<Complex> values_;
};

/// V h_alpha = H_alpha, so the coefficient map carries over unchanged.
FockSeries bargmann_of_expansion(const HermiteExpansion& f);

/// Coefficient-level inverse of bargmann_of_expansion.
HermiteExpansion inverse_bargmann(const FockSeries& F);

/// sum a_alpha z^alpha / sqrt(alpha!).
Complex eval_fock_series(const FockSeries& F, std::span<const Complex> z);

/// pi^{-d/4} exp(-(<z,z> + |y|^2)/2 + sqrt(2) <z,y>), with <z,z> bilinear.
Complex bargmann_kernel(std::span<const Complex> z, std::span<const double> y);

/// (V f)(z) = int A_d(z,y) f(y) dy by tensor Gauss-Hermite quadrature.
Complex bargmann_of_samples(const SampledFunction& f, std::span<const Complex> z);

/// (F, G)_{A^2} = sum a_alpha conj(b_alpha).
Complex a2_inner(const FockSeries& F, const FockSeries& G);

/// (F, G)_{A^2} as the d mu integral: per coordinate Gauss-Laguerre of order
/// radial_order in r^2 and angular_order equispaced angles. Zero orders pick
/// the defaults N+2 and 2N+4, N the larger degree of F and G.
Complex a2_inner_quadrature(const FockSeries& F, const FockSeries& G, std::size_t radial_order = 0,
                            std::size_t angular_order = 0);

struct DecayReport {
  double worst_margin = 0.0;
  ComplexPoint worst_point;
  bool pass = false;
};

/// Samples margin(z) = C e^{|z|^2/2 - eps M_{s,t}(z)} - |F(z)| with
/// M_{s,t}(x + i xi) = |x|^{1/t} + |xi|^{1/s}; passes iff every margin is >= 0.
DecayReport decay_margin(const FockSeries& F, double s, double t, double eps, double C,
                         std::span<const ComplexPoint> samples);

} // namespace fockradial
