#pragma once

#include "fockradial/expansion.hpp"
#include "fockradial/fock.hpp"

#include <functional>
#include <span>

namespace fockradial {

/// (x, xi) in the phase space R^d x R^d.
struct PhasePoint {
  RealPoint x;
  RealPoint xi;

  PhasePoint() = default;
  PhasePoint(RealPoint x_, RealPoint xi_);
  std::size_t dim() const noexcept { return x.size(); }
};

/// Function handle on R^{2d}, called as F(x, xi).
using PhaseFunction = std::function<Complex(std::span<const double>, std::span<const double>)>;

/// phi = pi^{-d/4} e^{-|x|^2/2}, i.e. h_0 tensored d times.
HermiteExpansion gaussian_window(std::size_t dim);

/// Default Gauss-Hermite order for the STFT of a degree-N expansion.
std::size_t default_stft_order(unsigned degree);

/// V_phi f(x, xi) = (2 pi)^{-d/2} int f(y) phi(y - x) e^{-i <y, xi>} dy.
///
/// The two Gaussians combine to e^{-|y - x/2|^2 - |x|^2/4}, so the rule is
/// shifted to x/2 and only the polynomial part of f and the oscillatory
/// factor are evaluated at nodes. order = 0 picks default_stft_order.
Complex stft_gaussian(const HermiteExpansion& f, const PhasePoint& p, std::size_t order = 0);

/// Same integral from Gaussian-factored samples on the fixed grid. Accuracy
/// degrades once |x| approaches the extent of the grid.
Complex stft_gaussian(const SampledFunction& f, const PhasePoint& p);

/// (U F)(x, xi) = (2 pi)^{d/2} e^{(|x|^2 + |xi|^2)/2} e^{-i <x,xi>} F(sqrt2 x, -sqrt2 xi).
Complex uv_apply(const PhaseFunction& F, const PhasePoint& p);

/// V_phi f(x, xi) recovered from the Bargmann side:
/// (2 pi)^{-d/2} e^{-(|x|^2+|xi|^2)/4} e^{-i <x,xi>/2} F((x - i xi)/sqrt2).
Complex stft_from_bargmann(const FockSeries& F, const PhasePoint& p);

/// max_p |Vf(x + i xi) - U(V_phi f)(x, xi)| / (1 + |Vf(x + i xi)|).
double bridge_residual(const HermiteExpansion& f, std::span<const PhasePoint> points, std::size_t order = 0);

/// max_p |stft_from_bargmann(Vf, p) - stft_gaussian(f, p)| / (1 + |stft_gaussian(f, p)|).
double inverse_bridge_residual(const HermiteExpansion& f, std::span<const PhasePoint> points,
                               std::size_t order = 0);

} // namespace fockradial
