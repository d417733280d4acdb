#pragma once

#include "fockradial/expansion.hpp"
#include "fockradial/orthogonal.hpp"

#include <optional>
#include <span>
#include <stdexcept>

namespace fockradial {

inline constexpr double kDefaultRadialTol = 1e-9;
/// Lower bound on the shell magnitude used to normalize shell deviations.
inline constexpr double kShellFloor = 1e-14;

/// Shell coefficients c_0..c_K of F(z) = sum_k c_k sum_{|gamma|=k} z^{2 gamma}/gamma!.
/// Equivalently F(z) = F0(<z,z>) with F0(w) = sum_k c_k w^k / k!.
struct RadialProfile {
  std::size_t origin_dim = 1;
  std::vector<Complex> c;
};

struct RadialReport {
  bool is_radial = false;
  /// max |a_alpha| over alpha with an odd entry.
  double odd_mass = 0.0;
  /// Per shell k: max_gamma |v_gamma - mean| / max(max_gamma |v_gamma|, kShellFloor).
  std::vector<double> shell_deviations;
  std::optional<RadialProfile> profile;
  double tol = kDefaultRadialTol;
};

/// Thrown by operations that need a radial input and did not get one.
class NonRadialError : public std::runtime_error {
public:
  explicit NonRadialError(RadialReport report);
  const RadialReport& report() const noexcept { return report_; }

private:
  RadialReport report_;
};

/// Checks that odd-index coefficients vanish and that
/// v_gamma = gamma!/sqrt((2 gamma)!) a_{2 gamma} is constant on each shell |gamma| = k.
RadialReport radial_test(const HermiteExpansion& f, double tol = kDefaultRadialTol);

/// Shell means c_k, k = 0..floor(deg f / 2). Throws NonRadialError.
RadialProfile extract_profile(const HermiteExpansion& f, double tol = kDefaultRadialTol);

/// F0(w) = sum_k c_k w^k / k!.
Complex eval_F0(const RadialProfile& p, Complex w);

/// max_z |Vf(Uz) - Vf(z)| / (1 + |Vf(z)|).
double unitary_pullback_residual(const HermiteExpansion& f, const OrthogonalMatrix& U,
                                 std::span<const ComplexPoint> points);

/// <f, E0(|x|^2, .)> with E0(s, y) = pi^{-d/4} e^{-(s + |y|^2)/2} sum_{k<=K} (2 y_1^2 s)^k / (2k)!.
/// For radial f this equals Vf(x). Without a truncation order, K is the
/// smallest k with (2 |x|^2 y_max^2)^k / (2k)! < 1e-16, y_max the largest node,
/// and the rule is grown until it integrates the truncated series exactly.
Complex eval_via_E0(const HermiteExpansion& f, std::span<const double> x,
                    std::optional<unsigned> truncation = std::nullopt);

/// The 1-D f0 with V_1 f0(z) = F0(z^2): b_{2k} = c_k sqrt((2k)!) / k!. Throws NonRadialError.
HermiteExpansion reduce_dimension(const HermiteExpansion& f, double tol = kDefaultRadialTol);

/// a_{2 gamma} = c_{|gamma|} sqrt((2 gamma)!) / gamma!; inverse of extract_profile.
HermiteExpansion synth_radial(const RadialProfile& p, std::size_t dim);

/// Shell profile of e^{-a |x|^2}: c_k = C lambda^k, lambda = (1 - 2a)/(2(2a + 1)),
/// C = pi^{d/4} (a + 1/2)^{-d/2}.
RadialProfile gaussian_profile(double a, std::size_t dim, unsigned K);

/// Degree-2K truncation of e^{-a |x|^2}.
HermiteExpansion synth_gaussian(double a, std::size_t dim, unsigned K);

/// h_0 tensored dim times.
HermiteExpansion preset_h0(std::size_t dim);
/// sum_j h_{2 e_j}.
HermiteExpansion preset_h2_shell(std::size_t dim);

} // namespace fockradial
