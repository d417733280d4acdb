#include "fockradial/verify.hpp"

#include "fockradial/fock.hpp"
#include "fockradial/radial.hpp"
#include "fockradial/rng.hpp"
#include "fockradial/special.hpp"
#include "fockradial/stft.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace fockradial {

bool CheckResult::pass() const
{
  return std::all_of(measurements.begin(), measurements.end(), [](const Measurement& m) { return m.pass(); });
}

bool VerificationReport::pass() const
{
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

namespace {

Complex random_complex(Rng& rng)
{
  return {rng.normal(), rng.normal()};
}

// Uniform in the disk |w| <= radius.
Complex random_in_disk(Rng& rng, double radius)
{
  const double r = radius * std::sqrt(rng.uniform());
  return std::polar(r, 2.0 * std::numbers::pi * rng.uniform());
}

ComplexPoint random_point(Rng& rng, std::size_t dim, double radius)
{
  ComplexPoint z(dim);
  for (auto& zj : z) zj = random_in_disk(rng, radius);
  return z;
}

HermiteExpansion random_expansion(Rng& rng, std::size_t dim, unsigned degree)
{
  CoefficientMap::Terms terms;
  for (const auto& alpha : enumerate_multi_indices(dim, degree)) terms[alpha] = random_complex(rng);
  return HermiteExpansion(dim, std::move(terms));
}

std::vector<double> linspace(double lo, double hi, std::size_t count)
{
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i)
    v[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return v;
}

Complex bilinear_square(const ComplexPoint& z)
{
  Complex s{};
  for (const auto& zj : z) s += zj * zj;
  return s;
}

Complex monomial_image(const MultiIndex& alpha, const ComplexPoint& z)
{
  Complex m = 1.0;
  for (std::size_t j = 0; j < alpha.dim(); ++j)
    for (unsigned k = 0; k < alpha[j]; ++k) m *= z[j];
  return m * inv_sqrt_factorial(alpha);
}

std::vector<PhasePoint> phase_grid(std::size_t dim)
{
  std::vector<PhasePoint> points;
  for (double a : linspace(-1.5, 1.5, 5))
    for (double b : linspace(-1.5, 1.5, 5)) {
      if (dim == 1)
        points.emplace_back(RealPoint{a}, RealPoint{b});
      else
        points.emplace_back(RealPoint{a, -0.5 * a}, RealPoint{0.5 * b, b});
    }
  return points;
}

// Uniform modulus in [lo, hi], uniform argument.
Complex random_in_annulus(Rng& rng, double lo, double hi)
{
  return std::polar(rng.uniform(lo, hi), 2.0 * std::numbers::pi * rng.uniform());
}

CheckResult check_monomial(Rng& rng)
{
  CheckResult r{"monomial", "kernel-integral V h_alpha vs z^alpha/sqrt(alpha!), d<=3, |alpha|<=8, n=24", {}};
  for (std::size_t d = 1; d <= 3; ++d) {
    // Relative error is only meaningful away from the coordinate hyperplanes, where
    // z^alpha is not tiny; the full disk is covered by the mixed error below.
    std::vector<ComplexPoint> annulus;
    std::vector<ComplexPoint> disk;
    for (int i = 0; i < 20; ++i) {
      ComplexPoint z(d);
      for (auto& zj : z) zj = random_in_annulus(rng, 0.5, 2.0);
      annulus.push_back(std::move(z));
      disk.push_back(random_point(rng, d, 2.0));
    }
    double relative = 0.0;
    double mixed = 0.0;
    for (const auto& alpha : enumerate_multi_indices(d, 8)) {
      const auto samples = SampledFunction::from_expansion(HermiteExpansion::basis(alpha), 24);
      for (const auto& z : annulus) {
        const Complex exact = monomial_image(alpha, z);
        relative = std::max(relative, std::abs(bargmann_of_samples(samples, z) - exact) / std::abs(exact));
      }
      for (const auto& z : disk) {
        const Complex exact = monomial_image(alpha, z);
        mixed = std::max(mixed, std::abs(bargmann_of_samples(samples, z) - exact) / std::max(1.0, std::abs(exact)));
      }
    }
    r.measurements.push_back({fmt::format("d={} max rel err", d), relative, 1e-8, false});
    r.measurements.push_back({fmt::format("d={} disk err/max(1,|exact|)", d), mixed, 1e-8, false});
  }
  return r;
}

CheckResult check_isometry(Rng& rng)
{
  CheckResult r{"isometry", "||f||^2_L2 vs quadrature ||Vf||^2_A2, 20 random f, d=2, N=10", {}};
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_expansion(rng, 2, 10);
    const auto F = bargmann_of_expansion(f);
    const double l2 = l2_inner(f, f).real();
    worst = std::max(worst, std::abs(l2 - a2_inner_quadrature(F, F).real()) / (1.0 + l2));
  }
  r.measurements.push_back({"max |diff|/(1+||f||^2)", worst, 1e-8, false});
  return r;
}

CheckResult check_normalization(Rng&)
{
  CheckResult r{"normalization", "d mu is a probability measure: (1,1)_A2 by quadrature, d<=3", {}};
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto one = FockSeries::basis(MultiIndex::zero(d));
    r.measurements.push_back(
        {fmt::format("d={} |(1,1)-1|", d), std::abs(a2_inner_quadrature(one, one) - 1.0), 1e-10, false});
  }
  return r;
}

CheckResult check_radial_positive(Rng& rng)
{
  CheckResult r{"radial-positive", "h_(2,0)+h_(0,2): radial test, pullback invariance, F0 consistency", {}};
  const auto f = preset_h2_shell(2);
  const auto report = radial_test(f, 1e-10);
  double shell = 0.0;
  for (double v : report.shell_deviations) shell = std::max(shell, v);
  r.measurements.push_back({"odd mass", report.odd_mass, 1e-10, false});
  r.measurements.push_back({"max shell deviation", shell, 1e-10, false});
  r.measurements.push_back({"is_radial", report.is_radial ? 1.0 : 0.0, 1.0, true});

  std::vector<ComplexPoint> points;
  for (int i = 0; i < 10; ++i) points.push_back(random_point(rng, 2, 2.0));
  double pullback = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto U = i == 0 ? OrthogonalMatrix::reflection(2) : OrthogonalMatrix::random(2, rng);
    pullback = std::max(pullback, unitary_pullback_residual(f, U, points));
  }
  r.measurements.push_back({"pullback residual, 10 U", pullback, 1e-9, false});

  const auto F = bargmann_of_expansion(f);
  const RadialProfile profile = report.profile.value_or(RadialProfile{2, {}});
  double consistency = 0.0;
  for (const auto& z : points)
    consistency = std::max(consistency, std::abs(eval_fock_series(F, z) - eval_F0(profile, bilinear_square(z))));
  r.measurements.push_back({"|Vf(z) - F0(<z,z>)|", consistency, 1e-10, false});
  return r;
}

CheckResult check_radial_negative(Rng&)
{
  CheckResult r{"radial-negative", "h_(1,0) and h_(2,0)-h_(0,2) are rejected", {}};
  const auto odd = radial_test(HermiteExpansion::basis({1, 0}), 1e-10);
  r.measurements.push_back({"h_(1,0) is_radial", odd.is_radial ? 1.0 : 0.0, 0.0, false});
  r.measurements.push_back({"h_(1,0) |odd_mass - 1|", std::abs(odd.odd_mass - 1.0), 1e-12, false});

  const HermiteExpansion diff(2, CoefficientMap::TermList{{{2, 0}, 1.0}, {{0, 2}, -1.0}});
  const auto rep = radial_test(diff, 1e-10);
  r.measurements.push_back({"h20-h02 is_radial", rep.is_radial ? 1.0 : 0.0, 0.0, false});
  r.measurements.push_back({"h20-h02 |dev_1 - 1|", std::abs(rep.shell_deviations.at(1) - 1.0), 1e-12, false});
  const ComplexPoint z{1.0, 0.0};
  const double residual = unitary_pullback_residual(diff, OrthogonalMatrix::plane_rotation(2, std::numbers::pi / 4),
                                                    std::span<const ComplexPoint>(&z, 1));
  r.measurements.push_back({"h20-h02 pullback at 45deg", residual, 0.1, true});
  return r;
}

CheckResult check_reduction(Rng& rng)
{
  CheckResult r{"reduction", "f -> f0 with V_1 f0(z) = F0(z^2)", {}};
  const auto f0 = reduce_dimension(preset_h2_shell(2), 1e-10);
  const auto h2 = HermiteExpansion::basis({2});
  double coeff = 0.0;
  for (const auto& [alpha, a] : f0.terms()) coeff = std::max(coeff, std::abs(a - h2.coefficient(alpha)));
  for (const auto& [alpha, a] : h2.terms()) coeff = std::max(coeff, std::abs(a - f0.coefficient(alpha)));
  r.measurements.push_back({"h2-shell -> h2 coeff err", coeff, 1e-12, false});

  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    RadialProfile p{3, {}};
    for (int k = 0; k <= 8; ++k) p.c.push_back(random_complex(rng));
    const auto f = synth_radial(p, 3);
    const auto profile = extract_profile(f, kDefaultRadialTol);
    const auto F1 = bargmann_of_expansion(reduce_dimension(f, kDefaultRadialTol));
    for (int i = 0; i < 10; ++i) {
      const Complex z = random_in_disk(rng, 2.0);
      const Complex expected = eval_F0(profile, z * z);
      worst = std::max(worst, std::abs(eval_fock_series(F1, ComplexPoint{z}) - expected) / (1.0 + std::abs(expected)));
    }
  }
  r.measurements.push_back({"|V1 f0(z) - F0(z^2)|/(1+|F0|)", worst, 1e-10, false});
  return r;
}

CheckResult check_gaussian(Rng&)
{
  CheckResult r{"gaussian", "kernel-path V of truncated e^{-x^2} vs C e^{-z^2/6}", {}};
  const auto f = synth_gaussian(1.0, 1, 20);
  const auto samples = SampledFunction::from_expansion(f, 64);
  const double C = std::pow(std::numbers::pi, 0.25) / std::sqrt(1.5);
  double worst = 0.0;
  for (double radius : linspace(0.0, 2.0, 9))
    for (int a = 0; a < 16; ++a) {
      const Complex z = std::polar(radius, 2.0 * std::numbers::pi * a / 16.0);
      const Complex exact = C * std::exp(-z * z / 6.0);
      worst = std::max(worst, std::abs(bargmann_of_samples(samples, ComplexPoint{z}) - exact) / std::abs(exact));
    }
  r.measurements.push_back({"max rel err, |z|<=2", worst, 1e-6, false});
  return r;
}

CheckResult check_bridge(Rng& rng)
{
  CheckResult r{"bridge", "Bargmann/STFT bridge and its inverse, N<=6, 5x5 phase grid, |x|,|xi|<=1.5", {}};
  for (std::size_t d = 1; d <= 2; ++d) {
    const auto grid = phase_grid(d);
    double forward = 0.0;
    double inverse = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = random_expansion(rng, d, 6);
      forward = std::max(forward, bridge_residual(f, grid));
      inverse = std::max(inverse, inverse_bridge_residual(f, grid));
    }
    r.measurements.push_back({fmt::format("d={} forward residual", d), forward, 1e-8, false});
    r.measurements.push_back({fmt::format("d={} inverse residual", d), inverse, 1e-8, false});
  }
  return r;
}

CheckResult check_e0(Rng&)
{
  CheckResult r{"e0", "<f, E0(|x|^2, .)> vs F0(|x|^2) for h0, h2-shell, gaussian:1", {}};
  struct Preset {
    const char* name;
    HermiteExpansion f;
  };
  const std::vector<Preset> presets{
      {"h0", preset_h0(2)}, {"h2-shell", preset_h2_shell(2)}, {"gaussian:1", synth_gaussian(1.0, 2, 20)}};
  for (const auto& preset : presets) {
    const auto profile = extract_profile(preset.f, kDefaultRadialTol);
    double worst = 0.0;
    for (double radius : linspace(0.0, 2.0, 5))
      for (double angle : {0.0, 0.7, 2.0}) {
        const RealPoint x{radius * std::cos(angle), radius * std::sin(angle)};
        const Complex expected = eval_F0(profile, radius * radius);
        worst = std::max(worst, std::abs(eval_via_E0(preset.f, x) - expected));
      }
    r.measurements.push_back({fmt::format("{} |E0 path - F0|", preset.name), worst, 1e-8, false});
  }
  return r;
}

using CheckFn = std::function<CheckResult(Rng&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry()
{
  static const std::vector<std::pair<std::string, CheckFn>> checks{
      {"monomial", check_monomial},       {"isometry", check_isometry},
      {"normalization", check_normalization}, {"radial-positive", check_radial_positive},
      {"radial-negative", check_radial_negative}, {"reduction", check_reduction},
      {"gaussian", check_gaussian},       {"bridge", check_bridge},
      {"e0", check_e0}};
  return checks;
}

} // namespace

const std::vector<std::string>& verification_check_names()
{
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

VerificationReport run_verification(std::uint64_t seed, const std::vector<std::string>& filter)
{
  const auto& names = verification_check_names();
  for (const auto& name : filter)
    require(std::find(names.begin(), names.end(), name) != names.end(), "unknown check '" + name + "'");
  VerificationReport report;
  report.seed = seed;
  std::size_t index = 0;
  for (const auto& [name, fn] : registry()) {
    // Each check draws from its own stream so filtering does not shift the others.
    Rng rng(seed * 1000003ULL + index++);
    if (!filter.empty() && std::find(filter.begin(), filter.end(), name) == filter.end()) continue;
    report.checks.push_back(fn(rng));
  }
  return report;
}

std::string format_report(const VerificationReport& report)
{
  std::string out = fmt::format("verification seed={}\n", report.seed);
  out += fmt::format("{:<16} {:<34} {:>12} {:>10}  {}\n", "check", "quantity", "worst", "bound", "status");
  for (const auto& check : report.checks) {
    for (const auto& m : check.measurements)
      out += fmt::format("{:<16} {:<34} {:>12.4e} {}{:<9.2e}  {}\n", check.name, m.label, m.value,
                         m.lower_bound ? ">=" : "<=", m.bound, m.pass() ? "PASS" : "FAIL");
  }
  out += fmt::format("overall: {}\n", report.pass() ? "PASS" : "FAIL");
  return out;
}

} // namespace fockradial
