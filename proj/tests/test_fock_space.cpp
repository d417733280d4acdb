#include "doctest.h"

#include "fockradial/fock.hpp"
#include "fockradial/hermite.hpp"
#include "fockradial/rng.hpp"

#include <cmath>
#include <numbers>

using namespace fockradial;
using TL = CoefficientMap::TermList;

namespace {

const double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

Complex disk(Rng& rng, double radius)
{
  return std::polar(radius * std::sqrt(rng.uniform()), 2 * kPi * rng.uniform());
}

HermiteExpansion random_expansion(Rng& rng, std::size_t d, unsigned N)
{
  CoefficientMap::Terms t;
  for (const auto& a : enumerate_multi_indices(d, N)) t[a] = Complex(rng.normal(), rng.normal());
  return HermiteExpansion(d, std::move(t));
}

// Oracle: direct monomial formula.
Complex monomial(const MultiIndex& alpha, const ComplexPoint& z)
{
  Complex m = 1.0;
  double fact = 1.0;
  for (std::size_t j = 0; j < alpha.dim(); ++j)
    for (unsigned k = 1; k <= alpha[j]; ++k) {
      m *= z[j];
      fact *= k;
    }
  return m / std::sqrt(fact);
}

} // namespace

TEST_CASE("bargmann_of_expansion carries coefficients over")
{
  const auto F = bargmann_of_expansion(HermiteExpansion::basis({1, 0}));
  CHECK(F.terms().size() == 1);
  CHECK(F.coefficient({1, 0}) == Complex(1.0));
  CHECK(bargmann_of_expansion(HermiteExpansion::zero(2)).empty());
  const HermiteExpansion f(1, TL{{{0}, 1.0}, {{2}, kI}});
  const auto G = bargmann_of_expansion(f);
  CHECK(G.terms() == f.terms());
  CHECK(G.dim() == 1);
}

TEST_CASE("inverse_bargmann round trip is bit-exact")
{
  CHECK(inverse_bargmann(FockSeries::basis({2, 1})).terms() == HermiteExpansion::basis({2, 1}).terms());
  CHECK(inverse_bargmann(FockSeries::zero(3)).empty());
  Rng rng(5);
  const auto f = random_expansion(rng, 2, 7);
  const auto back = inverse_bargmann(bargmann_of_expansion(f));
  CHECK(back.terms() == f.terms());
  CHECK(back.dim() == f.dim());
  CHECK(back.degree_cap() == f.degree_cap());
}

TEST_CASE("linearity is exact at coefficient level")
{
  Rng rng(11);
  const auto f = random_expansion(rng, 2, 5);
  const auto g = random_expansion(rng, 2, 3);
  const Complex lambda(0.3, -1.7);
  const auto lhs = bargmann_of_expansion(linear_combination(lambda, f, 1.0, g));
  const auto rhs = linear_combination(lambda, bargmann_of_expansion(f), 1.0, bargmann_of_expansion(g));
  CHECK(lhs.terms() == rhs.terms());
}

TEST_CASE("eval_fock_series examples")
{
  CHECK(eval_fock_series(FockSeries::basis({1, 0}), ComplexPoint{Complex(1, 1), 2.0}) == Complex(1, 1));
  const Complex v = eval_fock_series(FockSeries::basis({0, 2}), ComplexPoint{5.0, Complex(1, 1)});
  CHECK(std::abs(v - kI * std::sqrt(2.0)) <= 1e-15);
  CHECK(eval_fock_series(FockSeries::basis({0, 0}), ComplexPoint{Complex(3, -4), 7.0}) == Complex(1.0));
  CHECK_THROWS_AS(eval_fock_series(FockSeries::basis({0, 0}), ComplexPoint{1.0}), ArgumentError);
}

TEST_CASE("eval_fock_series matches the monomial formula")
{
  Rng rng(3);
  for (const auto& alpha : enumerate_multi_indices(3, 9)) {
    ComplexPoint z{disk(rng, 2), disk(rng, 2), disk(rng, 2)};
    const Complex exact = monomial(alpha, z);
    CHECK(std::abs(eval_fock_series(FockSeries::basis(alpha), z) - exact) <= 1e-13 * std::abs(exact));
  }
}

TEST_CASE("bargmann_kernel examples")
{
  const double c = std::pow(kPi, -0.25);
  CHECK(bargmann_kernel(ComplexPoint{0.0}, std::vector<double>{0.0}) == Complex(c));
  CHECK(std::abs(bargmann_kernel(ComplexPoint{kI}, std::vector<double>{0.0}) - c * std::exp(0.5)) <= 1e-15);
  CHECK(std::abs(bargmann_kernel(ComplexPoint{1.0}, std::vector<double>{std::sqrt(2.0)}) - c * std::exp(0.5)) <= 1e-15);
  CHECK_THROWS_AS(bargmann_kernel(ComplexPoint{1.0, 1.0}, std::vector<double>{0.0}), ArgumentError);
}

TEST_CASE("bargmann_of_samples examples")
{
  const auto h0 = SampledFunction::from_expansion(HermiteExpansion::basis({0}), 20);
  Rng rng(1);
  for (int i = 0; i < 25; ++i) {
    const ComplexPoint z{disk(rng, 2)};
    CHECK(std::abs(bargmann_of_samples(h0, z) - 1.0) <= 1e-10);
  }
  const auto h20 = SampledFunction::from_expansion(HermiteExpansion::basis({2, 0}), 20);
  CHECK(std::abs(bargmann_of_samples(h20, ComplexPoint{1.0, 1.0}) - 1.0 / std::sqrt(2.0)) <= 1e-10);
  const SampledFunction zero(2, 8, std::vector<Complex>(64));
  CHECK(bargmann_of_samples(zero, ComplexPoint{1.0, kI}) == Complex(0.0));
  CHECK_THROWS_AS(bargmann_of_samples(zero, ComplexPoint{1.0}), ArgumentError);
}

TEST_CASE("SampledFunction from a function handle factors out the Gaussian")
{
  const auto direct = SampledFunction::from_function(2, 16, [](std::span<const double> y) {
    return Complex(hermite_eval({1, 2}, y), 0.0);
  });
  const auto coeff = SampledFunction::from_expansion(HermiteExpansion::basis({1, 2}), 16);
  REQUIRE(direct.grid_size() == 256);
  for (std::size_t i = 0; i < direct.grid_size(); ++i)
    CHECK(std::abs(direct.values()[i] - coeff.values()[i]) <= 1e-12 * (1 + std::abs(coeff.values()[i])));
  const auto y = direct.node(17); // row 1, column 1
  CHECK(y[0] == direct.rule().nodes[1]);
  CHECK(y[1] == direct.rule().nodes[1]);
  CHECK(direct.weight(17) == doctest::Approx(direct.rule().weights[1] * direct.rule().weights[1]));
}

TEST_CASE("SampledFunction validation")
{
  CHECK_THROWS_AS(SampledFunction(2, 4, std::vector<Complex>(15)), ArgumentError);
  std::vector<Complex> bad(4);
  bad[2] = Complex(INFINITY, 0);
  CHECK_THROWS_AS(SampledFunction(1, 4, bad), ArgumentError);
}

TEST_CASE("kernel path agrees with series path, degree <= 8, |z_j| <= 2, n = 24")
{
  Rng rng(2024);
  for (std::size_t d = 1; d <= 2; ++d)
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = random_expansion(rng, d, 8);
      const auto samples = SampledFunction::from_expansion(f, 24);
      const auto F = bargmann_of_expansion(f);
      for (int i = 0; i < 10; ++i) {
        ComplexPoint z(d);
        for (auto& zj : z) zj = disk(rng, 2);
        CHECK(std::abs(bargmann_of_samples(samples, z) - eval_fock_series(F, z)) <= 1e-9);
      }
    }
}

TEST_CASE("a2_inner examples")
{
  const auto H = FockSeries::basis({2, 1});
  CHECK(a2_inner(H, H) == Complex(1.0));
  CHECK(std::abs(a2_inner_quadrature(H, H) - 1.0) <= 1e-12);
  const auto one = FockSeries::basis({0, 0});
  CHECK(std::abs(a2_inner_quadrature(one, one) - 1.0) <= 1e-12);
  const auto a = FockSeries::basis({1, 0});
  const auto b = FockSeries::basis({0, 1});
  CHECK(a2_inner(a, b) == Complex(0.0));
  CHECK(std::abs(a2_inner_quadrature(a, b)) <= 1e-14);
  CHECK_THROWS_AS(a2_inner(a, FockSeries::basis({1})), ArgumentError);
}

TEST_CASE("single-coordinate polar integral: int r^{2k+1} e^{-r^2} dr = k!/2")
{
  // With angular orthogonality this is the whole content of (H_k, H_k) = 1 in d = 1.
  for (unsigned k = 0; k <= 12; ++k) {
    const auto H = FockSeries::basis({k});
    CHECK(std::abs(a2_inner_quadrature(H, H) - 1.0) <= 1e-12);
  }
}

TEST_CASE("monomials are orthonormal under d mu, |alpha|, |beta| <= 8, d <= 2")
{
  for (std::size_t d = 1; d <= 2; ++d) {
    const auto idx = enumerate_multi_indices(d, 8);
    double worst = 0.0;
    for (const auto& alpha : idx)
      for (const auto& beta : idx) {
        const Complex v = a2_inner_quadrature(FockSeries::basis(alpha), FockSeries::basis(beta));
        worst = std::max(worst, std::abs(v - (alpha == beta ? 1.0 : 0.0)));
      }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("Parseval: ||f||_L2 = ||Vf||_A2 by quadrature")
{
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 1 + trial % 2;
    const auto f = random_expansion(rng, d, 10);
    const auto F = bargmann_of_expansion(f);
    const double n2 = l2_inner(f, f).real();
    CHECK(std::abs(n2 - a2_inner_quadrature(F, F).real()) <= 1e-8 * (1 + n2));
    CHECK(std::abs(a2_inner(F, F) - Complex(n2)) <= 1e-12 * n2);
  }
}

TEST_CASE("decay_margin against a direct grid oracle")
{
  std::vector<ComplexPoint> grid;
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) grid.push_back({Complex(0.5 * a, 0.5 * b)});

  auto oracle = [&](auto&& absF, double C, double eps) {
    double worst = INFINITY;
    for (const auto& z : grid) {
      const double x = std::abs(z[0].real()), xi = std::abs(z[0].imag());
      worst = std::min(worst, C * std::exp(0.5 * std::norm(z[0]) - eps * (x + xi)) - absF(z[0]));
    }
    return worst;
  };

  const auto one = decay_margin(FockSeries::basis({0}), 1, 1, 0.1, 1, grid);
  const double expected_one = oracle([](Complex) { return 1.0; }, 1.0, 0.1);
  CHECK(one.worst_margin == doctest::Approx(expected_one).epsilon(1e-14));
  CHECK(one.pass);
  CHECK(expected_one >= 0.0);

  const auto h4 = decay_margin(FockSeries::basis({4}), 1, 1, 0.5, 10, grid);
  const double expected_h4 = oracle([](Complex z) { return std::pow(std::abs(z), 4) / std::sqrt(24.0); }, 10.0, 0.5);
  CHECK(h4.worst_margin == doctest::Approx(expected_h4).epsilon(1e-12));
  CHECK(h4.pass == (expected_h4 >= 0.0));
  const auto again = decay_margin(FockSeries::basis({4}), 1, 1, 0.5, 10, grid);
  CHECK(again.worst_margin == h4.worst_margin);
  CHECK(again.worst_point == h4.worst_point);

  // Close to the origin e^{|z|^2/2 - eps M} dips below 1, so a fine grid fails.
  const std::vector<ComplexPoint> near{{Complex(0.1, 0.0)}};
  const auto fail = decay_margin(FockSeries::basis({0}), 1, 1, 0.1, 1, near);
  CHECK_FALSE(fail.pass);
  CHECK(fail.worst_point == near[0]);

  CHECK_THROWS_AS(decay_margin(FockSeries::basis({0}), 1, 1, 0.1, 1, std::vector<ComplexPoint>{}), ArgumentError);
  CHECK_THROWS_AS(decay_margin(FockSeries::basis({0}), 0.5, 1, 0.1, 1, grid), ArgumentError);
}
