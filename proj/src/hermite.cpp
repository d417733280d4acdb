#include "fockradial/hermite.hpp"

#include <cmath>
#include <numbers>

namespace fockradial {

namespace {

const double kPiQuarterInv = std::pow(std::numbers::pi, -0.25);

std::vector<double> run_recurrence(unsigned max_order, double t, double seed)
{
  std::vector<double> h(max_order + 1);
  h[0] = seed;
  if (max_order >= 1) h[1] = std::sqrt(2.0) * t * seed;
  for (unsigned k = 1; k < max_order; ++k) {
    const double kk = static_cast<double>(k);
    h[k + 1] = std::sqrt(2.0 / (kk + 1.0)) * t * h[k] - std::sqrt(kk / (kk + 1.0)) * h[k - 1];
  }
  return h;
}

} // namespace

std::vector<double> hermite_functions(unsigned max_order, double t)
{
  return run_recurrence(max_order, t, kPiQuarterInv * std::exp(-0.5 * t * t));
}

std::vector<double> hermite_polynomials(unsigned max_order, double t)
{
  return run_recurrence(max_order, t, kPiQuarterInv);
}

double hermite_function(unsigned k, double t)
{
  return hermite_functions(k, t).back();
}

double hermite_eval(const MultiIndex& alpha, std::span<const double> x)
{
  require(x.size() == alpha.dim(), "hermite_eval: point has dimension " + std::to_string(x.size()) +
                                       ", multi-index has " + std::to_string(alpha.dim()));
  double v = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) v *= hermite_function(alpha[j], x[j]);
  return v;
}

std::vector<std::vector<double>> hermite_polynomial_tables(unsigned max_order, std::span<const double> x)
{
  std::vector<std::vector<double>> tables;
  tables.reserve(x.size());
  for (double t : x) tables.push_back(hermite_polynomials(max_order, t));
  return tables;
}

} // namespace fockradial
