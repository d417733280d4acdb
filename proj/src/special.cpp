#include "fockradial/special.hpp"

#include <cmath>

namespace fockradial {

double log_factorial(unsigned k)
{
  return std::lgamma(static_cast<double>(k) + 1.0);
}

double log_factorial(const MultiIndex& alpha)
{
  double s = 0.0;
  for (auto e : alpha.exponents()) s += log_factorial(e);
  return s;
}

double inv_sqrt_factorial(const MultiIndex& alpha)
{
  return std::exp(-0.5 * log_factorial(alpha));
}

double shell_weight(const MultiIndex& gamma)
{
  double s = 0.0;
  for (auto e : gamma.exponents()) s += log_factorial(e) - 0.5 * log_factorial(2 * e);
  return std::exp(s);
}

} // namespace fockradial
