#include "fockradial/expansion.hpp"

#include "fockradial/hermite.hpp"

#include <algorithm>
#include <cmath>

namespace fockradial {

CoefficientMap::CoefficientMap(std::size_t dim, Terms terms, unsigned cap)
  : dim_(dim), terms_(std::move(terms)), cap_(cap)
{
  validate();
}

CoefficientMap::CoefficientMap(std::size_t dim, const TermList& terms, unsigned cap) : dim_(dim), cap_(cap)
{
  for (const auto& [alpha, c] : terms) {
    if (!terms_.emplace(alpha, c).second) throw ArgumentError("duplicate multi-index " + alpha.to_string());
  }
  validate();
}

void CoefficientMap::validate() const
{
  require(dim_ >= 1, "expansion dimension must be >= 1");
  for (const auto& [alpha, c] : terms_) {
    require(alpha.dim() == dim_, "multi-index " + alpha.to_string() + " does not have length " + std::to_string(dim_));
    require(alpha.degree() <= cap_, "multi-index " + alpha.to_string() + " exceeds the degree cap " + std::to_string(cap_));
    require(std::isfinite(c.real()) && std::isfinite(c.imag()), "non-finite coefficient at " + alpha.to_string());
  }
}

Complex CoefficientMap::coefficient(const MultiIndex& alpha) const
{
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Complex{} : it->second;
}

unsigned CoefficientMap::degree() const noexcept
{
  // Graded order: the last key has the largest degree.
  return terms_.empty() ? 0u : terms_.rbegin()->first.degree();
}

double CoefficientMap::norm_squared() const noexcept
{
  double s = 0.0;
  for (const auto& [alpha, c] : terms_) s += std::norm(c);
  return s;
}

Complex l2_inner(const HermiteExpansion& f, const HermiteExpansion& g)
{
  require(f.dim() == g.dim(), "l2_inner: dimension mismatch");
  Complex s{};
  for (const auto& [alpha, a] : f.terms()) {
    auto it = g.terms().find(alpha);
    if (it != g.terms().end()) s += a * std::conj(it->second);
  }
  return s;
}

namespace {

Complex sum_with_tables(const HermiteExpansion& f, const std::vector<std::vector<double>>& tables)
{
  Complex s{};
  for (const auto& [alpha, a] : f.terms()) {
    double v = 1.0;
    for (std::size_t j = 0; j < alpha.dim(); ++j) v *= tables[j][alpha[j]];
    s += a * v;
  }
  return s;
}

} // namespace

Complex evaluate(const HermiteExpansion& f, std::span<const double> x)
{
  require(x.size() == f.dim(), "evaluate: dimension mismatch");
  std::vector<std::vector<double>> tables;
  for (double t : x) tables.push_back(hermite_functions(f.degree(), t));
  return sum_with_tables(f, tables);
}

Complex evaluate_polynomial_part(const HermiteExpansion& f, std::span<const double> y)
{
  require(y.size() == f.dim(), "evaluate_polynomial_part: dimension mismatch");
  return sum_with_tables(f, hermite_polynomial_tables(f.degree(), y));
}

} // namespace fockradial
