#pragma once

#include "fockradial/multi_index.hpp"
#include "fockradial/types.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace fockradial {

/// Highest total degree an expansion accepts unless the caller raises it.
inline constexpr unsigned kDefaultDegreeCap = 64;

/// Finite map alpha -> a_alpha over multi-indices of one length, iterated in
/// graded order. Shared storage for the two coefficient representations.
class CoefficientMap {
public:
  using Terms = std::map<MultiIndex, Complex>;
  using TermList = std::vector<std::pair<MultiIndex, Complex>>;

  std::size_t dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// a_alpha, zero when alpha is not stored.
  Complex coefficient(const MultiIndex& alpha) const;

  /// Largest |alpha| among stored terms (0 for an empty map).
  unsigned degree() const noexcept;
  unsigned degree_cap() const noexcept { return cap_; }

  /// sum |a_alpha|^2.
  double norm_squared() const noexcept;

protected:
  CoefficientMap(std::size_t dim, Terms terms, unsigned cap);
  CoefficientMap(std::size_t dim, const TermList& terms, unsigned cap);

private:
  void validate() const;

  std::size_t dim_;
  Terms terms_;
  unsigned cap_;
};

/// f = sum a_alpha h_alpha in L^2(R^d).
class HermiteExpansion : public CoefficientMap {
public:
  HermiteExpansion(std::size_t dim, Terms terms, unsigned cap = kDefaultDegreeCap)
    : CoefficientMap(dim, std::move(terms), cap) {}
  HermiteExpansion(std::size_t dim, const TermList& terms, unsigned cap = kDefaultDegreeCap)
    : CoefficientMap(dim, terms, cap) {}

  static HermiteExpansion zero(std::size_t dim) { return HermiteExpansion(dim, Terms{}); }
  static HermiteExpansion basis(const MultiIndex& alpha, Complex c = 1.0)
  {
    return HermiteExpansion(alpha.dim(), TermList{{alpha, c}}, std::max(kDefaultDegreeCap, alpha.degree()));
  }
};

/// F(z) = sum a_alpha z^alpha / sqrt(alpha!) in A^2(C^d).
class FockSeries : public CoefficientMap {
public:
  FockSeries(std::size_t dim, Terms terms, unsigned cap = kDefaultDegreeCap)
    : CoefficientMap(dim, std::move(terms), cap) {}
  FockSeries(std::size_t dim, const TermList& terms, unsigned cap = kDefaultDegreeCap)
    : CoefficientMap(dim, terms, cap) {}

  static FockSeries zero(std::size_t dim) { return FockSeries(dim, Terms{}); }
  static FockSeries basis(const MultiIndex& alpha, Complex c = 1.0)
  {
    return FockSeries(alpha.dim(), TermList{{alpha, c}}, std::max(kDefaultDegreeCap, alpha.degree()));
  }
};

/// lambda*f + mu*g, coefficient by coefficient.
template <class Series>
Series linear_combination(Complex lambda, const Series& f, Complex mu, const Series& g)
{
  require(f.dim() == g.dim(), "linear_combination: dimension mismatch");
  CoefficientMap::Terms out;
  for (const auto& [alpha, a] : f.terms()) out[alpha] += lambda * a;
  for (const auto& [alpha, b] : g.terms()) out[alpha] += mu * b;
  return Series(f.dim(), std::move(out), std::max(f.degree_cap(), g.degree_cap()));
}

/// (f, g)_{L^2} = sum a_alpha conj(b_alpha).
Complex l2_inner(const HermiteExpansion& f, const HermiteExpansion& g);

/// f(x) at a real point.
Complex evaluate(const HermiteExpansion& f, std::span<const double> x);

/// f(y) e^{|y|^2/2}: the polynomial part of f, safe for large |y|.
Complex evaluate_polynomial_part(const HermiteExpansion& f, std::span<const double> y);

} // namespace fockradial
