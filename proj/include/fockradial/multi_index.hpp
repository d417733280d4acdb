#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace fockradial {

/// Tuple of non-negative exponents (alpha_1, ..., alpha_d).
///
/// Ordering is graded: lower total degree first; within one degree the
/// index with the larger leading exponent comes first, so for d = 2 the
/// sequence starts (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> exponents);
  MultiIndex(std::initializer_list<unsigned> exponents);

  /// Zero multi-index of length dim.
  static MultiIndex zero(std::size_t dim);

  std::size_t dim() const noexcept { return exponents_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t j) const { return exponents_[j]; }
  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }

  bool has_odd_entry() const noexcept;
  bool all_even() const noexcept { return !has_odd_entry(); }

  /// 2*alpha.
  MultiIndex doubled() const;
  /// alpha/2; requires every entry even.
  MultiIndex halved() const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) noexcept
  {
    return a.exponents_ == b.exponents_;
  }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept;

private:
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

/// All alpha in N^dim with |alpha| <= max_degree, in graded order.
std::vector<MultiIndex> enumerate_multi_indices(std::size_t dim, unsigned max_degree);

/// All alpha in N^dim with |alpha| == degree, in graded order.
std::vector<MultiIndex> enumerate_shell(std::size_t dim, unsigned degree);

/// C(dim + max_degree, dim), the size of enumerate_multi_indices(dim, max_degree).
std::size_t multi_index_count(std::size_t dim, unsigned max_degree);

} // namespace fockradial
