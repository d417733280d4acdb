#include "fockradial/multi_index.hpp"

#include "fockradial/types.hpp"

#include <algorithm>
#include <numeric>

namespace fockradial {

MultiIndex::MultiIndex(std::vector<unsigned> exponents)
  : exponents_(std::move(exponents)),
    degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u))
{
}

MultiIndex::MultiIndex(std::initializer_list<unsigned> exponents)
  : MultiIndex(std::vector<unsigned>(exponents))
{
}

MultiIndex MultiIndex::zero(std::size_t dim)
{
  return MultiIndex(std::vector<unsigned>(dim, 0u));
}

bool MultiIndex::has_odd_entry() const noexcept
{
  return std::any_of(exponents_.begin(), exponents_.end(), [](unsigned e) { return e % 2 != 0; });
}

MultiIndex MultiIndex::doubled() const
{
  std::vector<unsigned> e(exponents_);
  for (auto& v : e) v *= 2;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::halved() const
{
  require(all_even(), "halved: multi-index " + to_string() + " has an odd entry");
  std::vector<unsigned> e(exponents_);
  for (auto& v : e) v /= 2;
  return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string() const
{
  std::string s = "(";
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(exponents_[j]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept
{
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  // Larger leading exponent sorts first within a shell.
  return b.exponents_ <=> a.exponents_;
}

namespace {

void fill_shell(std::vector<unsigned>& current, std::size_t pos, unsigned remaining,
                std::vector<MultiIndex>& out)
{
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[pos] = e;
    fill_shell(current, pos + 1, remaining - e, out);
  }
  current[pos] = 0;
}

} // namespace

std::vector<MultiIndex> enumerate_shell(std::size_t dim, unsigned degree)
{
  require(dim >= 1, "enumerate_shell: dim must be >= 1");
  std::vector<MultiIndex> out;
  std::vector<unsigned> current(dim, 0u);
  fill_shell(current, 0, degree, out);
  return out;
}

std::vector<MultiIndex> enumerate_multi_indices(std::size_t dim, unsigned max_degree)
{
  require(dim >= 1, "enumerate_multi_indices: dim must be >= 1");
  std::vector<MultiIndex> out;
  out.reserve(multi_index_count(dim, max_degree));
  for (unsigned k = 0; k <= max_degree; ++k) {
    auto shell = enumerate_shell(dim, k);
    out.insert(out.end(), std::make_move_iterator(shell.begin()), std::make_move_iterator(shell.end()));
  }
  return out;
}

std::size_t multi_index_count(std::size_t dim, unsigned max_degree)
{
  // C(dim + N, dim) built incrementally; each partial product is an integer.
  std::size_t count = 1;
  for (std::size_t i = 1; i <= dim; ++i) count = count * (max_degree + i) / i;
  return count;
}

} // namespace fockradial
