#include "fockradial/grid.hpp"

#include "fockradial/types.hpp"

#include <charconv>

namespace fockradial {

namespace {

template <class T>
T parse_number(const std::string& field, const std::string& whole)
{
  T value{};
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty())
    throw ArgumentError("malformed grid spec '" + whole + "' (expected min:max:count)");
  return value;
}

} // namespace

GridSpec GridSpec::parse(const std::string& text)
{
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos || text.find(':', b + 1) != std::string::npos)
    throw ArgumentError("malformed grid spec '" + text + "' (expected min:max:count)");
  GridSpec g;
  g.min = parse_number<double>(text.substr(0, a), text);
  g.max = parse_number<double>(text.substr(a + 1, b - a - 1), text);
  g.count = parse_number<std::size_t>(text.substr(b + 1), text);
  require(g.count >= 1, "grid spec '" + text + "' needs count >= 1");
  return g;
}

std::vector<double> GridSpec::values() const
{
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i)
    v[i] = count == 1 ? min : min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
  return v;
}

std::vector<std::vector<double>> grid_points(const std::vector<GridSpec>& axes)
{
  std::vector<std::vector<double>> values;
  std::size_t total = 1;
  for (const auto& axis : axes) {
    values.push_back(axis.values());
    total *= axis.count;
  }
  std::vector<std::vector<double>> points(total, std::vector<double>(axes.size()));
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t j = axes.size(); j-- > 0;) {
      points[flat][j] = values[j][rest % axes[j].count];
      rest /= axes[j].count;
    }
  }
  return points;
}

} // namespace fockradial
