#include "transmute/potential.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "transmute/csv.hpp"
#include "transmute/errors.hpp"

namespace transmute {

namespace {

double parse_number(const std::string& s, const std::string& what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("potential: bad " + what + " '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

SampledFunction make_potential(const Grid& grid,
                               const std::string& descriptor) {
  if (descriptor == "zero") return SampledFunction(grid);

  const size_t colon = descriptor.find(':');
  const std::string kind = descriptor.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? "" : descriptor.substr(colon + 1);

  if (kind == "const") {
    const double v = parse_number(rest, "constant value");
    return SampledFunction::sample(grid, [v](double) { return v; });
  }
  if (kind == "step") {
    auto parts = split(rest, ':');
    if (parts.size() != 2)
      throw std::invalid_argument(
          "potential: step needs value and jump location");
    const double v = parse_number(parts[0], "step value");
    const double loc = parse_number(parts[1], "step location");
    return SampledFunction::sample(grid, [&](double x) {
      // a node exactly on the jump takes the mean of the one-sided limits
      if (std::abs(x - loc) < 1e-12 * std::max(1.0, grid.half_width()))
        return 0.5 * v;
      return x > loc ? v : 0.0;
    });
  }
  if (kind == "poly") {
    auto parts = split(rest, ',');
    if (parts.empty())
      throw std::invalid_argument("potential: poly needs coefficients");
    std::vector<double> coeffs;
    for (const auto& p : parts)
      coeffs.push_back(parse_number(p, "poly coefficient"));
    return SampledFunction::sample(grid, [&](double x) {
      double acc = 0.0;
      for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
      return acc;
    });
  }
  if (kind == "csv") {
    if (rest.empty())
      throw std::invalid_argument("potential: csv needs a file path");
    SampledFunction raw = read_function_csv(rest);
    if (raw.grid().half_width() < grid.half_width() - 1e-12)
      throw std::invalid_argument(
          "potential: csv data does not cover [-a, a]");
    SampledFunction out(grid);
    for (int i = 0; i < grid.size(); ++i)
      out[i] = interp_linear(raw, grid.node(i));
    return out;
  }
  throw std::invalid_argument("potential: unknown descriptor '" + descriptor +
                              "'");
}

}  // namespace transmute
