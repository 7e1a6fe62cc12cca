#include "transmute/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "transmute/errors.hpp"
#include "transmute/kernel.hpp"

namespace transmute {

std::string format_double(double v) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open for reading: " + path);
  return is;
}

double parse_field(const std::string& s, int line_no) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  while (ptr < e && (*ptr == ' ' || *ptr == '\t' || *ptr == '\r')) ++ptr;
  if (ec != std::errc() || ptr != e)
    throw IoError("CSV line " + std::to_string(line_no) +
                  ": cannot parse number '" + s + "'");
  return v;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(cur);
  return out;
}

bool has_imag(const SampledFunction& f) {
  for (const Complex& v : f.values())
    if (v.imag() != 0.0) return true;
  return false;
}

}  // namespace

void write_function_csv(std::ostream& os, const SampledFunction& f) {
  const bool im = has_imag(f);
  os << (im ? "x,value_re,value_im\n" : "x,value_re\n");
  for (int i = 0; i < f.size(); ++i) {
    os << format_double(f.grid().node(i)) << ','
       << format_double(f[i].real());
    if (im) os << ',' << format_double(f[i].imag());
    os << '\n';
  }
  if (!os) throw IoError("write failure on function CSV stream");
}

void write_function_csv(const std::string& path, const SampledFunction& f) {
  auto os = open_out(path);
  write_function_csv(os, f);
}

SampledFunction read_function_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw IoError("function CSV: empty input");
  std::vector<double> xs;
  std::vector<Complex> vs;
  int line_no = 1;
  // header row is optional on input; skip it when the first field is not
  // numeric
  {
    auto fields = split_line(line);
    double probe = 0.0;
    bool numeric = false;
    if (!fields.empty()) {
      auto [p, ec] = std::from_chars(fields[0].data(),
                                     fields[0].data() + fields[0].size(),
                                     probe);
      (void)p;
      numeric = (ec == std::errc());
    }
    if (numeric) {
      if (fields.size() < 2 || fields.size() > 3)
        throw IoError("function CSV: expected 2 or 3 columns");
      xs.push_back(parse_field(fields[0], line_no));
      vs.emplace_back(parse_field(fields[1], line_no),
                      fields.size() == 3 ? parse_field(fields[2], line_no)
                                         : 0.0);
    }
  }
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_line(line);
    if (fields.size() < 2 || fields.size() > 3)
      throw IoError("function CSV line " + std::to_string(line_no) +
                    ": expected 2 or 3 columns");
    xs.push_back(parse_field(fields[0], line_no));
    vs.emplace_back(parse_field(fields[1], line_no),
                    fields.size() == 3 ? parse_field(fields[2], line_no)
                                       : 0.0);
  }
  if (xs.size() < 3) throw IoError("function CSV: too few rows");
  const int n = static_cast<int>(xs.size()) - 1;
  const double a = xs.back();
  if (n % 2 != 0)
    throw IoError("function CSV: node count must be odd (even intervals)");
  if (std::abs(xs.front() + a) > 1e-9 * std::max(1.0, std::abs(a)) ||
      !(a > 0.0))
    throw IoError("function CSV: nodes must span a symmetric interval");
  const double h = 2.0 * a / n;
  for (int i = 0; i <= n; ++i)
    if (std::abs(xs[i] - (-a + h * i)) > 1e-9 * std::max(1.0, a))
      throw IoError("function CSV: nodes are not uniformly spaced");
  return SampledFunction(Grid(a, n), std::move(vs));
}

SampledFunction read_function_csv(const std::string& path) {
  auto is = open_in(path);
  return read_function_csv(is);
}

void write_kernel_csv(std::ostream& os, const GoursatKernel& k) {
  os << "u,v,H_re,H_im\n";
  const Grid& g = k.grid();
  const int c = g.center();
  for (int iu = 0; iu < g.size(); ++iu) {
    const int reach = c - std::abs(iu - c);
    for (int iv = c - reach; iv <= c + reach; ++iv) {
      const Complex v = k.h_node(iu, iv);
      os << format_double(g.node(iu)) << ',' << format_double(g.node(iv))
         << ',' << format_double(v.real()) << ',' << format_double(v.imag())
         << '\n';
    }
  }
  if (!os) throw IoError("write failure on kernel CSV stream");
}

void write_kernel_csv(const std::string& path, const GoursatKernel& k) {
  auto os = open_out(path);
  write_kernel_csv(os, k);
}

void write_columns_csv(std::ostream& os, const std::string& name,
                       const std::vector<const SampledFunction*>& fs) {
  if (fs.empty()) throw std::invalid_argument("no columns to write");
  const Grid& g = fs[0]->grid();
  os << "x";
  for (size_t k = 0; k < fs.size(); ++k) {
    require_same_grid(g, fs[k]->grid());
    os << ',' << name << k << "_re," << name << k << "_im";
  }
  os << '\n';
  for (int i = 0; i < g.size(); ++i) {
    os << format_double(g.node(i));
    for (const SampledFunction* f : fs)
      os << ',' << format_double((*f)[i].real()) << ','
         << format_double((*f)[i].imag());
    os << '\n';
  }
  if (!os) throw IoError("write failure on CSV stream");
}

void write_columns_csv(const std::string& path, const std::string& name,
                       const std::vector<const SampledFunction*>& fs) {
  auto os = open_out(path);
  write_columns_csv(os, name, fs);
}

void write_metadata(
    std::ostream& os,
    const std::vector<std::pair<std::string, std::string>>& kv) {
  for (const auto& [k, v] : kv) os << k << " = " << v << '\n';
  if (!os) throw IoError("write failure on metadata stream");
}

void write_metadata(
    const std::string& path,
    const std::vector<std::pair<std::string, std::string>>& kv) {
  auto os = open_out(path);
  write_metadata(os, kv);
}

}  // namespace transmute
