#include "transmute/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "transmute/errors.hpp"

namespace transmute {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("config: bad number for '" + key + "': " + s);
  return v;
}

int parse_int(const std::string& key, const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("config: bad integer for '" + key +
                                "': " + s);
  return v;
}

// "re" or "re:im"
Complex parse_complex(const std::string& key, const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) return Complex(parse_double(key, s));
  return Complex(parse_double(key, s.substr(0, colon)),
                 parse_double(key, s.substr(colon + 1)));
}

std::vector<Complex> parse_complex_list(const std::string& key,
                                        const std::string& s) {
  std::vector<Complex> out;
  std::istringstream ss(s);
  std::string tok;
  while (ss >> tok) out.push_back(parse_complex(key, tok));
  return out;
}

}  // namespace

RunConfig RunConfig::parse(std::istream& is) {
  RunConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key or value");

    if (key == "a") {
      cfg.a = parse_double(key, val);
    } else if (key == "n") {
      cfg.n = parse_int(key, val);
    } else if (key == "potential") {
      cfg.potential = val;
    } else if (key == "kernel_tol") {
      cfg.kernel_tol = parse_double(key, val);
    } else if (key == "kernel_nmax") {
      cfg.kernel_nmax = parse_int(key, val);
    } else if (key == "kmax") {
      cfg.kmax = parse_int(key, val);
    } else if (key == "lambdas") {
      cfg.lambdas = parse_complex_list(key, val);
    } else if (key == "spec") {
      auto cs = parse_complex_list(key, val);
      if (cs.size() != 4)
        throw std::invalid_argument(
            "config: 'spec' needs exactly 4 complex entries");
      cfg.spec = {cs[0], cs[1], cs[2], cs[3]};
    } else if (key == "eig_left") {
      cfg.eig_left = parse_double(key, val);
    } else if (key == "eig_right") {
      cfg.eig_right = parse_double(key, val);
    } else if (key == "eig_lambda_min") {
      cfg.eig_lambda_min = parse_double(key, val);
    } else if (key == "eig_lambda_max") {
      cfg.eig_lambda_max = parse_double(key, val);
    } else if (key == "eig_count") {
      cfg.eig_count = parse_int(key, val);
    } else if (key == "eig_samples") {
      cfg.eig_samples = parse_int(key, val);
    } else if (key == "out") {
      cfg.out = val;
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config: " + path);
  return parse(is);
}

}  // namespace transmute
