#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "transmute/grid.hpp"
#include "transmute/transmutation.hpp"

namespace transmute {

// Flat "key = value" run description shared by all CLI verbs.  '#' starts
// a comment; unknown keys are rejected.  Complex values are written as
// "re" or "re:im"; lists are whitespace-separated.
struct RunConfig {
  double a = 1.0;
  int n = 1000;
  std::string potential = "zero";
  double kernel_tol = 1e-12;
  int kernel_nmax = 60;
  int kmax = 30;
  std::vector<Complex> lambdas;
  TransmutationSpec spec;
  double eig_left = 0.0;
  double eig_right = 1.0;
  double eig_lambda_min = -100.0;
  double eig_lambda_max = 0.0;
  int eig_count = 3;
  int eig_samples = 200;
  std::string out = "out";

  Grid make_grid() const { return Grid(a, n); }

  static RunConfig parse(std::istream& is);
  static RunConfig parse_file(const std::string& path);
};

}  // namespace transmute
