#pragma once

#include <stdexcept>
#include <string>

namespace transmute {

// Two functions were combined that live on different grids (a or n differ).
class GridMismatchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative scheme hit its sweep cap before reaching tolerance.  The
// carried bound estimates the part that was dropped; the caller decides
// whether that is acceptable.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double tail)
      : std::runtime_error(what), tail_bound_(tail) {}
  double tail_bound() const { return tail_bound_; }

 private:
  double tail_bound_;
};

// A solution pair whose Wronskian vanishes (no Green function), or a
// coefficient quadruple whose determinant vanishes (no inverse operator).
class DegenerateBasisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// File/stream content could not be parsed, or an OS-level I/O failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace transmute
