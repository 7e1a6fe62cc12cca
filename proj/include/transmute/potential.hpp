#pragma once

#include <string>

#include "transmute/grid.hpp"

namespace transmute {

// Samples a potential described by a compact string onto a grid:
//   zero              identically 0
//   const:<v>         constant v
//   step:<v>:<loc>    v for x > loc, 0 for x < loc; a node exactly on the
//                     jump takes the average of the one-sided limits
//   poly:<c0,c1,...>  polynomial with the given (real) coefficients
//   csv:<path>        values read from a function CSV, linearly resampled;
//                     the file's interval must cover [-a, a]
// Malformed descriptors throw std::invalid_argument naming the field.
SampledFunction make_potential(const Grid& grid, const std::string& descriptor);

}  // namespace transmute
