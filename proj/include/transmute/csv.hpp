#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "transmute/grid.hpp"

namespace transmute {

class GoursatKernel;

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

// Function CSV: header "x,value_re" or "x,value_re,value_im", one node per
// row.  The imaginary column is written only when some value has one.
void write_function_csv(std::ostream& os, const SampledFunction& f);
void write_function_csv(const std::string& path, const SampledFunction& f);

// Reads either two- or three-column form; the rows must describe a uniform
// symmetric grid with an even interval count.  Throws IoError otherwise.
SampledFunction read_function_csv(std::istream& is);
SampledFunction read_function_csv(const std::string& path);

// Kernel CSV: header "u,v,H_re,H_im", one row per grid node of the
// triangular support, u-major.
void write_kernel_csv(std::ostream& os, const GoursatKernel& k);
void write_kernel_csv(const std::string& path, const GoursatKernel& k);

// Several functions sharing one grid as columns: "x,<name>0_re,<name>0_im,..."
void write_columns_csv(std::ostream& os, const std::string& name,
                       const std::vector<const SampledFunction*>& fs);
void write_columns_csv(const std::string& path, const std::string& name,
                       const std::vector<const SampledFunction*>& fs);

// Flat "key = value" metadata block.
void write_metadata(std::ostream& os,
                    const std::vector<std::pair<std::string, std::string>>& kv);
void write_metadata(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& kv);

}  // namespace transmute
