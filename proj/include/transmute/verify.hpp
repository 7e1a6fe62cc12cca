#pragma once

#include <string>
#include <vector>

#include "transmute/kernel.hpp"
#include "transmute/transmutation.hpp"

namespace transmute {

struct CheckResult {
  std::string name;
  double value;      // measured residual / violation
  double threshold;  // documented bound it must stay under
  bool pass;
};

// Battery of structural invariants run against one potential: projector
// algebra, Goursat traces, the weak kernel identity, series term bounds,
// Wronskian constancy, the intertwining residual, operator round trips,
// transpose duality, and the two routes to the power images.  Thresholds
// are documented for n >= 100; the battery refuses coarser grids.
std::vector<CheckResult> run_verification(const SampledFunction& q,
                                          const KernelBuildOptions& kopts,
                                          int kmax,
                                          const TransmutationSpec& spec);

}  // namespace transmute
