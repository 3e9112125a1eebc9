#ifndef COYOTE_EQUILIBRIUM_HPP
#define COYOTE_EQUILIBRIUM_HPP

#include <vector>

#include "coyote/config.hpp"

namespace coyote {

/// Static hanging geometry before release. Gauge: x_1(0) = 0, masses hang
/// below (strictly decreasing positions). extension_j * k_j carries the
/// weight of everything below spring j.
struct EquilibriumState {
  std::vector<double> positions;  // x_j(0), size n, positions[0] == 0
  std::vector<double> extensions; // size n-1, >= 0
};

/// Solve the hanging equilibrium by back-substitution on extensions
/// (each spring supports the total weight below it). Natural lengths are
/// omitted; they shift positions by constants and never affect dynamics.
EquilibriumState equilibrium_positions(const ChainConfig& config);

} // namespace coyote

#endif
