#include "coyote/equilibrium.hpp"

namespace coyote {

EquilibriumState equilibrium_positions(const ChainConfig& config) {
  // Loads come from the lumped masses. Positivity is deliberately not
  // required here: a zero mass contributes zero load and the geometry is
  // still well defined.
  const int n = config.size();
  std::vector<double> m = config.bare_masses_g;
  if (config.lumping == LumpingPolicy::AddAbove) {
    for (int i = 0; i < n - 1; ++i)
      m[static_cast<size_t>(i)] += config.spring_masses_g[static_cast<size_t>(i)];
  }

  EquilibriumState state;
  state.extensions.resize(static_cast<size_t>(n - 1));
  // Spring j carries the weight of everything below it; accumulate from
  // the bottom up.
  double weight_below = 0.0;
  for (int i = n - 2; i >= 0; --i) {
    weight_below += m[static_cast<size_t>(i + 1)] * config.g_cm_s2;
    state.extensions[static_cast<size_t>(i)] =
        weight_below / config.spring_constants_dyn_per_cm[static_cast<size_t>(i)];
  }

  state.positions.resize(static_cast<size_t>(n));
  state.positions[0] = 0.0; // gauge
  for (int i = 0; i < n - 1; ++i)
    state.positions[static_cast<size_t>(i + 1)] =
        state.positions[static_cast<size_t>(i)] - state.extensions[static_cast<size_t>(i)];
  return state;
}

} // namespace coyote
