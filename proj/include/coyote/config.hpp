#ifndef COYOTE_CONFIG_HPP
#define COYOTE_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace coyote {

/// How spring masses are folded into the point masses before any dynamics.
/// AddAbove adds each spring's full mass to the mass directly above it.
enum class LumpingPolicy { AddAbove, None };

/// Physical description of a hanging chain of n masses joined by n-1
/// Hookean springs. Canonical units are cgs: grams, centimeters, seconds,
/// dynes. Downward displacement is negative.
struct ChainConfig {
  std::vector<double> bare_masses_g;               // size n
  std::vector<double> spring_constants_dyn_per_cm; // size n-1
  std::vector<double> spring_masses_g;             // size n-1
  LumpingPolicy lumping = LumpingPolicy::AddAbove;
  double g_cm_s2 = 981.0;
  std::optional<std::vector<double>> natural_lengths_cm; // size n-1, cutoff model only

  int size() const { return static_cast<int>(bare_masses_g.size()); }
};

/// Throws std::invalid_argument if the config violates any structural
/// invariant: n >= 2, spring constants > 0, spring masses >= 0, bare
/// masses >= 0, g > 0, array lengths consistent, and every lumped mass > 0.
void validate(const ChainConfig& config);

/// Parse a config from JSON text. Keys carry their units
/// (bare_masses_g, spring_constants_dyn_per_cm, ...); unknown keys are
/// rejected rather than converted silently. The result is validated.
ChainConfig load_config(const std::string& json_text);

/// Same, reading from a file.
ChainConfig load_config_file(const std::filesystem::path& path);

/// Serialize back to the canonical JSON form (used by run manifests).
std::string config_to_json(const ChainConfig& config);

/// Masses after applying the lumping policy. Under AddAbove,
/// m_j += spring_mass_j for j = 1..n-1; the bottom mass is unchanged.
/// Throws if any resulting mass is <= 0.
std::vector<double> effective_masses(const ChainConfig& config);

/// Rescaled coupling coefficients and the (time, length) scales of the
/// released system. alpha_j = (m1/m_j)(k_{j-1}/k1) for j = 2..n,
/// beta_j = (m1/m_j)(k_j/k1) for j = 2..n-1, T = sqrt(m1/k1),
/// L = T^2 * (sum_j m_j) * g / m1, all from lumped masses.
struct NondimSystem {
  std::vector<double> alphas; // alpha_2 .. alpha_n   (size n-1)
  std::vector<double> betas;  // beta_2 .. beta_{n-1} (size n-2)
  double time_scale_s = 0.0;
  double length_scale_cm = 0.0;

  int size() const { return static_cast<int>(alphas.size()) + 1; }
  // 1-based mass index accessors matching the physics convention.
  double alpha(int j) const { return alphas.at(static_cast<size_t>(j) - 2); }
  double beta(int j) const { return betas.at(static_cast<size_t>(j) - 2); }
};

NondimSystem nondimensionalize(const ChainConfig& config);

} // namespace coyote

#endif
