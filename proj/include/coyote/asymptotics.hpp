#ifndef COYOTE_ASYMPTOTICS_HPP
#define COYOTE_ASYMPTOTICS_HPP

#include <optional>
#include <vector>

#include "coyote/config.hpp"

namespace coyote {

/// Leading short-time law of mass j after release:
///   z_j(t) ~ -Q_j t^{2j} / (2j)!,
///   Q_j = (prod_{i<j} k_i) * (sum m) * g / (prod_{i<=j} m_i)  [cm/s^{2j}].
/// correction_coeff is the dimensionless coefficient of the two-term
/// refinement; validity_hint_s is the time at which that correction
/// reaches 10% of the leading term.
struct AsymptoticPrediction {
  int j = 0;
  double prefactor = 0.0; // Q_j
  int power = 0;          // 2j
  double correction_coeff = 0.0;
  double validity_hint_s = 0.0;
};

AsymptoticPrediction short_time_prefactor(const ChainConfig& config, int j);

/// Evaluable truncated short-time law. Order 1 is the leading power law;
/// order 2 multiplies it by (1 - c_j (t/T)^2 / ((2j+2)(2j+1))). Beyond
/// sign_flip_time_s the two-term bracket goes negative and the series
/// predicts (spuriously) that the mass rises; beyond_validity flags
/// anything past validity_hint_s.
struct ShortTimeSeries {
  int j = 0;
  int order = 1;
  double prefactor = 0.0;
  int power = 0;
  double correction_coeff = 0.0;
  double time_scale_s = 0.0;
  double validity_hint_s = 0.0;
  double sign_flip_time_s = 0.0;

  double eval(double t) const;
  bool beyond_validity(double t) const { return t > validity_hint_s; }
};

ShortTimeSeries short_time_series(const ChainConfig& config, int j, int order);

/// t_h = (L_p (2n)! / Q_n)^{1/(2n)}: elapsed time until the bottom mass
/// has moved the detectable distance L_p, by the leading-order law.
struct HangTimeReport {
  double detect_threshold_cm = 0.0; // L_p
  double hang_time_s = 0.0;         // t_h
  double prefactor = 0.0;           // Q_n
  int n = 0;
};

HangTimeReport hang_time(const ChainConfig& config, double detect_threshold_cm);

/// Long-time law of the bottom mass in local coordinates: -g t^2 / 2.
double long_time_asymptote(const ChainConfig& config, double t);

/// Bottom-mass prefactor swept over the top mass. q_limit is the
/// m1 -> infinity value (prod k) * g / (prod_{j>=2} m_j); for the
/// equal-parameter template this is k^{n-1} g / m^{n-1} and
/// Q(m1) = (1 + (n-1) m / m1) * q_limit.
struct BoulderSweep {
  std::vector<double> m1_values;
  std::vector<double> q_values;
  double q_limit = 0.0;
};

/// Sweeps the lumped top mass over m1_grid, other parameters fixed.
BoulderSweep boulder_limit(const ChainConfig& config, const std::vector<double>& m1_grid);

/// The exact reduction behind the vanishing-m1 limit: delete mass 1 and
/// spring 1 from the lumped system. The bottom-mass power drops from 2n
/// to 2n-2. Returns nullopt for n = 2, where the remainder is a single
/// mass in free fall.
std::optional<ChainConfig> vanishing_mass_reduction(const ChainConfig& config);

} // namespace coyote

#endif
