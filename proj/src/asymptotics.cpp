#include "coyote/asymptotics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coyote {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Two-term correction coefficient for mass j: the difference between
// a_{2n-2} and the subleading coefficient of the trailing principal minor
// of A (rows/cols j+1..n) at s = 0. Collapses to
//   c_j = 1 + sum_{i=2..j} (alpha_i + beta_i)     for j < n,
//   c_n = a_{2n-2} = trace of A at s = 0.
double correction_coefficient(const NondimSystem& sys, int j) {
  const int n = sys.size();
  double c = 1.0;
  for (int i = 2; i <= std::min(j, n - 1); ++i) c += sys.alpha(i) + sys.beta(i);
  if (j == n) c += sys.alpha(n);
  return c;
}

} // namespace

AsymptoticPrediction short_time_prefactor(const ChainConfig& config, int j) {
  const int n = config.size();
  if (j < 1 || j > n) throw std::out_of_range("short_time_prefactor: mass index out of range");
  const std::vector<double> m = effective_masses(config);
  const auto& k = config.spring_constants_dyn_per_cm;

  double num = config.g_cm_s2 * std::accumulate(m.begin(), m.end(), 0.0);
  for (int i = 1; i <= j - 1; ++i) num *= k[static_cast<size_t>(i - 1)];
  double den = 1.0;
  for (int i = 1; i <= j; ++i) den *= m[static_cast<size_t>(i - 1)];

  AsymptoticPrediction pred;
  pred.j = j;
  pred.prefactor = num / den;
  pred.power = 2 * j;
  const NondimSystem sys = nondimensionalize(config);
  pred.correction_coeff = correction_coefficient(sys, j);
  const double tau_v =
      std::sqrt(0.1 * (2 * j + 2) * (2 * j + 1) / pred.correction_coeff);
  pred.validity_hint_s = tau_v * sys.time_scale_s;
  return pred;
}

double ShortTimeSeries::eval(double t) const {
  double leading = -prefactor / factorial(power);
  for (int i = 0; i < power; ++i) leading *= t;
  if (order == 1) return leading;
  const double tau = t / time_scale_s;
  const double bracket = 1.0 - correction_coeff * tau * tau / ((power + 2) * (power + 1));
  return leading * bracket;
}

ShortTimeSeries short_time_series(const ChainConfig& config, int j, int order) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("short_time_series: order must be 1 or 2");
  const AsymptoticPrediction pred = short_time_prefactor(config, j);
  const NondimSystem sys = nondimensionalize(config);

  ShortTimeSeries series;
  series.j = j;
  series.order = order;
  series.prefactor = pred.prefactor;
  series.power = pred.power;
  series.correction_coeff = pred.correction_coeff;
  series.time_scale_s = sys.time_scale_s;
  series.validity_hint_s = pred.validity_hint_s;
  // Bracket root: beyond it the two-term series claims the mass rises.
  series.sign_flip_time_s =
      std::sqrt((2.0 * j + 2) * (2.0 * j + 1) / series.correction_coeff) * sys.time_scale_s;
  return series;
}

HangTimeReport hang_time(const ChainConfig& config, double detect_threshold_cm) {
  if (!(detect_threshold_cm > 0.0))
    throw std::invalid_argument("hang_time: detection threshold must be positive");
  const int n = config.size();
  const AsymptoticPrediction bottom = short_time_prefactor(config, n);

  HangTimeReport report;
  report.detect_threshold_cm = detect_threshold_cm;
  report.prefactor = bottom.prefactor;
  report.n = n;
  report.hang_time_s =
      std::pow(detect_threshold_cm * factorial(2 * n) / bottom.prefactor, 1.0 / (2 * n));
  return report;
}

double long_time_asymptote(const ChainConfig& config, double t) {
  if (t < 0.0) throw std::invalid_argument("long_time_asymptote: t must be >= 0");
  return -config.g_cm_s2 * t * t / 2.0;
}

BoulderSweep boulder_limit(const ChainConfig& config, const std::vector<double>& m1_grid) {
  const int n = config.size();
  const std::vector<double> m = effective_masses(config);
  const auto& k = config.spring_constants_dyn_per_cm;

  double k_prod = 1.0;
  for (int i = 1; i <= n - 1; ++i) k_prod *= k[static_cast<size_t>(i - 1)];
  double tail_mass_sum = 0.0, tail_mass_prod = 1.0;
  for (int i = 2; i <= n; ++i) {
    tail_mass_sum += m[static_cast<size_t>(i - 1)];
    tail_mass_prod *= m[static_cast<size_t>(i - 1)];
  }

  BoulderSweep sweep;
  sweep.q_limit = k_prod * config.g_cm_s2 / tail_mass_prod;
  sweep.m1_values = m1_grid;
  sweep.q_values.reserve(m1_grid.size());
  for (double m1 : m1_grid) {
    if (!(m1 > 0.0)) throw std::invalid_argument("boulder_limit: m1 grid must be positive");
    sweep.q_values.push_back(k_prod * (m1 + tail_mass_sum) * config.g_cm_s2 /
                             (m1 * tail_mass_prod));
  }
  return sweep;
}

std::optional<ChainConfig> vanishing_mass_reduction(const ChainConfig& config) {
  const int n = config.size();
  const std::vector<double> m = effective_masses(config);
  if (n == 2) return std::nullopt; // single free-falling mass remains

  ChainConfig reduced;
  reduced.bare_masses_g.assign(m.begin() + 1, m.end());
  reduced.spring_constants_dyn_per_cm.assign(config.spring_constants_dyn_per_cm.begin() + 1,
                                             config.spring_constants_dyn_per_cm.end());
  reduced.spring_masses_g.assign(static_cast<size_t>(n - 2), 0.0);
  reduced.lumping = LumpingPolicy::None; // lumping already applied
  reduced.g_cm_s2 = config.g_cm_s2;
  if (config.natural_lengths_cm)
    reduced.natural_lengths_cm = std::vector<double>(config.natural_lengths_cm->begin() + 1,
                                                     config.natural_lengths_cm->end());
  return reduced;
}

} // namespace coyote
