#ifndef COYOTE_DYNAMICS_HPP
#define COYOTE_DYNAMICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "coyote/config.hpp"

namespace coyote {

/// Sampled motion in local coordinates z_j (displacement from hanging
/// equilibrium, negative down). Released from rest: z_j(0) = v_j(0) = 0.
/// Samples are uniform in time with spacing dt.
struct Trajectory {
  std::vector<double> times;                    // size samples, times[0] = 0
  std::vector<std::vector<double>> positions;   // [mass][sample], cm
  std::vector<std::vector<double>> velocities;  // [mass][sample], cm/s
  double dt = 0.0;
  std::string meta;                 // config fingerprint
  double accuracy_estimate = 0.0;   // max |z| deviation vs half-step rerun
  bool step_warning = false;        // dt in (T/200, T/50]

  int n() const { return static_cast<int>(positions.size()); }
  size_t samples() const { return times.size(); }
};

/// Integrate the released linear chain with classical fixed-step RK4.
/// dt must be <= T/50 (T = sqrt(m1/k1)); dt above T/200 sets step_warning.
/// A half-step rerun attaches accuracy_estimate. t_end = 0 yields the
/// single initial sample.
Trajectory simulate_linear(const ChainConfig& config, double t_end, double dt);

/// Nonlinear cutoff variant: spring j stops exerting force once its
/// current length ext_j(0) + z_j - z_{j+1} drops below natural_lengths[j].
/// one-shot by default (a collapsed spring stays off); reengage = true
/// restores the force if the length rises back above the threshold.
struct CutoffSpec {
  std::vector<double> natural_lengths_cm; // L_s per spring, size n-1
  bool reengage = false;
};

/// Build a CutoffSpec from the config's natural_lengths_cm field.
CutoffSpec cutoff_from_config(const ChainConfig& config);

/// As simulate_linear, with Heaviside spring cutoffs. Switching times are
/// located by bisection to 1e-9 s and integration restarts at each event.
/// Once every spring is permanently off, the free-fall tail is filled in
/// analytically.
Trajectory simulate_cutoff(const ChainConfig& config, const CutoffSpec& cutoff,
                           double t_end, double dt);

/// Closed-form piecewise solution for two equal masses and one spring
/// (force k*(x-y) with Heaviside cutoff at separation L_s). Before t*:
///   x(t) = -mg/2k - g t^2/2 + (mg/2k) cos(sqrt(2k/m) t),  y = -mg/k - gt^2 - x(t) + ...
/// after t*: free fall from the t* state. t* is the first root of
/// separation = L_s, found by bisection.
struct TwoMassState {
  double x = 0.0;  // top mass position (x(0) = 0)
  double y = 0.0;  // bottom mass position (y(0) = -mg/k)
  double vx = 0.0;
  double vy = 0.0;
  double t_star = 0.0;       // cutoff switch time
  bool cutoff_reached = true;
};

TwoMassState two_mass_analytic(double m, double k, double g, double L_s, double t);

/// Earliest time with |z_j| >= threshold, refined between bracketing
/// samples by bisection on the cubic Hermite interpolant of the stored
/// state. nullopt if the threshold is never crossed.
std::optional<double> detect_threshold_crossing(const Trajectory& traj, int j,
                                                double threshold_cm);

/// Per-sample residual series for the linear model:
///   com_residual = sum(m z)/sum(m) + g t^2/2            [cm]
///   energy_residual = E(t) - E(0)                       [erg]
/// with E = kinetic + elastic (released spring forces) + gravitational,
/// all from lumped masses.
struct ConservationSeries {
  std::vector<double> times;
  std::vector<double> com_residual;
  std::vector<double> energy_residual;
  double initial_elastic_energy = 0.0;
};

ConservationSeries conserved_quantities(const Trajectory& traj, const ChainConfig& config);

} // namespace coyote

#endif
