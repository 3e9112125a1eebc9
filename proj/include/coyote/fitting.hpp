#ifndef COYOTE_FITTING_HPP
#define COYOTE_FITTING_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "coyote/dynamics.hpp"

namespace coyote {

/// Ordinary least squares of force on displacement. The slope is the
/// spring constant; the intercept absorbs pre-tension / zero offsets.
struct SpringFit {
  double k_dyn_per_cm = 0.0;
  double intercept_dyn = 0.0;
  double r_squared = 0.0;
  std::vector<double> residuals_dyn;
};

SpringFit fit_spring_constant(const std::vector<double>& displacements_cm,
                              const std::vector<double>& forces_dyn);

/// One tracked mass height over time, e.g. extracted from high-speed
/// video. Heights use the same convention as z_j: displacement from the
/// release position, negative down.
struct Track {
  std::vector<double> times_s;
  std::vector<double> heights_cm;
  std::string label;
};

/// CSV with header "t,z". Times must be strictly increasing.
Track load_track_csv(const std::filesystem::path& path);

enum class Alignment { ReleaseTime, BestShift };

struct TrackComparison {
  double rms_cm = 0.0;
  double max_abs_cm = 0.0;
  double shift_s = 0.0; // applied track shift (BestShift) or 0
  std::optional<double> hang_time_obs_s;
  std::optional<double> hang_time_model_s;
};

/// Interpolate the model trajectory of mass j onto the track times and
/// report residual metrics. BestShift scans shifts in
/// [-shift_window_s, +shift_window_s] minimizing rms. If
/// detect_threshold_cm > 0, hang-times are extracted from both track and
/// model with the same threshold rule.
TrackComparison compare_track(const Track& track, const Trajectory& traj, int j,
                              Alignment alignment = Alignment::ReleaseTime,
                              double detect_threshold_cm = 0.0,
                              double shift_window_s = 0.05);

} // namespace coyote

#endif
