#ifndef COYOTE_IO_HPP
#define COYOTE_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "coyote/dynamics.hpp"

namespace coyote {

/// Trajectory CSV: header t,z1,...,zn,v1,...,vn; one row per sample;
/// cgs units; 17-significant-digit doubles.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path);
Trajectory read_trajectory_csv(const std::filesystem::path& path);

/// Full-precision formatting used by every CSV/JSON writer ("%.17g").
std::string format_double(double value);

} // namespace coyote

#endif
