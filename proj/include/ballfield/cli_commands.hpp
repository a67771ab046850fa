#pragma once

#include <string>

#include "ballfield/config.hpp"
#include "ballfield/grids_io.hpp"

namespace ballfield {

/// Shared exit codes: 0 success / validation pass, 1 validation fail,
/// 2 configuration error, 3 I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFail = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

/// Writes the spectrum table ("n,a_n" rows plus the total-mass summary).
int run_spectrum(const RunConfig& config, const std::string& out_path);

/// Generates ensemble.count realizations on the configured grid, writes one
/// file per realization in the configured format, and a manifest echoing the
/// config plus an FNV-1a checksum per file. Deterministic given the seed and
/// independent of the thread count.
int run_simulate(const RunConfig& config, const std::string& out_dir, int threads);

/// Runs the segment-covariance validation pipeline and writes report.csv.
/// Returns 0 iff the report passes. `analytic_scale` is a test hook that
/// multiplies the analytic values to verify the pipeline detects mismatch.
int run_validate(const RunConfig& config, const std::string& out_dir, int threads,
                 double analytic_scale = 1.0);

struct RenderRequest {
  std::string input_path;   // realization file, .csv or .bin
  std::string output_path;  // PPM
  SliceSpec slice;
  RenderOptions options;
};

int run_render(const RenderRequest& request);

/// FNV-1a 64-bit checksum of a file's bytes (manifest entries).
std::uint64_t fnv1a64_file(const std::string& path);

}  // namespace ballfield
