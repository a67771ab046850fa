#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "ballfield/covariance.hpp"
#include "ballfield/rng.hpp"
#include "ballfield/sampler.hpp"

namespace ballfield {

/// Straight chord between two ball points, sampled at n_samples equally
/// spaced parameters t in [0, 1] (Cartesian interpolation; every point stays
/// inside the closed ball by convexity).
struct SegmentSpec {
  BallPoint endpoint_a;
  BallPoint endpoint_b;
  int n_samples = 21;

  void validate() const;
};

std::vector<BallPoint> segment_points(const SegmentSpec& spec);

struct CovarianceReportRow {
  double t = 0.0;
  double estimated = 0.0;
  double analytic = 0.0;
  double std_error = 0.0;
  double deviation_se = 0.0;  // |estimated - analytic| / std_error
  bool pass = false;
};

/// Estimated-vs-analytic covariance along a segment. The pass rule is
/// `se_multiple` standard errors per point, with a family-wise allowance of
/// one excursion up to 1.5 * se_multiple.
struct CovarianceReport {
  std::vector<CovarianceReportRow> rows;
  double se_multiple = 4.0;
  double max_abs_dev_se = 0.0;
  bool passed = false;

  /// CSV "t,estimated,analytic,stderr,pass" plus a
  /// "# max_abs_dev_in_se=<value>" summary comment. Round-trips exactly.
  void write_csv(std::ostream& out) const;
  static CovarianceReport read_csv(std::istream& in);
};

/// Covariance between the fixed endpoint (node 0) and every segment point:
/// Chat(t) = (1/R) sum_j f_j(x_a) f_j(x(t)), no mean subtraction (the model
/// field has zero mean by construction). The standard error is the sample
/// standard deviation of the products over sqrt(R). Requires R >= 100;
/// smaller ensembles make the standard errors meaningless.
CovarianceReport estimate_segment_covariance(
    const Ensemble& ensemble, const SegmentSpec& spec,
    const std::function<double(const BallPoint&, const BallPoint&)>& analytic,
    double se_multiple = 4.0);

/// Sample moments: mean, unbiased variance s^2 = sum (x - m)^2 / (R - 1),
/// adjusted Fisher-Pearson skewness G1 and unbiased excess kurtosis G2.
/// Skewness/kurtosis are NaN (moments_defined = false) when the variance
/// vanishes.
struct MomentSummary {
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  bool moments_defined = false;
};

MomentSummary empirical_moments(std::span<const double> samples);
MomentSummary empirical_moments(const Ensemble& ensemble, std::size_t node);

/// Chi-square goodness of fit of observed degree counts against a_n / A.
/// Bins with expected count below 10 merge into one tail bin; the threshold
/// is the 0.999 quantile of chi-square with (bins - 1) degrees of freedom
/// (Wilson-Hilferty approximation).
struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double threshold = 0.0;
  bool below_threshold = false;
};

std::vector<std::uint64_t> degree_histogram(const AngularSpectrum& spectrum,
                                            std::uint64_t draws, RandomStream& rng);
ChiSquareResult chi_square_vs_spectrum(const AngularSpectrum& spectrum,
                                       const std::vector<std::uint64_t>& counts);
ChiSquareResult spectrum_frequency_test(const AngularSpectrum& spectrum,
                                        std::uint64_t draws, RandomStream& rng);

/// 0.999 chi-square quantile via the Wilson-Hilferty cube approximation
/// (relative error under ~1% for dof >= 5).
double chi_square_quantile_999(int dof);

}  // namespace ballfield
