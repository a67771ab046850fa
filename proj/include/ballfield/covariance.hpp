#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ballfield/special_functions.hpp"

namespace ballfield {

/// Homogeneous exponential radial covariance: C_r(r_x, r_y) = sigma^2 exp(-|r_x - r_y| / I).
struct RadialCovarianceModel {
  double sigma = 1.0;        // standard deviation of the field
  double corr_length = 0.15; // correlation length I, in radius units

  void validate() const;  // throws std::domain_error unless sigma > 0 and corr_length > 0
};

double radial_cov(const RadialCovarianceModel& model, double r_x, double r_y);

/// Truncated spectrum {a_n} of an isotropic covariance on the sphere,
/// C_alpha(alpha) = sum_n a_n P_n(cos alpha). Valid iff every a_n >= 0
/// (Schoenberg condition); construction enforces that, plus a positive total
/// mass A = sum a_n. The cumulative table backs inverse-CDF degree sampling.
class AngularSpectrum {
 public:
  explicit AngularSpectrum(std::vector<double> coefficients);

  int max_degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  double coefficient(int n) const { return coefficients_[n]; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  /// A = sum of the coefficients (equals the last cumulative entry exactly).
  double total_mass() const { return total_mass_; }
  const std::vector<double>& cumulative() const { return cumulative_; }

  /// Same shape rescaled so that A = 1 (field variance sigma^2 instead of sigma^2 A).
  AngularSpectrum normalized() const;

  /// CSV rows "n,a_n" followed by a "# A=<value>" summary line.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<double> coefficients_;
  std::vector<double> cumulative_;
  double total_mass_ = 0.0;
};

/// Geometric spectrum a_n = rho^n for n = 0..max_degree, rho in (0, 1).
AngularSpectrum geometric_spectrum(double rho, int max_degree);

/// Smallest n with rho^n / (1 - rho) < 1e-8 (explicit bound on the dropped
/// series tail), capped at kMaxDegree.
int default_geometric_max_degree(double rho);

/// C_alpha(alpha) = sum_n a_n P_n(cos alpha), one Legendre recurrence pass.
double angular_cov_series(const AngularSpectrum& spectrum, double alpha);

/// Closed form of the geometric series: 1 / sqrt(1 - 2 rho cos(alpha) + rho^2).
double angular_cov_closed_geometric(double rho, double alpha);

/// Point in the closed unit ball, spherical coordinates.
struct BallPoint {
  double r = 0.0;
  SphericalDirection dir;
};

std::array<double, 3> to_cartesian(const BallPoint& p);
BallPoint from_cartesian(const std::array<double, 3>& v);

/// Great-circle angle between the two directions, dot product clamped to
/// [-1, 1]. If either radius is zero the direction is undefined and the
/// angle is 0 by convention (the radial factor already carries the decay).
double geodesic_angle(const BallPoint& a, const BallPoint& b);

/// Product covariance on the ball: C(x, y) = C_r(r_x, r_y) * C_alpha(alpha),
/// proportionality constant fixed to 1, so the value at coincident points is
/// sigma^2 * A. When built from a geometric spectrum the angular factor uses
/// the closed form unless force_series is set.
class ProductCovariance {
 public:
  ProductCovariance(RadialCovarianceModel radial, AngularSpectrum angular);
  ProductCovariance(RadialCovarianceModel radial, AngularSpectrum angular, double rho);

  double operator()(const BallPoint& a, const BallPoint& b) const;
  double angular_cov(double alpha) const;

  const RadialCovarianceModel& radial() const { return radial_; }
  const AngularSpectrum& angular() const { return angular_; }

  bool force_series = false;

 private:
  RadialCovarianceModel radial_;
  AngularSpectrum angular_;
  std::optional<double> rho_;
};

}  // namespace ballfield
