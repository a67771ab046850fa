#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballfield/covariance.hpp"
#include "ballfield/sampler.hpp"
#include "ballfield/validation.hpp"

namespace ballfield {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat "key = value" configuration with dotted section prefixes, e.g.
/// `model.rho = 0.7`. Lines starting with '#' are comments. Unknown keys are
/// rejected so typos cannot silently fall back to defaults.
struct RunConfig {
  struct Model {
    double sigma = 1.0;
    double corr_length = 0.15;
    double rho = 0.7;
    int n_max = 0;  // 0 = smallest n with rho^n/(1-rho) < 1e-8, capped at 512
    bool normalize_angular = false;
  } model;

  struct Grid {
    std::vector<double> radii;  // explicit radii; empty = uniform n_r
    int n_r = 16;
    int n_theta = 17;
    int n_phi = 32;
  } grid;

  struct Sampler {
    int n_terms = 2000;
    std::uint64_t seed = kDefaultSeed;
    std::string radial_method = "cholesky";  // cholesky | kl
    double kl_fraction = 0.95;
  } sampler;

  struct EnsembleSection {
    int count = 1;
  } ensemble;

  struct Output {
    std::string format = "csv";  // csv | bin | vtk
    std::string directory = "out";
  } output;

  struct Validation {
    BallPoint endpoint_a{0.5, {M_PI / 6.0, M_PI / 6.0}};
    BallPoint endpoint_b{1.0, {M_PI / 2.0, M_PI / 2.0}};
    int n_samples = 21;
    double se_multiple = 4.0;
  } validation;

  static RunConfig parse(std::istream& in);
  static RunConfig parse_file(const std::string& path);
  void write(std::ostream& out) const;

  /// Re-checks every module-level invariant; throws ConfigError naming the
  /// offending field.
  void validate() const;

  // Derived builders.
  int effective_n_max() const;
  AngularSpectrum make_spectrum() const;
  RadialCovarianceModel make_model() const;
  RadialGrid make_radial_grid() const;
  BallGrid make_ball_grid() const;
  SamplerConfig make_sampler_config() const;
  RadialFactor make_factor(const RadialGrid& grid) const;
  ProductCovariance make_covariance() const;
  SegmentSpec make_segment_spec() const;
};

}  // namespace ballfield
