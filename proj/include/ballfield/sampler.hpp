#pragma once

#include <cstdint>
#include <vector>

#include "ballfield/covariance.hpp"
#include "ballfield/grids_io.hpp"
#include "ballfield/radial_factorization.hpp"
#include "ballfield/rng.hpp"

namespace ballfield {

constexpr std::uint64_t kDefaultSeed = 0x5EEDBA11ull;

enum class RadialMethod { Cholesky, KL };

struct SamplerConfig {
  int n_terms = 2000;  // spectral terms N; 2000 keeps CLT residuals below
                       // statistical detection at desk-scale ensembles
  std::uint64_t seed = kDefaultSeed;
  RadialMethod radial_method = RadialMethod::Cholesky;
  double kl_fraction = 0.95;

  void validate() const;
};

/// Draws a degree n with probability a_n / A by inverse-CDF binary search on
/// the spectrum's cumulative table.
int sample_degree(const AngularSpectrum& spectrum, RandomStream& rng);

/// Uniform integer order on {-n, ..., n}.
int sample_order(int degree, RandomStream& rng);

/// Evaluation nodes for the simulation kernels: a shared radial grid, a
/// direction table, and one (radius index, direction index) pair per node.
/// Tensor grids share directions across radii; point lists carry one
/// direction per node. Directions reference a distinct-colatitude table so
/// the Legendre recurrence runs once per (theta, degree, order).
class NodeSet {
 public:
  struct Node {
    int r_index;
    int dir_index;
  };

  static NodeSet from_grid(const BallGrid& grid);
  /// One radial grid entry per point by default (radius_tol = 0), so the KL
  /// trace weights each evaluated radius by its multiplicity; bit-equal radii
  /// are separated by one ulp to keep the grid strictly increasing, which
  /// leaves the covariance unchanged at double precision. A positive
  /// radius_tol collapses nearby radii onto shared entries instead.
  static NodeSet from_points(const std::vector<BallPoint>& points,
                             double radius_tol = 0.0);
  /// Surface points: a single unit radius shared by every direction.
  static NodeSet from_directions(const std::vector<SphericalDirection>& dirs);

  const RadialGrid& radial() const { return radial_; }
  const std::vector<double>& thetas() const { return thetas_; }
  const std::vector<double>& phis() const { return phis_; }
  const std::vector<int>& dir_theta_index() const { return dir_theta_index_; }
  int direction_count() const { return static_cast<int>(phis_.size()); }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }

  /// The evaluation points in node order (radii are the collapsed grid values).
  std::vector<BallPoint> points() const;

 private:
  RadialGrid radial_{std::vector<double>{1.0}};
  std::vector<double> thetas_;          // distinct colatitudes
  std::vector<double> phis_;            // per direction
  std::vector<int> dir_theta_index_;    // per direction
  std::vector<Node> nodes_;
};

/// Field values for many independent draws at a fixed set of points.
struct Ensemble {
  std::vector<BallPoint> points;
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> values;  // values[j] = realization j, node order

  int count() const { return static_cast<int>(values.size()); }
  /// Per-realization values at one node.
  std::vector<double> column(std::size_t node) const;
};

/// One field draw over the nodes. Same (config, spectrum, factor, nodes,
/// index) always produces the same values, independent of thread count.
/// Terms with a repeated (degree, order) pair share one harmonic evaluation
/// per direction; their coefficient vectors are aggregated first.
std::vector<double> simulate_ball(const SamplerConfig& config,
                                  const AngularSpectrum& spectrum,
                                  const RadialFactor& factor, const NodeSet& nodes,
                                  std::uint32_t realization_index = 0);

/// Term-by-term transcription of the simulation formula, no caching or
/// parallelism. Kept as the reference the optimized kernel is tested and
/// benchmarked against; draws the identical random streams.
std::vector<double> simulate_ball_reference(const SamplerConfig& config,
                                            const AngularSpectrum& spectrum,
                                            const RadialFactor& factor,
                                            const NodeSet& nodes,
                                            std::uint32_t realization_index = 0);

/// Surface field (no radial structure):
///   f(x) = (1/sqrt(N)) sum_l 2 sqrt(pi A) (xi_l Re Y + eta_l Im Y).
/// Equivalent to simulate_ball on a single unit radius with a unit factor,
/// and implemented that way, so the two agree bit-for-bit.
std::vector<double> simulate_sphere(const SamplerConfig& config,
                                    const AngularSpectrum& spectrum,
                                    const std::vector<SphericalDirection>& directions,
                                    std::uint32_t realization_index = 0);

/// `count` independent realizations; realization j is a pure function of
/// (seed, j), so the ensemble is reproducible under any execution order.
/// max_threads = 0 uses all available.
Ensemble generate_ensemble(const SamplerConfig& config, const AngularSpectrum& spectrum,
                           const RadialFactor& factor, const NodeSet& nodes, int count,
                           int max_threads = 0);

/// Convenience wrapper producing a grid Realization for the I/O layer.
Realization simulate_ball_realization(const SamplerConfig& config,
                                      const AngularSpectrum& spectrum,
                                      const RadialFactor& factor, const BallGrid& grid,
                                      std::uint32_t realization_index = 0);

}  // namespace ballfield
