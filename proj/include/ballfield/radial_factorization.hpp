#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "ballfield/covariance.hpp"

namespace ballfield {

/// Covariance matrix could not be factorized even after diagonal jitter.
struct NotPositiveDefinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Symmetric matrix has an eigenvalue too negative to be rounding noise.
struct IndefiniteMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Strictly increasing radii in (0, 1]. The simulation produces exact radial
/// correlation only on these radii; there is no radial interpolation, so the
/// grid must contain every radius at which the field will be evaluated.
class RadialGrid {
 public:
  explicit RadialGrid(std::vector<double> radii);

  /// M equally spaced radii i/M, i = 1..M.
  static RadialGrid uniform(int count);

  /// Builds a grid from arbitrary (unsorted, possibly repeated) radii.
  /// Values equal within rel_tol collapse onto one grid entry; the returned
  /// map sends each input position to its grid index. Collapsing keeps the
  /// covariance matrix away from exact rank deficiency when evaluation
  /// points happen to share a radius.
  static std::pair<RadialGrid, std::vector<int>> from_values(
      const std::vector<double>& values, double rel_tol = 1e-12);

  int size() const { return static_cast<int>(radii_.size()); }
  double radius(int i) const { return radii_[i]; }
  const std::vector<double>& radii() const { return radii_; }

 private:
  std::vector<double> radii_;
};

/// Values of C_r over all radius pairs of a grid. Symmetric by construction.
struct RadialCovMatrix {
  Eigen::MatrixXd entries;
};

RadialCovMatrix build_radial_matrix(const RadialGrid& grid,
                                    const RadialCovarianceModel& model);

/// Escalating diagonal repair for numerically semidefinite matrices:
/// retry r adds initial_scale * trace/M * growth^(r-1) to the diagonal.
struct JitterPolicy {
  double initial_scale = 1e-12;
  double growth = 10.0;
  int max_retries = 3;
};

/// Lower-triangular factor with L L^T equal to the (possibly jittered)
/// covariance matrix; diagonal of L strictly positive.
struct CholeskyFactor {
  Eigen::MatrixXd lower;
  double jitter_applied = 0.0;

  int size() const { return static_cast<int>(lower.rows()); }
};

CholeskyFactor cholesky(const RadialCovMatrix& cov, const JitterPolicy& policy = {});

/// Eigendecomposition C = V diag(lambda) V^T with eigenvalues sorted
/// descending (eigenvectors as columns). `retained` marks how many leading
/// eigenpairs the correlating map uses; `loading` caches V_1..retained *
/// sqrt(lambda) so correlate() is a single mat-vec.
struct KLFactor {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  int retained = 0;
  double trace_fraction = 1.0;
  Eigen::MatrixXd loading;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  void rebuild_loading();
};

/// Full decomposition (retained = M). Eigenvalues within -1e-12 * trace of
/// zero are clamped to zero; anything lower throws IndefiniteMatrix.
KLFactor eigendecompose(const RadialCovMatrix& cov);

/// Keeps the smallest leading count whose eigenvalue sum reaches
/// fraction * trace. fraction in (0, 1].
KLFactor truncate_kl(const KLFactor& factor, double fraction);

/// CSV rows "i,lambda_i,cumulative_fraction" for diagnostics.
void write_eigenvalues_csv(const KLFactor& factor, std::ostream& out);

/// Number of white-noise inputs the factor consumes per correlate call.
inline int white_size(const CholeskyFactor& f) { return f.size(); }
inline int white_size(const KLFactor& f) { return f.retained; }

/// Maps independent N(0,1) inputs to a vector with covariance C (Cholesky)
/// or its rank-retained approximation (KL).
Eigen::VectorXd correlate(const CholeskyFactor& factor, const Eigen::VectorXd& white);
Eigen::VectorXd correlate(const KLFactor& factor, const Eigen::VectorXd& white);

/// Either correlating factor, as selected by the sampler configuration.
using RadialFactor = std::variant<CholeskyFactor, KLFactor>;

int factor_size(const RadialFactor& factor);
int white_size(const RadialFactor& factor);
Eigen::VectorXd correlate(const RadialFactor& factor, const Eigen::VectorXd& white);

}  // namespace ballfield
