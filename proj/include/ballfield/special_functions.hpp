#pragma once

#include <complex>
#include <span>

namespace ballfield {

/// Hard cap on the spherical harmonic degree. Geometric spectra decay fast
/// enough that anything above this would only accumulate rounding noise.
constexpr int kMaxDegree = 512;

/// Direction on the unit sphere: phi is longitude in [0, 2pi), theta is
/// colatitude in [0, pi] measured from the north pole.
struct SphericalDirection {
  double phi = 0.0;
  double theta = 0.0;
};

/// Legendre polynomial P_n(x) by the three-term recurrence.
/// Exact at the endpoints: P_n(1) = 1, P_n(-1) = (-1)^n.
/// Throws std::domain_error for |x| > 1 or n < 0.
double legendre_poly(int degree, double x);

/// Evaluates P_0(x) ... P_{max_degree}(x) in one recurrence pass.
/// `out` must have max_degree + 1 entries.
void legendre_poly_all(int max_degree, double x, std::span<double> out);

/// Associated Legendre function P_n^k(x) for 0 <= k <= n, Condon-Shortley
/// phase (-1)^k included. Seeded at P_k^k, then recursed upward in degree.
/// Overflows double range for large (n, k) like the function itself does;
/// use norm_assoc_legendre for spherical harmonic work.
double assoc_legendre(int degree, int order, double x);

/// Fully normalized associated Legendre function
///   sqrt((2n+1)/(4pi) * (n-k)!/(n+k)!) * P_n^k(x),   0 <= k <= n,
/// i.e. the theta factor of Y_n^k. The seed value is evaluated through
/// log-gamma differences so no intermediate factorial can overflow, and the
/// upward recurrence operates on the normalized values, which keeps it
/// stable through degree 512 and beyond.
double norm_assoc_legendre(int degree, int order, double x);

/// Fully normalized complex spherical harmonic
///   Y_n^k(phi, theta) = sqrt((2n+1)/(4pi) * (n-k)!/(n+k)!) P_n^k(cos theta) e^{ik phi}.
/// Negative orders come from the conjugation symmetry
///   Y_n^{-k} = (-1)^k conj(Y_n^k).
/// Throws std::domain_error if |k| > n.
std::complex<double> sph_harm(int degree, int order, const SphericalDirection& dir);

}  // namespace ballfield
