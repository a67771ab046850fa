#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ballfield/covariance.hpp"
#include "ballfield/radial_factorization.hpp"

namespace ballfield {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tensor grid of directions: n_phi uniform longitudes on [0, 2pi) and
/// n_theta uniform colatitudes on [0, pi] including both poles.
struct SphereGrid {
  std::vector<double> phis;
  std::vector<double> thetas;

  static SphereGrid uniform(int n_theta, int n_phi);

  int n_theta() const { return static_cast<int>(thetas.size()); }
  int n_phi() const { return static_cast<int>(phis.size()); }
};

/// RadialGrid x SphereGrid tensor product. Node ordering is part of every
/// file format: radius-major, then theta, then phi, i.e.
///   index = (i_r * n_theta + i_theta) * n_phi + i_phi.
struct BallGrid {
  RadialGrid radial;
  SphereGrid sphere;

  std::size_t node_count() const {
    return static_cast<std::size_t>(radial.size()) * sphere.n_theta() * sphere.n_phi();
  }
  std::size_t node_index(int i_r, int i_theta, int i_phi) const {
    return (static_cast<std::size_t>(i_r) * sphere.n_theta() + i_theta) * sphere.n_phi() +
           i_phi;
  }
  BallPoint node(std::size_t index) const;
};

/// One draw of the field over a BallGrid, with seed provenance.
struct Realization {
  BallGrid grid;
  std::vector<double> values;  // grid node order
  std::uint64_t seed = 0;
  std::uint32_t index = 0;
};

/// Cross-section selector: either the great-circle plane through longitude
/// phi0 (shown as the phi0 and phi0+pi half-planes), or the spherical shell
/// at grid radius r0. No interpolation: both coordinates must sit on the grid.
struct SliceSpec {
  enum class Kind { FixedPhi, Shell } kind = Kind::FixedPhi;
  double value = 0.0;  // phi0 in [0, pi) or r0
};

/// 2D slice with its axis coordinates. Fixed-phi slices are M rows by
/// 2*n_theta columns (columns 0..n_theta-1 hold the phi0 half-plane, the rest
/// the phi0+pi half-plane, both in theta order); shell slices are n_theta
/// rows by n_phi columns.
struct Slice {
  SliceSpec spec;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major
  std::vector<double> row_coords;
  std::vector<double> col_coords;

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

Slice extract_slice(const Realization& realization, const SliceSpec& spec);

/// CSV with one "r,phi,theta,value" row per node in grid order, full 17
/// significant digits, preceded by "# key=value" header comments carrying the
/// dimensions and seed. read(write(x)) == x bit-exactly.
void write_field_csv(const Realization& realization, std::ostream& out);
Realization read_field_csv(std::istream& in);
void write_field_csv_file(const Realization& realization, const std::string& path);
Realization read_field_csv_file(const std::string& path);

/// Raw little-endian format for large ensembles: magic "BALLF1", u32 dims
/// (M, n_theta, n_phi), u64 seed, u32 realization index, then the radii,
/// thetas, phis and values as 8-byte reals in grid order.
void write_field_binary(const Realization& realization, std::ostream& out);
Realization read_field_binary(std::istream& in);
void write_field_binary_file(const Realization& realization, const std::string& path);
Realization read_field_binary_file(const std::string& path);

/// Legacy VTK ASCII STRUCTURED_GRID with points at Cartesian positions and
/// the field as POINT_DATA. Dimensions are (n_phi + 1, n_theta, M); the extra
/// phi column repeats phi = 0 so surfaces close in viewers.
void write_vtk_ball(const Realization& realization, std::ostream& out);
void write_vtk_ball_file(const Realization& realization, const std::string& path);

/// Binary PPM (P6) rendering of a slice through a 256-entry diverging
/// blue-white-red colormap. Values map linearly from [min, max], or from
/// [-c, c] with c = max |value| when `symmetric` is set. Fixed-phi slices are
/// rasterized nearest-node onto a square canvas with outside-disk pixels
/// white; shell slices map one node to one pixel block.
struct RenderOptions {
  bool symmetric = false;
  int canvas = 512;  // square canvas edge for polar slices
};
void render_slice(const Slice& slice, const RenderOptions& options, std::ostream& out);
void render_slice_file(const Slice& slice, const RenderOptions& options,
                       const std::string& path);

}  // namespace ballfield
