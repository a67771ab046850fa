#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace ballfield {

/// Philox4x32-10 keyed counter permutation (Salmon et al., Random123 family).
/// Stateless: every 128-bit counter value maps to four independent 32-bit
/// words under a 64-bit key, so disjoint counter ranges give disjoint,
/// reproducible random streams with no generator state to share or lock.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

/// What a stream's draws are used for. Keeping the role in the counter layout
/// guarantees that e.g. degree draws and white-noise draws of the same term
/// never overlap.
enum class StreamRole : std::uint32_t {
  Degree = 0,    // spherical harmonic degree draws
  Order = 1,     // order draws, uniform on [-n, n]
  XiWhite = 2,   // white noise feeding the real-part coefficient vector
  EtaWhite = 3,  // white noise feeding the imaginary-part coefficient vector
  Scratch = 4,   // anything else (tests, point selection)
};

/// A cursor into the stream identified by (seed, realization, term, role).
/// Counter layout: {block, role, term, realization}; key holds the seed.
/// Streams with distinct identifiers are computationally independent, which
/// is what makes ensemble generation order- and thread-count-invariant.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint32_t realization, std::uint32_t term,
               StreamRole role);

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double uniform();

  /// Standard normal via Box-Muller; pairs are buffered.
  double normal();

  /// Fills `out` with independent standard normals.
  void fill_normals(std::span<double> out);

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 3> stream_id_;  // role, term, realization
  std::uint32_t block_ = 0;
  std::uint64_t pending_word_ = 0;
  bool has_pending_word_ = false;
  double pending_normal_ = 0.0;
  bool has_pending_normal_ = false;
};

}  // namespace ballfield
