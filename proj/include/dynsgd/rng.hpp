#pragma once

#include <cstdint>

namespace dynsgd {

// Counter-based random stream (Philox 4x64-10). The (seed, stream_id) pair is
// the cipher key, so equal pairs replay the identical sequence and distinct
// pairs yield independent substreams. Single-owner mutable state: moveable
// across threads, never shared concurrently.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();
  // Uniform on the open interval (0, 1).
  double next_uniform();
  // Standard normal via Box-Muller; consumes two uniforms per pair of draws.
  double next_normal();

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_[2];
  std::uint64_t ctr_[4];
  std::uint64_t buf_[4];
  int buf_pos_;
  double spare_normal_;
  bool has_spare_;
};

}  // namespace dynsgd
