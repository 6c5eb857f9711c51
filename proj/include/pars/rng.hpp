#pragma once

#include <cstdint>

namespace pars {

// Counter-based pseudo-random stream (splitmix64 over a Weyl sequence).
//
// A (seed, stream_id) pair fully determines the draw sequence, and distinct
// stream ids give statistically independent streams, so parallel replicates
// can fan out without sharing mutable state. An RngStream is single-owner:
// never share one instance across threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept;

  std::uint64_t next_u64() noexcept;

  // Uniform on the open interval (0,1); safe to pass to log().
  double uniform() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t stream_id_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace pars
