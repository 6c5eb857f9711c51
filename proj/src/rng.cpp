#include "pars/rng.hpp"

namespace pars {
namespace {

constexpr std::uint64_t kWeylIncrement = 0x9E3779B97F4A7C15ULL;

// splitmix64 output function (Steele, Lea, Flood 2014).
std::uint64_t mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : seed_(seed), stream_id_(stream_id) {
  // Hash (seed, stream_id) into a starting point on the Weyl sequence.
  std::uint64_t h = mix(seed + kWeylIncrement);
  h = mix(h ^ mix(stream_id + 0xD1B54A32D192ED03ULL));
  counter_ = h;
}

std::uint64_t RngStream::next_u64() noexcept {
  counter_ += kWeylIncrement;
  return mix(counter_);
}

double RngStream::uniform() noexcept {
  // (k + 0.5) / 2^53 for k in [0, 2^53): strictly inside (0,1).
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace pars
