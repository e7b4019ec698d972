#pragma once

#include <cstdint>

namespace expvote {

// Counter-based randomness. Every variate is a pure function of
// (seed, purpose, replicate, agent, draw index); no generator state is
// shared between draws, so replicates can be scheduled on any number of
// workers in any order and still produce identical results.
//
// Stream key derivation and draws, all arithmetic mod 2^64, where mix64 is
// the splitmix64 finalizer:
//   key     = mix64(mix64(mix64(seed ^ purpose) ^ replicate) ^ agent)
//   draw(j) = mix64(key + (j + 1) * 0x9E3779B97F4A7C15)
// Purpose tags: 0x53544154 state draw, 0x54595045 type draw,
// 0x41525256 first-arrival draw. This mapping is part of the output-format
// contract: a reimplementation that follows it reproduces every simulation
// byte for byte.

constexpr std::uint64_t kPurposeState = 0x53544154ULL;    // "STAT"
constexpr std::uint64_t kPurposeType = 0x54595045ULL;     // "TYPE"
constexpr std::uint64_t kPurposeArrival = 0x41525256ULL;  // "ARRV"

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t purpose,
                                   std::uint64_t replicate, std::uint64_t agent) {
  return mix64(mix64(mix64(seed ^ purpose) ^ replicate) ^ agent);
}

constexpr std::uint64_t stream_draw(std::uint64_t key, std::uint64_t j) {
  return mix64(key + (j + 1) * kGolden);
}

// Uniform on the open interval (0,1); never 0 or 1, so logs stay finite.
inline double to_unit(std::uint64_t x) {
  return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace expvote
