#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace riesz {

/// Caller-owned random state. Uniform draws use the top 53 bits of a
/// 64-bit Mersenne twister so sequences are identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Stream for (seed, stream, index); distinct keys give independent states.
  static Rng derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  /// Uniform on [0, 1).
  double uniform();
  std::uint64_t next_u64() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Stable 64-bit key for a stream name (FNV-1a).
std::uint64_t stream_key(std::string_view name) noexcept;

} // namespace riesz
