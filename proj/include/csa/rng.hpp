#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>

#include "csa/bytes.hpp"

namespace csa {

// Deterministic random source. Everything that needs randomness takes one
// of these by reference so whole runs replay bit-exactly under a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  std::uint32_t next_u32() { return static_cast<std::uint32_t>(engine_()); }

  // Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

  // Uniform double in [0, 1).
  double next_unit();

  // Standard normal via Box-Muller, deterministic.
  double next_gaussian();

  void fill(std::span<std::uint8_t> out);
  Bytes bytes(std::size_t n);

  template <std::size_t N>
  std::array<std::uint8_t, N> array() {
    std::array<std::uint8_t, N> a{};
    fill(a);
    return a;
  }

  // Independent child stream; deterministic given the parent's state.
  Rng fork() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ull); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace csa
