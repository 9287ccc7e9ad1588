#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "csa/bytes.hpp"
#include "csa/rng.hpp"

namespace csa {

inline constexpr std::size_t kNonceLen = 16;
using Nonce = std::array<std::uint8_t, kNonceLen>;

// Difficulty dials of the knapsack puzzle. n is the item count, m the
// required number of ones in the solution vector, item_bit_width the size
// of each item value. The solution vector is carved out of a SHA2-512
// digest, one bit per item, so n may not exceed 512.
struct PuzzleParams {
  std::size_t n = 512;
  std::size_t m = 55;
  unsigned item_bit_width = 16;

  void validate() const;  // throws ParameterError
};

// Length-n bit vector (the vector B).
class SolutionVector {
 public:
  SolutionVector() = default;
  explicit SolutionVector(std::size_t n) : bits_(n, 0) {}
  static SolutionVector from_bits(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  bool test(std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
  std::size_t popcount() const;

  // MSB-first packing, e.g. bit 0 lands in the high bit of byte 0.
  Bytes packed() const;
  static SolutionVector unpack(std::size_t n_bits, ByteSpan packed);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  bool operator==(const SolutionVector&) const = default;
  bool operator<(const SolutionVector& o) const { return bits_ < o.bits_; }

 private:
  std::vector<std::uint8_t> bits_;  // one byte per bit, each 0 or 1
};

// The agreed item values a_1..a_n, each in [1, 2^item_bit_width - 1].
struct ItemSet {
  std::vector<std::uint32_t> items;

  std::size_t size() const { return items.size(); }
  std::uint64_t total() const;
};

// Wire challenge: target sum plus the server nonce that lets the server
// re-derive the expected vector statelessly.
struct Challenge {
  std::uint64_t s = 0;
  Nonce r_cloudserv{};
};

// Deterministically expands a seed into n items uniform in
// [1, 2^item_bit_width - 1]. Re-invocation with the same inputs
// reproduces the set bit-for-bit; the set is distributed to clients at
// registration.
ItemSet generate_item_set(const PuzzleParams& params, ByteSpan seed);

// Hashes (cid, mk, r) with SHA2-512 and keeps the first m set bits of the
// digest, scanning byte 0 first, most-significant bit first. If the first
// n digest bits carry fewer than m ones, a one-byte counter (1, 2, ...)
// is appended to the hash input and the digest re-derived.
SolutionVector derive_solution_vector(ByteSpan cid, ByteSpan mk, ByteSpan r,
                                      const PuzzleParams& params);

// Dot product A x B.
std::uint64_t compute_target(const ItemSet& a, const SolutionVector& b);

struct ChallengeWithSolution {
  Challenge challenge;
  SolutionVector solution;  // the server discards this; tests may inspect it
};

// Fresh nonce, derived vector, target sum.
ChallengeWithSolution make_challenge(ByteSpan cid, ByteSpan mk, const ItemSet& a,
                                     const PuzzleParams& params, Rng& rng);

// Memory budget for solver tables, counted in table cells (bits).
// Default is a 2 GiB-equivalent table.
struct SolverLimits {
  std::uint64_t max_cells = (2ull << 30) * 8;
};

// Pseudo-polynomial subset-sum solver. Without m it runs the classic
// reachability table over sums and reconstructs one solution from the
// stored rows. With m it searches for a solution with exactly m ones
// (falling back to an unconstrained solution when none exists).
// Returns nullopt when no subset sums to s. Throws ResourceError when the
// tables would exceed limits.max_cells.
std::optional<SolutionVector> solve_subset_sum_dp(
    const ItemSet& a, std::uint64_t s,
    std::optional<std::size_t> m = std::nullopt,
    const SolverLimits& limits = {});

// Exhaustive oracle: every subset of a summing to s, sorted by bit
// sequence. Guarded to n <= 25.
std::vector<SolutionVector> solve_subset_sum_bruteforce(const ItemSet& a,
                                                        std::uint64_t s);

bool verify_solution(const ItemSet& a, const SolutionVector& b, std::uint64_t s);

}  // namespace csa
