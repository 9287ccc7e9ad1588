#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "csa/bytes.hpp"

namespace csa {

struct RateLimitConfig {
  std::uint64_t threshold_ms = 10'000;      // "low time threshold"
  std::uint64_t block_duration_ms = 60'000;
};

enum class RateDecision { kAllow, kBlock };

// Per-CID sliding window: a ring of the last three request times plus a
// block-until timestamp. The request whose three predecessors all fall
// within the threshold starts a block; blocked CIDs get no challenge.
class RateLimiter {
 public:
  RateDecision check(ByteSpan cid, std::uint64_t now_ms, const RateLimitConfig& cfg);

  std::size_t tracked_cids() const { return entries_.size(); }
  std::size_t blocked_cids(std::uint64_t now_ms) const;

  // Drops entries idle past both the threshold and any block period.
  void gc(std::uint64_t now_ms, const RateLimitConfig& cfg);

 private:
  struct Entry {
    std::array<std::uint64_t, 3> ring{};
    std::size_t ring_len = 0;
    std::size_t ring_pos = 0;  // next slot to overwrite
    std::uint64_t block_until_ms = 0;

    void push(std::uint64_t t);
    std::uint64_t oldest() const;
    std::uint64_t newest() const;
  };

  std::map<Bytes, Entry> entries_;
  std::uint64_t checks_since_gc_ = 0;
};

}  // namespace csa
