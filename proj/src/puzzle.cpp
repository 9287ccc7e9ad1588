#include "csa/puzzle.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "csa/errors.hpp"
#include "csa/hash.hpp"

namespace csa {

namespace {

constexpr std::size_t kDigestBits = kSha512Len * 8;  // 512
constexpr std::string_view kPuzzleDomain = "CSA-PUZZLE-v1";
constexpr std::string_view kItemsDomain = "CSA-ITEMS-v1";

void append_lp(Bytes& out, ByteSpan v) {
  put_u32be(out, static_cast<std::uint32_t>(v.size()));
  out.insert(out.end(), v.begin(), v.end());
}

bool digest_bit(const std::array<std::uint8_t, kSha512Len>& d, std::size_t i) {
  return (d[i / 8] >> (7 - (i % 8))) & 1;  // byte 0 first, MSB first
}

}  // namespace

void PuzzleParams::validate() const {
  if (n == 0 || n > kDigestBits) {
    throw ParameterError("puzzle n must be in [1, 512]: one digest bit per item");
  }
  if (m > n) throw ParameterError("puzzle m must not exceed n");
  if (item_bit_width < 1 || item_bit_width > 32) {
    throw ParameterError("item_bit_width must be in [1, 32]");
  }
}

SolutionVector SolutionVector::from_bits(std::vector<std::uint8_t> bits) {
  SolutionVector v;
  v.bits_ = std::move(bits);
  for (auto& b : v.bits_) b = b ? 1 : 0;
  return v;
}

std::size_t SolutionVector::popcount() const {
  std::size_t c = 0;
  for (auto b : bits_) c += b;
  return c;
}

Bytes SolutionVector::packed() const {
  Bytes out((bits_.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80 >> (i % 8));
  }
  return out;
}

SolutionVector SolutionVector::unpack(std::size_t n_bits, ByteSpan packed) {
  if (packed.size() != (n_bits + 7) / 8) {
    throw FormatError("packed bit vector has wrong length");
  }
  SolutionVector v(n_bits);
  for (std::size_t i = 0; i < n_bits; ++i) {
    v.bits_[i] = (packed[i / 8] >> (7 - (i % 8))) & 1;
  }
  // Trailing pad bits must be zero so the encoding stays canonical.
  for (std::size_t i = n_bits; i < packed.size() * 8; ++i) {
    if ((packed[i / 8] >> (7 - (i % 8))) & 1) {
      throw FormatError("nonzero padding in packed bit vector");
    }
  }
  return v;
}

std::uint64_t ItemSet::total() const {
  std::uint64_t t = 0;
  for (auto v : items) t += v;
  return t;
}

ItemSet generate_item_set(const PuzzleParams& params, ByteSpan seed) {
  params.validate();
  if (seed.empty()) throw ParameterError("item set seed must be non-empty");

  const std::uint32_t mask = params.item_bit_width == 32
                                 ? 0xffffffffu
                                 : ((1u << params.item_bit_width) - 1);
  Bytes prefix = to_bytes(kItemsDomain);
  append_lp(prefix, seed);

  ItemSet set;
  set.items.reserve(params.n);
  std::uint32_t block_idx = 0;
  std::array<std::uint8_t, kSha512Len> block{};
  std::size_t pos = kSha512Len;  // force first refill
  while (set.items.size() < params.n) {
    if (pos + 4 > kSha512Len) {
      Bytes msg = prefix;
      put_u32be(msg, block_idx++);
      block = sha512(msg);
      pos = 0;
    }
    std::uint32_t v = (std::uint32_t(block[pos]) << 24) |
                      (std::uint32_t(block[pos + 1]) << 16) |
                      (std::uint32_t(block[pos + 2]) << 8) |
                      std::uint32_t(block[pos + 3]);
    pos += 4;
    v &= mask;
    if (v != 0) set.items.push_back(v);  // rejection keeps [1, 2^w - 1] uniform
  }
  return set;
}

SolutionVector derive_solution_vector(ByteSpan cid, ByteSpan mk, ByteSpan r,
                                      const PuzzleParams& params) {
  params.validate();
  if (mk.empty()) throw ParameterError("master key must be non-empty");

  Bytes base = to_bytes(kPuzzleDomain);
  append_lp(base, cid);
  append_lp(base, mk);
  append_lp(base, r);

  // Counter 0 means no re-derivation; otherwise append one counter byte
  // until the first n digest bits carry at least m ones.
  for (unsigned counter = 0; counter <= 255; ++counter) {
    Bytes msg = base;
    if (counter > 0) msg.push_back(static_cast<std::uint8_t>(counter));
    auto d = sha512(msg);

    std::size_t ones = 0;
    for (std::size_t i = 0; i < params.n; ++i) ones += digest_bit(d, i);
    if (ones < params.m) continue;

    SolutionVector b(params.n);
    std::size_t kept = 0;
    for (std::size_t i = 0; i < params.n && kept < params.m; ++i) {
      if (digest_bit(d, i)) {
        b.set(i, true);
        ++kept;
      }
    }
    return b;
  }
  // 2^-255-ish; the counter byte is exhausted only for adversarial m ~ n.
  throw Error("solution vector re-derivation exhausted its counter");
}

std::uint64_t compute_target(const ItemSet& a, const SolutionVector& b) {
  if (a.size() != b.size()) {
    throw ParameterError("item set and solution vector lengths differ");
  }
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b.test(i)) s += a.items[i];
  }
  return s;
}

ChallengeWithSolution make_challenge(ByteSpan cid, ByteSpan mk, const ItemSet& a,
                                     const PuzzleParams& params, Rng& rng) {
  params.validate();
  if (a.size() != params.n) {
    throw ParameterError("item set size does not match puzzle params");
  }
  Challenge ch;
  ch.r_cloudserv = rng.array<kNonceLen>();
  SolutionVector b = derive_solution_vector(cid, mk, ch.r_cloudserv, params);
  ch.s = compute_target(a, b);
  return {ch, std::move(b)};
}

bool verify_solution(const ItemSet& a, const SolutionVector& b, std::uint64_t s) {
  return compute_target(a, b) == s;
}

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

namespace {

using Words = std::vector<std::uint64_t>;

inline std::size_t word_count(std::uint64_t n_bits) {
  return static_cast<std::size_t>(n_bits / 64 + 1);
}

inline bool bit_get(const Words& w, std::uint64_t i) {
  return (w[i / 64] >> (i % 64)) & 1;
}

inline void bit_put(Words& w, std::uint64_t i) { w[i / 64] |= 1ull << (i % 64); }

// dst |= src << shift, both sized for the same bit capacity.
void shl_or(Words& dst, const Words& src, std::uint64_t shift) {
  const std::size_t nw = dst.size();
  const std::size_t ws = static_cast<std::size_t>(shift / 64);
  const unsigned bs = static_cast<unsigned>(shift % 64);
  if (ws >= nw) return;
  if (bs == 0) {
    for (std::size_t j = nw; j-- > ws;) dst[j] |= src[j - ws];
    return;
  }
  for (std::size_t j = nw; j-- > ws;) {
    std::uint64_t v = src[j - ws] << bs;
    if (j > ws) v |= src[j - ws - 1] >> (64 - bs);
    dst[j] |= v;
  }
}

void check_budget(std::uint64_t cells, const SolverLimits& limits) {
  if (cells > limits.max_cells) {
    throw ResourceError(
        "solver table exceeds the memory budget; reduce item_bit_width or the "
        "target sum");
  }
}

// Reachability layers over items [lo, hi): layers[c] holds the sums
// reachable using exactly c of those items, truncated at smax.
std::vector<Words> count_reach(const ItemSet& a, std::size_t lo, std::size_t hi,
                               std::size_t cmax, std::uint64_t smax) {
  const std::size_t nw = word_count(smax);
  std::vector<Words> layers(cmax + 1, Words(nw, 0));
  layers[0][0] = 1;
  for (std::size_t i = lo; i < hi; ++i) {
    const std::uint64_t ai = a.items[i];
    if (ai > smax) continue;
    const std::size_t top = std::min(cmax, i - lo + 1);
    for (std::size_t c = top; c >= 1; --c) {
      shl_or(layers[c], layers[c - 1], ai);
    }
  }
  return layers;
}

// First set bit position <= limit, or nullopt.
std::optional<std::uint64_t> first_common_split(const Words& left,
                                                const Words& right,
                                                std::uint64_t t) {
  // Looking for t1 with left[t1] and right[t - t1].
  for (std::uint64_t t1 = 0; t1 <= t;) {
    std::uint64_t w = left[t1 / 64] >> (t1 % 64);
    if (w == 0) {
      t1 = (t1 / 64 + 1) * 64;
      continue;
    }
    t1 += static_cast<std::uint64_t>(std::countr_zero(w));
    if (t1 > t) break;
    if (bit_get(right, t - t1)) return t1;
    ++t1;
  }
  return std::nullopt;
}

// Assigns bits for items [lo, hi) so that exactly c of them are set and
// they sum to t. Caller guarantees feasibility.
void assign_count_bits(const ItemSet& a, std::size_t lo, std::size_t hi,
                       std::uint64_t t, std::size_t c, SolutionVector& out) {
  if (c == 0) {
    return;  // t is 0; bits stay clear
  }
  if (hi - lo == 1) {
    out.set(lo, true);  // c == 1 and t == a[lo]
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const std::size_t left_n = mid - lo;
  const std::size_t right_n = hi - mid;

  auto left = count_reach(a, lo, mid, std::min(c, left_n), t);
  auto right = count_reach(a, mid, hi, std::min(c, right_n), t);

  const std::size_t c1_lo = c > right_n ? c - right_n : 0;
  const std::size_t c1_hi = std::min(c, left_n);
  for (std::size_t c1 = c1_lo; c1 <= c1_hi; ++c1) {
    auto t1 = first_common_split(left[c1], right[c - c1], t);
    if (!t1) continue;
    const std::uint64_t tl = *t1;
    left.clear();
    right.clear();
    assign_count_bits(a, lo, mid, tl, c1, out);
    assign_count_bits(a, mid, hi, t - tl, c - c1, out);
    return;
  }
  throw Error("internal: infeasible split in count-constrained solver");
}

std::optional<SolutionVector> solve_plain(const ItemSet& a, std::uint64_t s,
                                          const SolverLimits& limits) {
  const std::size_t n = a.size();
  if (s == 0) return SolutionVector(n);
  if (s > a.total()) return std::nullopt;

  check_budget(static_cast<std::uint64_t>(n + 1) * (s + 1), limits);

  // Reachability table over sums, one stored row per item; the rows double
  // as parent pointers for the reconstruction walk.
  const std::size_t nw = word_count(s);
  std::vector<Words> rows(n + 1, Words(nw, 0));
  rows[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    rows[i] = rows[i - 1];
    if (a.items[i - 1] <= s) shl_or(rows[i], rows[i - 1], a.items[i - 1]);
  }
  if (!bit_get(rows[n], s)) return std::nullopt;

  SolutionVector b(n);
  std::uint64_t t = s;
  for (std::size_t i = n; i >= 1; --i) {
    if (bit_get(rows[i - 1], t)) continue;  // item unused
    b.set(i - 1, true);
    t -= a.items[i - 1];
  }
  return b;
}

std::optional<SolutionVector> solve_with_popcount(const ItemSet& a, std::uint64_t s,
                                                  std::size_t m,
                                                  const SolverLimits& limits) {
  const std::size_t n = a.size();
  if (m > n || s > a.total()) return std::nullopt;
  if (s == 0) {
    if (m == 0) return SolutionVector(n);
    return std::nullopt;  // items are >= 1
  }
  if (m == 0) return std::nullopt;  // s > 0 needs at least one item

  // Two live layer tables at any point of the reconstruction.
  check_budget(2 * static_cast<std::uint64_t>(m + 1) * (s + 1), limits);

  auto layers = count_reach(a, 0, n, m, s);
  if (!bit_get(layers[m], s)) return std::nullopt;
  layers.clear();

  SolutionVector b(n);
  assign_count_bits(a, 0, n, s, m, b);
  return b;
}

}  // namespace

std::optional<SolutionVector> solve_subset_sum_dp(const ItemSet& a, std::uint64_t s,
                                                  std::optional<std::size_t> m,
                                                  const SolverLimits& limits) {
  if (a.size() == 0) {
    return s == 0 ? std::optional<SolutionVector>(SolutionVector(0)) : std::nullopt;
  }
  if (m) {
    if (auto exact = solve_with_popcount(a, s, *m, limits)) return exact;
    // No solution with the requested popcount; fall back to any solution.
  }
  return solve_plain(a, s, limits);
}

std::vector<SolutionVector> solve_subset_sum_bruteforce(const ItemSet& a,
                                                        std::uint64_t s) {
  const std::size_t n = a.size();
  if (n > 25) throw ParameterError("brute-force oracle is guarded to n <= 25");

  std::vector<std::uint32_t> hits;
  if (s == 0) hits.push_back(0);

  // Gray-code walk: step k flips bit countr_zero(k), so the running sum
  // updates in O(1) per subset.
  std::uint32_t mask = 0;
  std::uint64_t sum = 0;
  const std::uint64_t end = 1ull << n;
  for (std::uint64_t k = 1; k < end; ++k) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(k));
    mask ^= 1u << j;
    if (mask & (1u << j)) {
      sum += a.items[j];
    } else {
      sum -= a.items[j];
    }
    if (sum == s) hits.push_back(mask);
  }

  std::vector<SolutionVector> out;
  out.reserve(hits.size());
  for (std::uint32_t h : hits) {
    SolutionVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (h & (1u << i)) v.set(i, true);
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace csa
