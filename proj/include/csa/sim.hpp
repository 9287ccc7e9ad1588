#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "csa/client.hpp"
#include "csa/server.hpp"

namespace csa::sim {

// Deterministic discrete-event clock. Events at equal times fire in
// scheduling order.
class VirtualClock : public ClockHandle {
 public:
  std::uint64_t now_ms() const override { return now_ms_; }
  void advance_ms(std::uint64_t delta) override { now_ms_ += delta; }

  void schedule(std::uint64_t at_ms, std::function<void()> fn);
  void schedule_in(std::uint64_t delta_ms, std::function<void()> fn);

  // Runs events with time <= end_ms, then parks the clock at end_ms.
  void run_until(std::uint64_t end_ms);
  bool empty() const { return queue_.empty(); }

 private:
  struct Event {
    std::uint64_t at_ms;
    std::uint64_t seq;
    std::function<void()> fn;
    bool operator>(const Event& o) const {
      return at_ms != o.at_ms ? at_ms > o.at_ms : seq > o.seq;
    }
  };
  std::uint64_t now_ms_ = 0;
  std::uint64_t next_seq_ = 0;
  std::priority_queue<Event, std::vector<Event>, std::greater<>> queue_;
};

enum class AttackerKind {
  kRandomCidFlood,  // one random CID per identity, hammered for the run
  kUnsolvedFlood,   // fresh random CID per request, never answers
  kForgedVector,    // answers challenges with random popcount-m vectors
  kReplay,          // re-sends a legit solution captured from the bus
};

std::string_view attacker_kind_name(AttackerKind k);

struct AttackerProfile {
  AttackerKind kind = AttackerKind::kRandomCidFlood;
  double rate_per_s = 1.0;  // per identity
  std::size_t count = 1;    // identities
};

// How sim clients produce solution vectors. Real DP solves are feasible at
// small n; at deployment scale the challenge-time vector is injected and
// only the virtual solve delay is modeled.
enum class ClientSolver { kAuto, kReal, kOracle };

// Virtual solve latency, sampled per solve (normal, clamped into the
// server's solve window).
struct SolveDelayModel {
  double mean_ms = 0;  // 0 -> pick a default from the puzzle params
  double stddev_ms = 0;
};

struct Scenario {
  std::size_t legit_clients = 0;
  std::vector<AttackerProfile> attackers;
  double duration_s = 0;
  std::uint64_t seed = 0;
  ServerConfig server;
  ClientSolver client_solver = ClientSolver::kAuto;
  SolveDelayModel solve_delay;

  void validate() const;  // throws ParameterError
};

Scenario scenario_from_json_text(const std::string& text);
Scenario scenario_from_file(const std::string& path);

struct SimMetrics {
  std::uint64_t service_requests = 0;
  std::uint64_t challenges_issued = 0;
  std::uint64_t blocked_requests = 0;

  std::uint64_t solutions_processed = 0;
  std::uint64_t legit_verdicts = 0;
  std::uint64_t bad_vector = 0;
  std::uint64_t stale_timestamp = 0;
  std::uint64_t bad_uet = 0;

  std::uint64_t confirms_ok = 0;
  std::uint64_t confirms_rejected = 0;

  std::uint64_t replay_attempts = 0;
  std::uint64_t replay_successes = 0;
  std::uint64_t strict_collisions = 0;

  std::uint64_t legit_total = 0;
  std::uint64_t legit_completed = 0;
  double legit_completion_rate = 0;

  std::uint64_t client_cost_total = 0;
  std::uint64_t server_cost_total = 0;
  std::uint64_t server_expensive_events = 0;
  std::uint64_t server_uet_decrypts_on_bad_vector = 0;
  std::uint64_t blocked_cids_end = 0;

  bool operator==(const SimMetrics&) const = default;

  std::string to_json_text() const;
  std::string to_csv() const;  // key,value rows
};

// Deterministic for a fixed scenario seed: running twice yields identical
// metrics.
SimMetrics run_scenario(const Scenario& scenario);

// Wall-clock benchmark of real solves: one row per m.
struct BenchRow {
  std::size_t m = 0;
  double mean_s = 0;
  double stddev_s = 0;
  std::size_t trials = 0;
};

// Random instances with exactly m ones in the planted solution. trials
// must be >= 3.
std::vector<BenchRow> bench_solver(std::size_t n, std::size_t m_lo, std::size_t m_hi,
                                   unsigned item_bit_width, std::size_t trials,
                                   std::uint64_t seed);

std::string bench_csv(const std::vector<BenchRow>& rows);  // m,mean_s,stddev_s,trials

// Medians for the client/server cost asymmetry check: seconds per real
// solve vs seconds per server-side derive + compare validation.
double measure_median_solve_s(const PuzzleParams& params, std::size_t trials,
                              std::uint64_t seed);
double measure_median_validation_s(const PuzzleParams& params, std::size_t trials,
                                   std::uint64_t seed);

}  // namespace csa::sim
