#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <utility>

#include "csa/cost.hpp"
#include "csa/messages.hpp"
#include "csa/puzzle.hpp"
#include "csa/rate_limiter.hpp"
#include "csa/registry.hpp"
#include "csa/rng.hpp"
#include "csa/token.hpp"

namespace csa {

// strict: the received vector must equal the hash-derived one bit for bit.
// sum: any vector with A·B = S and popcount m is accepted.
enum class VerifyMode { kStrict, kSum };

struct SolveWindow {
  std::uint64_t min_ms = 1'000;
  std::uint64_t max_ms = 60'000;
};

struct ServerConfig {
  PuzzleParams puzzle;
  Bytes item_seed = to_bytes("csa-deployment-items");
  RateLimitConfig rate_limit;
  SolveWindow solve_window;
  VerifyMode verify_mode = VerifyMode::kStrict;
  CostWeights cost_weights;

  void validate() const;  // throws ParameterError
};

struct Verdict {
  bool legit = false;
  RejectReason reason = RejectReason::kBadUet;  // meaningful when !legit
  std::optional<Key32> session_key;             // set on legit verdicts
  // BadVector that would have passed in sum mode: an honest solver found a
  // different valid subset.
  bool strict_collision = false;
};

struct ConfirmResult {
  bool confirmed = false;
  RejectReason reason = RejectReason::kBadConfirm;
};

struct RegistrationResult {
  RegistryRecord record;
  UetToken uet;
  Bytes shared_secret;
  ItemSet items;
  PuzzleParams params;
};

// Server side of the three protocols. Holds exactly two mutable stores —
// the registry and the rate limiter. Nothing per-session survives between
// messages; everything a later step needs travels in the UET and the
// message fields.
class Server {
 public:
  Server(ServerConfig config, MasterKey mk, Rng rng, CostLedger* ledger);

  RegistrationResult register_client(const ClientProfile& profile,
                                     std::uint64_t now_ms);

  // ChallengeMsg on allow, Rejected{BlockedCid} for a blocked CID.
  ProtocolMessage handle_service_request(const ServiceRequest& msg,
                                         std::uint64_t now_ms);

  // Two-condition validation in fixed cheap-first order: hash-compare of
  // the vector, then the timestamp window, and only then the UET.
  std::pair<Verdict, std::optional<SessionGrant>> handle_solution(
      const SolutionMsg& msg, std::uint64_t now_ms);

  ConfirmResult handle_session_confirm(const SessionConfirm& msg,
                                       std::uint64_t now_ms);

  const ItemSet& items() const { return items_; }
  const ServerConfig& config() const { return config_; }
  const MasterKey& master_key() const { return mk_; }
  const Registry& registry() const { return registry_; }
  void import_registry(Registry reg);
  RateLimiter& rate_limiter() { return limiter_; }
  void set_ledger(CostLedger* ledger) { ledger_ = ledger; }

  // Test/simulator hook, invoked with the derived vector the server
  // otherwise discards. Stands in for the client's own computation; the
  // server keeps no copy.
  using ChallengeObserver =
      std::function<void(const Bytes& cid, const Challenge&, const SolutionVector&)>;
  void set_challenge_observer(ChallengeObserver obs) { observer_ = std::move(obs); }

  // Registration appends records here when set.
  void set_registry_file(std::string path) { registry_file_ = std::move(path); }

 private:
  void record(std::string_view label, CostCategory cat, std::uint64_t t_ms);
  Bytes fresh_cid();

  ServerConfig config_;
  MasterKey mk_;
  Rng rng_;
  CostLedger* ledger_;
  ItemSet items_;
  Registry registry_;
  RateLimiter limiter_;
  ChallengeObserver observer_;
  std::string registry_file_;
  mutable std::mutex mu_;
};

}  // namespace csa
