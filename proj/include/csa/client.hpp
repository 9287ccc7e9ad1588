#pragma once

#include <cstdint>
#include <optional>

#include "csa/cost.hpp"
#include "csa/messages.hpp"
#include "csa/puzzle.hpp"
#include "csa/token.hpp"

namespace csa {

// Everything a client walks away from registration with.
struct ClientCredentials {
  Bytes cid;
  UetToken uet;
  Bytes shared_secret;
  ItemSet items;
  PuzzleParams params;
};

// Raised when the server rejects a protocol step.
class ProtocolRejected : public Error {
 public:
  ProtocolRejected(RejectReason reason, const std::string& what)
      : Error(what), reason_(reason) {}
  RejectReason reason() const { return reason_; }

 private:
  RejectReason reason_;
};

// Client state machine, one owner per instance. Step methods mirror the
// protocol arrows so callers (demo, simulator, tests) control timing.
class ClientSession {
 public:
  ClientSession(ClientCredentials creds, CostLedger* ledger, Rng rng);

  ServiceRequest make_service_request();

  // Real pseudo-polynomial solve of the challenge; records the expensive
  // solve event.
  SolutionVector solve(const ChallengeMsg& challenge);

  // t_solve_start_ms is when the challenge arrived; the server checks
  // now - T against its solve window.
  SolutionMsg build_solution_msg(const ChallengeMsg& challenge,
                                 const SolutionVector& b,
                                 std::uint64_t t_solve_start_ms);

  // Unseals the granted session key and keeps the mutated UET for the
  // confirm step.
  SessionKey accept_grant(const SessionGrant& grant, std::uint64_t now_ms);

  SessionConfirm build_confirm(std::uint64_t t_ms);

  const ClientCredentials& credentials() const { return creds_; }
  const std::optional<SessionKey>& session_key() const { return session_key_; }

  // Replaces the held token (sub-session refresh keeps the mutated UET).
  void adopt_uet(UetToken tok) { creds_.uet = std::move(tok); }

 private:
  ClientCredentials creds_;
  CostLedger* ledger_;
  Rng rng_;
  PreSharedKey psk_;
  std::optional<SessionKey> session_key_;
};

// Narrow server interface the client runs against; the in-memory loopback
// and the simulator bus both implement it.
class ServerApi {
 public:
  virtual ~ServerApi() = default;
  virtual ProtocolMessage service_request(const ServiceRequest& msg) = 0;
  virtual ProtocolMessage solution(const SolutionMsg& msg) = 0;  // SessionGrant | Rejected
  virtual ProtocolMessage session_confirm(const SessionConfirm& msg) = 0;
};

// Monotonic virtual or wall clock handle for client_run.
class ClockHandle {
 public:
  virtual ~ClockHandle() = default;
  virtual std::uint64_t now_ms() const = 0;
  virtual void advance_ms(std::uint64_t delta) = 0;
};

// Full request → challenge → solve → grant → confirm walk. The clock is
// advanced by solve_advance_ms for the solve step so traces replay
// exactly regardless of wall time spent in the solver. Throws
// ProtocolRejected with the server's reason on any rejection.
SessionKey client_run(ClientSession& session, ServerApi& server, ClockHandle& clock,
                      std::uint64_t solve_advance_ms = 2'000);

}  // namespace csa
