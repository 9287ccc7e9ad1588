#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include "csa/bytes.hpp"
#include "csa/puzzle.hpp"

namespace csa {

enum class RejectReason : std::uint8_t {
  kBlockedCid = 1,
  kBadVector = 2,
  kStaleTimestamp = 3,
  kBadUet = 4,
  kBadConfirm = 5,
};

std::string_view reject_reason_name(RejectReason r);

struct ServiceRequest {
  Bytes cid;
  bool operator==(const ServiceRequest&) const = default;
};

struct ChallengeMsg {
  std::uint64_t s = 0;
  Nonce r_cloudserv{};
  bool operator==(const ChallengeMsg&) const = default;
};

struct SolutionMsg {
  Bytes uet;  // sealed token blob
  SolutionVector b;
  std::uint64_t s = 0;
  Nonce r_cloudserv{};
  Bytes cid;
  Bytes enc_t;  // timestamp sealed under the pre-shared key
  bool operator==(const SolutionMsg&) const = default;
};

struct SessionGrant {
  Bytes enc_sk;  // session key sealed under the pre-shared key
  Bytes uet;     // mutated token carrying SK and T
  bool operator==(const SessionGrant&) const = default;
};

struct SessionConfirm {
  Bytes uet;       // the mutated token, echoed back
  Bytes enc_t_sk;  // timestamp sealed under the session key
  bool operator==(const SessionConfirm&) const = default;
};

struct Rejected {
  RejectReason reason = RejectReason::kBadUet;
  bool operator==(const Rejected&) const = default;
};

using ProtocolMessage = std::variant<ServiceRequest, ChallengeMsg, SolutionMsg,
                                     SessionGrant, SessionConfirm, Rejected>;

// Canonical wire form: 1-byte message-type tag, then the message fields in
// the same tag/length/value encoding used for UET records. Documented in
// docs/protocol.md.
Bytes encode_message(const ProtocolMessage& msg);
ProtocolMessage decode_message(ByteSpan data);  // throws FormatError

std::string_view message_type_name(const ProtocolMessage& msg);

}  // namespace csa
