#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "csa/bytes.hpp"
#include "csa/puzzle.hpp"
#include "csa/rng.hpp"

namespace csa {

inline constexpr std::size_t kKeyLen = 32;
using Key32 = std::array<std::uint8_t, kKeyLen>;

// Server master key. Seals UETs, never leaves the server.
struct MasterKey {
  Key32 key{};
};

// Per-client key derived from the registration shared secret.
struct PreSharedKey {
  Key32 key{};
};

struct SessionKey {
  Key32 key{};
  std::uint64_t issued_at_ms = 0;

  bool operator==(const SessionKey&) const = default;
};

// Plain content of a UET. sk and t appear once the authentication
// protocol mutates the token.
struct UetRecord {
  Bytes cid;
  std::uint64_t issued_at_ms = 0;
  std::optional<Key32> session_key;
  std::optional<std::uint64_t> t_ms;

  bool operator==(const UetRecord&) const = default;
};

// Opaque sealed token: version byte ‖ 12-byte nonce ‖ ciphertext ‖ tag.
struct UetToken {
  Bytes blob;

  bool operator==(const UetToken&) const = default;
};

inline constexpr std::uint8_t kUetVersion = 1;

// HKDF-SHA512 with the CID as context info. shared_secret must be at
// least 16 bytes.
PreSharedKey derive_pre_shared_key(ByteSpan shared_secret, ByteSpan cid);

// Canonical tag/length/value serialization of a record; bit-exact across
// implementations.
Bytes encode_uet_record(const UetRecord& rec);
UetRecord decode_uet_record(ByteSpan data);  // throws FormatError

UetToken seal_uet(const MasterKey& mk, const UetRecord& rec, Rng& rng);

// nullopt on authentication failure (any tampered bit); FormatError on a
// truncated blob or unknown version byte.
std::optional<UetRecord> open_uet(const MasterKey& mk, const UetToken& tok);

// Sealed small values: 12-byte nonce ‖ ciphertext ‖ tag, AEAD-bound to a
// per-use domain so a sealed timestamp can never pass as a sealed session
// key under the same key.
Bytes seal_timestamp(const Key32& key, std::uint64_t t_ms, Rng& rng);
std::optional<std::uint64_t> open_timestamp(const Key32& key, ByteSpan sealed);

Bytes seal_session_key(const PreSharedKey& psk, const Key32& sk, Rng& rng);
std::optional<Key32> open_session_key(const PreSharedKey& psk, ByteSpan sealed);

MasterKey generate_master_key(Rng& rng);
SessionKey generate_session_key(Rng& rng, std::uint64_t now_ms);
Nonce generate_nonce(Rng& rng);

// Key file: 32 bytes hex-encoded on a single line.
MasterKey load_master_key_file(const std::string& path);
void save_master_key_file(const std::string& path, const MasterKey& mk);

}  // namespace csa
