#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "csa/bytes.hpp"

namespace csa {

inline constexpr std::size_t kSha512Len = 64;
inline constexpr std::size_t kAeadKeyLen = 32;
inline constexpr std::size_t kAeadNonceLen = 12;
inline constexpr std::size_t kAeadTagLen = 16;

std::array<std::uint8_t, kSha512Len> sha512(ByteSpan data);
std::array<std::uint8_t, kSha512Len> hmac_sha512(ByteSpan key, ByteSpan data);

// HMAC-based extract-and-expand over SHA2-512.
Bytes hkdf_sha512(ByteSpan ikm, ByteSpan salt, ByteSpan info, std::size_t out_len);

// AES-256-GCM. Returns ciphertext ‖ 16-byte tag.
Bytes aead_seal(ByteSpan key32, ByteSpan nonce12, ByteSpan aad, ByteSpan plaintext);

// Inverse of aead_seal; nullopt when authentication fails.
std::optional<Bytes> aead_open(ByteSpan key32, ByteSpan nonce12, ByteSpan aad,
                               ByteSpan ciphertext_and_tag);

}  // namespace csa
