#include "csa/hash.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <memory>

#include "csa/errors.hpp"

namespace csa {

namespace {

struct CtxFree {
  void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
  void operator()(EVP_CIPHER_CTX* c) const { EVP_CIPHER_CTX_free(c); }
};

[[noreturn]] void crypto_fail(const char* what) {
  throw Error(std::string("crypto backend failure: ") + what);
}

}  // namespace

std::array<std::uint8_t, kSha512Len> sha512(ByteSpan data) {
  std::array<std::uint8_t, kSha512Len> out{};
  std::unique_ptr<EVP_MD_CTX, CtxFree> ctx(EVP_MD_CTX_new());
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha512(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1) {
    crypto_fail("sha512");
  }
  unsigned len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 || len != kSha512Len) {
    crypto_fail("sha512 final");
  }
  return out;
}

std::array<std::uint8_t, kSha512Len> hmac_sha512(ByteSpan key, ByteSpan data) {
  std::array<std::uint8_t, kSha512Len> out{};
  unsigned len = 0;
  if (HMAC(EVP_sha512(), key.data(), static_cast<int>(key.size()), data.data(),
           data.size(), out.data(), &len) == nullptr ||
      len != kSha512Len) {
    crypto_fail("hmac-sha512");
  }
  return out;
}

Bytes hkdf_sha512(ByteSpan ikm, ByteSpan salt, ByteSpan info, std::size_t out_len) {
  if (out_len == 0 || out_len > 255 * kSha512Len) {
    throw ParameterError("hkdf output length out of range");
  }
  auto prk = hmac_sha512(salt, ikm);
  Bytes okm;
  okm.reserve(out_len);
  Bytes t;
  std::uint8_t block = 1;
  while (okm.size() < out_len) {
    Bytes msg = t;
    msg.insert(msg.end(), info.begin(), info.end());
    msg.push_back(block++);
    auto digest = hmac_sha512(prk, msg);
    t.assign(digest.begin(), digest.end());
    okm.insert(okm.end(), t.begin(), t.end());
  }
  okm.resize(out_len);
  return okm;
}

Bytes aead_seal(ByteSpan key32, ByteSpan nonce12, ByteSpan aad, ByteSpan plaintext) {
  if (key32.size() != kAeadKeyLen) throw ParameterError("AEAD key must be 32 bytes");
  if (nonce12.size() != kAeadNonceLen) throw ParameterError("AEAD nonce must be 12 bytes");

  std::unique_ptr<EVP_CIPHER_CTX, CtxFree> ctx(EVP_CIPHER_CTX_new());
  if (!ctx ||
      EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key32.data(),
                         nonce12.data()) != 1) {
    crypto_fail("gcm init");
  }
  int len = 0;
  if (!aad.empty() &&
      EVP_EncryptUpdate(ctx.get(), nullptr, &len, aad.data(),
                        static_cast<int>(aad.size())) != 1) {
    crypto_fail("gcm aad");
  }
  Bytes out(plaintext.size() + kAeadTagLen);
  if (EVP_EncryptUpdate(ctx.get(), out.data(), &len, plaintext.data(),
                        static_cast<int>(plaintext.size())) != 1) {
    crypto_fail("gcm encrypt");
  }
  int ct_len = len;
  if (EVP_EncryptFinal_ex(ctx.get(), out.data() + ct_len, &len) != 1) {
    crypto_fail("gcm final");
  }
  ct_len += len;
  if (static_cast<std::size_t>(ct_len) != plaintext.size()) crypto_fail("gcm length");
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kAeadTagLen,
                          out.data() + ct_len) != 1) {
    crypto_fail("gcm tag");
  }
  return out;
}

std::optional<Bytes> aead_open(ByteSpan key32, ByteSpan nonce12, ByteSpan aad,
                               ByteSpan ciphertext_and_tag) {
  if (key32.size() != kAeadKeyLen) throw ParameterError("AEAD key must be 32 bytes");
  if (nonce12.size() != kAeadNonceLen) throw ParameterError("AEAD nonce must be 12 bytes");
  if (ciphertext_and_tag.size() < kAeadTagLen) return std::nullopt;

  std::size_t ct_len = ciphertext_and_tag.size() - kAeadTagLen;
  std::unique_ptr<EVP_CIPHER_CTX, CtxFree> ctx(EVP_CIPHER_CTX_new());
  if (!ctx ||
      EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key32.data(),
                         nonce12.data()) != 1) {
    crypto_fail("gcm init");
  }
  int len = 0;
  if (!aad.empty() &&
      EVP_DecryptUpdate(ctx.get(), nullptr, &len, aad.data(),
                        static_cast<int>(aad.size())) != 1) {
    crypto_fail("gcm aad");
  }
  Bytes out(ct_len);
  if (ct_len > 0 &&
      EVP_DecryptUpdate(ctx.get(), out.data(), &len, ciphertext_and_tag.data(),
                        static_cast<int>(ct_len)) != 1) {
    return std::nullopt;
  }
  Bytes tag(ciphertext_and_tag.begin() + ct_len, ciphertext_and_tag.end());
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kAeadTagLen,
                          tag.data()) != 1) {
    crypto_fail("gcm set tag");
  }
  int out_len = 0;
  if (EVP_DecryptFinal_ex(ctx.get(), out.data() + len, &out_len) != 1) {
    return std::nullopt;  // authentication failed
  }
  return out;
}

}  // namespace csa
