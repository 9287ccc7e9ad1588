#include "csa/token.hpp"

#include <fstream>

#include "csa/errors.hpp"
#include "csa/hash.hpp"

namespace csa {

namespace {

constexpr std::string_view kPskSalt = "CSA-PSK-v1";
constexpr std::string_view kUetAad = "CSA-UET-v1";
constexpr std::string_view kTimestampAad = "CSA-TS-v1";
constexpr std::string_view kSessionKeyAad = "CSA-SK-v1";

// Record field tags, fixed ascending order.
constexpr std::uint8_t kTagCid = 0x01;
constexpr std::uint8_t kTagIssuedAt = 0x02;
constexpr std::uint8_t kTagSessionKey = 0x03;
constexpr std::uint8_t kTagT = 0x04;

Bytes seal_under(const Key32& key, std::string_view aad, ByteSpan plaintext,
                 Rng& rng) {
  auto nonce = rng.array<kAeadNonceLen>();
  Bytes out(nonce.begin(), nonce.end());
  Bytes ct = aead_seal(key, nonce, to_bytes(aad), plaintext);
  out.insert(out.end(), ct.begin(), ct.end());
  return out;
}

std::optional<Bytes> open_under(const Key32& key, std::string_view aad,
                                ByteSpan sealed) {
  if (sealed.size() < kAeadNonceLen + kAeadTagLen) return std::nullopt;
  return aead_open(key, sealed.subspan(0, kAeadNonceLen), to_bytes(aad),
                   sealed.subspan(kAeadNonceLen));
}

}  // namespace

PreSharedKey derive_pre_shared_key(ByteSpan shared_secret, ByteSpan cid) {
  if (shared_secret.size() < 16) {
    throw ParameterError("shared secret must be at least 16 bytes");
  }
  Bytes okm = hkdf_sha512(shared_secret, to_bytes(kPskSalt), cid, kKeyLen);
  PreSharedKey psk;
  std::copy(okm.begin(), okm.end(), psk.key.begin());
  return psk;
}

Bytes encode_uet_record(const UetRecord& rec) {
  if (rec.cid.empty()) throw ParameterError("UET record needs a non-empty cid");
  Bytes out;
  put_field(out, kTagCid, rec.cid);
  put_field_u64(out, kTagIssuedAt, rec.issued_at_ms);
  if (rec.session_key) put_field(out, kTagSessionKey, *rec.session_key);
  if (rec.t_ms) put_field_u64(out, kTagT, *rec.t_ms);
  return out;
}

UetRecord decode_uet_record(ByteSpan data) {
  ByteReader r(data);
  UetRecord rec;
  rec.cid = r.read_field(kTagCid);
  if (rec.cid.empty()) throw FormatError("UET record cid is empty");
  rec.issued_at_ms = r.read_field_u64(kTagIssuedAt);
  if (!r.done() && r.peek_u8() == kTagSessionKey) {
    Bytes sk = r.read_field(kTagSessionKey);
    if (sk.size() != kKeyLen) throw FormatError("session key field has wrong length");
    Key32 k{};
    std::copy(sk.begin(), sk.end(), k.begin());
    rec.session_key = k;
  }
  if (!r.done() && r.peek_u8() == kTagT) {
    rec.t_ms = r.read_field_u64(kTagT);
  }
  if (!r.done()) throw FormatError("trailing bytes in UET record");
  return rec;
}

UetToken seal_uet(const MasterKey& mk, const UetRecord& rec, Rng& rng) {
  Bytes plain = encode_uet_record(rec);
  auto nonce = rng.array<kAeadNonceLen>();

  Bytes aad = to_bytes(kUetAad);
  aad.push_back(kUetVersion);

  UetToken tok;
  tok.blob.push_back(kUetVersion);
  tok.blob.insert(tok.blob.end(), nonce.begin(), nonce.end());
  Bytes ct = aead_seal(mk.key, nonce, aad, plain);
  tok.blob.insert(tok.blob.end(), ct.begin(), ct.end());
  return tok;
}

std::optional<UetRecord> open_uet(const MasterKey& mk, const UetToken& tok) {
  if (tok.blob.size() < 1 + kAeadNonceLen + kAeadTagLen) {
    throw FormatError("UET token blob is too short");
  }
  if (tok.blob[0] != kUetVersion) throw FormatError("unknown UET version byte");

  Bytes aad = to_bytes(kUetAad);
  aad.push_back(tok.blob[0]);

  ByteSpan blob(tok.blob);
  auto plain = aead_open(mk.key, blob.subspan(1, kAeadNonceLen), aad,
                         blob.subspan(1 + kAeadNonceLen));
  if (!plain) return std::nullopt;
  try {
    return decode_uet_record(*plain);
  } catch (const FormatError&) {
    // An authenticated payload that fails to parse means a version skew,
    // not tampering; surface it the same way either way.
    return std::nullopt;
  }
}

Bytes seal_timestamp(const Key32& key, std::uint64_t t_ms, Rng& rng) {
  Bytes plain;
  put_u64be(plain, t_ms);
  return seal_under(key, kTimestampAad, plain, rng);
}

std::optional<std::uint64_t> open_timestamp(const Key32& key, ByteSpan sealed) {
  auto plain = open_under(key, kTimestampAad, sealed);
  if (!plain || plain->size() != 8) return std::nullopt;
  std::uint64_t v = 0;
  for (std::uint8_t b : *plain) v = (v << 8) | b;
  return v;
}

Bytes seal_session_key(const PreSharedKey& psk, const Key32& sk, Rng& rng) {
  return seal_under(psk.key, kSessionKeyAad, sk, rng);
}

std::optional<Key32> open_session_key(const PreSharedKey& psk, ByteSpan sealed) {
  auto plain = open_under(psk.key, kSessionKeyAad, sealed);
  if (!plain || plain->size() != kKeyLen) return std::nullopt;
  Key32 k{};
  std::copy(plain->begin(), plain->end(), k.begin());
  return k;
}

MasterKey generate_master_key(Rng& rng) {
  MasterKey mk;
  mk.key = rng.array<kKeyLen>();
  return mk;
}

SessionKey generate_session_key(Rng& rng, std::uint64_t now_ms) {
  SessionKey sk;
  sk.key = rng.array<kKeyLen>();
  sk.issued_at_ms = now_ms;
  return sk;
}

Nonce generate_nonce(Rng& rng) { return rng.array<kNonceLen>(); }

MasterKey load_master_key_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open master key file: " + path);
  std::string line;
  std::getline(in, line);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.pop_back();
  }
  Bytes raw = hex_decode(line);
  if (raw.size() != kKeyLen) {
    throw FormatError("master key file must hold 32 hex-encoded bytes");
  }
  MasterKey mk;
  std::copy(raw.begin(), raw.end(), mk.key.begin());
  return mk;
}

void save_master_key_file(const std::string& path, const MasterKey& mk) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ParameterError("cannot write master key file: " + path);
  out << hex_encode(mk.key) << "\n";
}

}  // namespace csa
