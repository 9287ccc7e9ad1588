#include "csa/bytes.hpp"

#include <cstring>

#include "csa/errors.hpp"

namespace csa {

Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

std::string to_string(ByteSpan b) {
  return std::string(b.begin(), b.end());
}

std::string hex_encode(ByteSpan b) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(b.size() * 2);
  for (std::uint8_t v : b) {
    out.push_back(digits[v >> 4]);
    out.push_back(digits[v & 0xf]);
  }
  return out;
}

namespace {
int hex_val(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

Bytes hex_decode(std::string_view hex) {
  if (hex.size() % 2 != 0) throw FormatError("hex string has odd length");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = hex_val(hex[2 * i]);
    int lo = hex_val(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw FormatError("invalid hex digit");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

void put_u32be(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_u64be(Bytes& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void put_field(Bytes& out, std::uint8_t tag, ByteSpan value) {
  out.push_back(tag);
  put_u32be(out, static_cast<std::uint32_t>(value.size()));
  out.insert(out.end(), value.begin(), value.end());
}

void put_field_u64(Bytes& out, std::uint8_t tag, std::uint64_t v) {
  Bytes tmp;
  put_u64be(tmp, v);
  put_field(out, tag, tmp);
}

std::uint8_t ByteReader::read_u8() {
  if (remaining() < 1) throw FormatError("truncated input");
  return data_[pos_++];
}

std::uint8_t ByteReader::peek_u8() const {
  if (pos_ >= data_.size()) throw FormatError("truncated input");
  return data_[pos_];
}

std::uint32_t ByteReader::read_u32be() {
  if (remaining() < 4) throw FormatError("truncated input");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_++];
  return v;
}

std::uint64_t ByteReader::read_u64be() {
  if (remaining() < 8) throw FormatError("truncated input");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_++];
  return v;
}

Bytes ByteReader::read_bytes(std::size_t len) {
  if (remaining() < len) throw FormatError("truncated input");
  Bytes out(data_.begin() + pos_, data_.begin() + pos_ + len);
  pos_ += len;
  return out;
}

Bytes ByteReader::read_field(std::uint8_t expected_tag) {
  std::uint8_t tag = read_u8();
  if (tag != expected_tag) throw FormatError("unexpected field tag");
  std::uint32_t len = read_u32be();
  return read_bytes(len);
}

std::uint64_t ByteReader::read_field_u64(std::uint8_t expected_tag) {
  Bytes v = read_field(expected_tag);
  if (v.size() != 8) throw FormatError("u64 field has wrong length");
  std::uint64_t out = 0;
  for (std::uint8_t b : v) out = (out << 8) | b;
  return out;
}

}  // namespace csa
