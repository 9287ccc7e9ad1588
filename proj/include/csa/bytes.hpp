#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csa {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view s);
std::string to_string(ByteSpan b);

std::string hex_encode(ByteSpan b);
Bytes hex_decode(std::string_view hex);  // throws FormatError on bad input

void put_u32be(Bytes& out, std::uint32_t v);
void put_u64be(Bytes& out, std::uint64_t v);

// Canonical field encoding shared by tokens, registry records and wire
// messages: one tag byte, a 4-byte big-endian length, then the value.
void put_field(Bytes& out, std::uint8_t tag, ByteSpan value);
void put_field_u64(Bytes& out, std::uint8_t tag, std::uint64_t v);

// Bounds-checked sequential reader over a byte span. All read methods
// throw FormatError when the input is truncated or malformed.
class ByteReader {
 public:
  explicit ByteReader(ByteSpan data) : data_(data) {}

  bool done() const { return pos_ == data_.size(); }
  std::size_t remaining() const { return data_.size() - pos_; }

  std::uint8_t read_u8();
  std::uint32_t read_u32be();
  std::uint64_t read_u64be();
  Bytes read_bytes(std::size_t len);

  // Reads "tag ‖ be32 len ‖ value", requiring the expected tag.
  Bytes read_field(std::uint8_t expected_tag);
  std::uint64_t read_field_u64(std::uint8_t expected_tag);
  // Peeks the next tag byte without consuming it.
  std::uint8_t peek_u8() const;

 private:
  ByteSpan data_;
  std::size_t pos_ = 0;
};

}  // namespace csa
