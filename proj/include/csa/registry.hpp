#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "csa/bytes.hpp"

namespace csa {

struct ClientProfile {
  std::string name;
  std::string organization;
  std::string email;

  bool operator==(const ClientProfile&) const = default;
};

struct RegistryRecord {
  Bytes cid;
  ClientProfile profile;
  Bytes shared_secret;
  bool activated = false;
  std::uint64_t registered_at_ms = 0;

  bool operator==(const RegistryRecord&) const = default;
};

Bytes encode_registry_record(const RegistryRecord& rec);
RegistryRecord decode_registry_record(ByteSpan data);  // throws FormatError

// One record per cid and per email; lookups by either key.
class Registry {
 public:
  // Throws ConflictError when the email or cid is already present.
  void add(RegistryRecord rec);

  const RegistryRecord* find_by_cid(ByteSpan cid) const;
  const RegistryRecord* find_by_email(const std::string& email) const;
  std::size_t size() const { return records_.size(); }
  const std::vector<RegistryRecord>& records() const { return records_; }

  // Append-only persistence: each record framed by a be32 length.
  static Registry load_file(const std::string& path);  // missing file -> empty
  static void append_to_file(const std::string& path, const RegistryRecord& rec);

 private:
  std::vector<RegistryRecord> records_;
  std::map<Bytes, std::size_t> by_cid_;
  std::map<std::string, std::size_t> by_email_;
};

}  // namespace csa
