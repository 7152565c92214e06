#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace vrmenu::io {

using Json = nlohmann::json;

// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

// Parses JSON text; throws Error{kSyntax} with line and column on failure.
Json parse_json(std::string_view text);

// Schema-checking view over a JSON object; every failure throws
// Error{kSchema} prefixed with the field path.
class ObjectReader {
 public:
  ObjectReader(const Json& j, std::string path);

  std::string string(const char* key) const;
  std::optional<std::string> optional_string(const char* key) const;
  bool boolean(const char* key) const;
  std::optional<bool> optional_boolean(const char* key) const;
  double number(const char* key) const;
  std::optional<double> optional_number(const char* key) const;
  std::int64_t integer(const char* key) const;
  std::uint64_t unsigned_integer(const char* key) const;
  const Json& array(const char* key) const;
  const Json* optional_array(const char* key) const;
  bool has(const char* key) const;

  std::string field(std::string_view key) const;
  std::string element(std::string_view key, std::size_t index) const;
  // Rejects any key not listed.
  void allow_only(std::initializer_list<const char*> keys) const;

  [[noreturn]] void fail(std::string_view key, const std::string& message) const;

 private:
  const Json& get(const char* key) const;

  const Json& j_;
  std::string path_;
};

}  // namespace vrmenu::io
