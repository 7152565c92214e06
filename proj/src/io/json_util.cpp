#include "vrmenu/io/json_util.hpp"

#include <algorithm>

#include "vrmenu/error.hpp"

namespace vrmenu::io {

std::string dump(const Json& j) { return j.dump(2, ' ', false, Json::error_handler_t::strict) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the character that failed.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at line x, column y: " prefix.
    if (auto pos = what.find(": "); pos != std::string::npos && what.find("parse error") != std::string::npos) {
      what = what.substr(pos + 2);
    }
    throw Error(ErrorCode::kSyntax,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }
}

ObjectReader::ObjectReader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
  if (!j_.is_object()) {
    throw Error(ErrorCode::kSchema, (path_.empty() ? std::string("<root>") : path_) + ": expected an object");
  }
}

std::string ObjectReader::field(std::string_view key) const {
  return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
}

std::string ObjectReader::element(std::string_view key, std::size_t index) const {
  return field(key) + "[" + std::to_string(index) + "]";
}

void ObjectReader::fail(std::string_view key, const std::string& message) const {
  throw Error(ErrorCode::kSchema, field(key) + ": " + message);
}

bool ObjectReader::has(const char* key) const { return j_.contains(key) && !j_.at(key).is_null(); }

const Json& ObjectReader::get(const char* key) const {
  auto it = j_.find(key);
  if (it == j_.end()) {
    fail(key, "missing field");
  }
  return *it;
}

std::string ObjectReader::string(const char* key) const {
  const Json& v = get(key);
  if (!v.is_string()) {
    fail(key, "expected a string");
  }
  return v.get<std::string>();
}

std::optional<std::string> ObjectReader::optional_string(const char* key) const {
  if (!has(key)) {
    return std::nullopt;
  }
  return string(key);
}

bool ObjectReader::boolean(const char* key) const {
  const Json& v = get(key);
  if (!v.is_boolean()) {
    fail(key, "expected a boolean");
  }
  return v.get<bool>();
}

std::optional<bool> ObjectReader::optional_boolean(const char* key) const {
  if (!has(key)) {
    return std::nullopt;
  }
  return boolean(key);
}

double ObjectReader::number(const char* key) const {
  const Json& v = get(key);
  if (!v.is_number()) {
    fail(key, "expected a number");
  }
  return v.get<double>();
}

std::optional<double> ObjectReader::optional_number(const char* key) const {
  if (!has(key)) {
    return std::nullopt;
  }
  return number(key);
}

std::int64_t ObjectReader::integer(const char* key) const {
  const Json& v = get(key);
  if (!v.is_number_integer()) {
    fail(key, "expected an integer");
  }
  return v.get<std::int64_t>();
}

std::uint64_t ObjectReader::unsigned_integer(const char* key) const {
  const Json& v = get(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    fail(key, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

const Json& ObjectReader::array(const char* key) const {
  const Json& v = get(key);
  if (!v.is_array()) {
    fail(key, "expected an array");
  }
  return v;
}

const Json* ObjectReader::optional_array(const char* key) const {
  if (!has(key)) {
    return nullptr;
  }
  return &array(key);
}

void ObjectReader::allow_only(std::initializer_list<const char*> keys) const {
  for (const auto& item : j_.items()) {
    const std::string& key = item.key();
    const bool known = std::any_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; });
    if (!known) {
      fail(key, "unknown field");
    }
  }
}

}  // namespace vrmenu::io
