#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "blaschke_lab/errors.hpp"

namespace blaschke_lab::cli {

namespace {

[[noreturn]] void invalid(std::string_view where, const std::string& msg) {
  throw Error(ErrorCode::ConfigInvalid, std::string(where) + ": " + msg);
}

const nlohmann::json& field(const nlohmann::json& j, std::string_view key, std::string_view where) {
  auto it = j.find(std::string(key));
  if (it == j.end()) invalid(where, "missing key '" + std::string(key) + "'");
  return *it;
}

}  // namespace

void require_object(const nlohmann::json& j, std::string_view where) {
  if (!j.is_object()) invalid(where, "expected an object");
}

void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<std::string_view> allowed,
                         std::string_view where) {
  for (const auto& [key, _] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      invalid(where, "unknown key '" + key + "'");
    }
  }
}

double get_number(const nlohmann::json& j, std::string_view key, std::string_view where) {
  const auto& v = field(j, key, where);
  if (!v.is_number()) invalid(where, "'" + std::string(key) + "' must be a number");
  double x = v.get<double>();
  if (!std::isfinite(x)) invalid(where, "'" + std::string(key) + "' must be finite");
  return x;
}

std::uint64_t get_uint(const nlohmann::json& j, std::string_view key, std::string_view where) {
  const auto& v = field(j, key, where);
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    invalid(where, "'" + std::string(key) + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::string get_string(const nlohmann::json& j, std::string_view key, std::string_view where) {
  const auto& v = field(j, key, where);
  if (!v.is_string()) invalid(where, "'" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

nlohmann::json parse_json_text(const std::string& text, std::string_view source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    invalid(source, e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorCode::IoFailure, "read failed: " + path.string());
  return text;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path.string());
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace blaschke_lab::cli
