#pragma once

// Helpers shared by the CLI translation units: strict JSON field access and
// whole-file text I/O. Every failure is reported as a blaschke_lab::Error.

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace blaschke_lab::cli {

void require_object(const nlohmann::json& j, std::string_view where);
void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<std::string_view> allowed,
                         std::string_view where);

double get_number(const nlohmann::json& j, std::string_view key, std::string_view where);
std::uint64_t get_uint(const nlohmann::json& j, std::string_view key, std::string_view where);
std::string get_string(const nlohmann::json& j, std::string_view key, std::string_view where);

nlohmann::json parse_json_text(const std::string& text, std::string_view source);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// %.17g: enough digits for an exact round trip of any finite double.
std::string format_double(double x);

}  // namespace blaschke_lab::cli
