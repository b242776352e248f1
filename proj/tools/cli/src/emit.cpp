#include "blaschke_lab_cli/emit.hpp"

#include <system_error>

#include "blaschke_lab/errors.hpp"
#include "io.hpp"

namespace blaschke_lab::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return csv_field(*s);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::to_string(std::get<std::int64_t>(c));
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::IoFailure, "cannot create output directory " + dir.string());
  }
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "plotdata") return Format::plotdata;
  throw Error(ErrorCode::ConfigInvalid, "unknown format '" + std::string(s) + "'");
}

std::string to_json_text(const ReportBundle& b) { return b.structured.dump(2) + "\n"; }

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(t.columns[i]);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_plotdata(const Series& s) {
  std::string out = "# " + s.label + "\n";
  for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
    out += format_double(s.x[i]) + " " + format_double(s.y[i]) + "\n";
  }
  return out;
}

void emit(const ReportBundle& b, Format f, const std::optional<std::filesystem::path>& out_dir,
          std::ostream& stdout_stream) {
  if (!out_dir) {
    if (f != Format::json) {
      throw Error(ErrorCode::ConfigInvalid, "csv and plotdata output need --out <directory>");
    }
    stdout_stream << to_json_text(b);
    stdout_stream.flush();
    if (!stdout_stream) throw Error(ErrorCode::IoFailure, "write to stdout failed");
    return;
  }
  ensure_dir(*out_dir);
  switch (f) {
    case Format::json:
      write_text_file(*out_dir / "report.json", to_json_text(b));
      break;
    case Format::csv:
      for (const auto& t : b.tables) write_text_file(*out_dir / (t.name + ".csv"), to_csv(t));
      break;
    case Format::plotdata:
      for (const auto& s : b.series) write_text_file(*out_dir / (s.name + ".dat"), to_plotdata(s));
      break;
  }
}

}  // namespace blaschke_lab::cli
