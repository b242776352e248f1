#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "blaschke_lab_cli/report.hpp"

namespace blaschke_lab::cli {

enum class Format { json, csv, plotdata };

/// ConfigInvalid for anything but json, csv, plotdata.
Format parse_format(std::string_view s);

std::string to_json_text(const ReportBundle& b);

/// RFC 4180 quoting, LF line endings, doubles as %.17g.
std::string to_csv(const Table& t);

/// "# label", then one "x y" line per point.
std::string to_plotdata(const Series& s);

/// With out_dir: writes report.json, <table>.csv or <series>.dat into it
/// (creating the directory). Without: json goes to stdout; csv and plotdata
/// need a directory and raise ConfigInvalid. Write failures raise IoFailure.
void emit(const ReportBundle& b, Format f, const std::optional<std::filesystem::path>& out_dir,
          std::ostream& stdout_stream);

}  // namespace blaschke_lab::cli
