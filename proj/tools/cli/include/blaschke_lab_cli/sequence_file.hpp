#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "blaschke_lab/blaschke.hpp"

namespace blaschke_lab::cli {

struct SequenceMeta {
  std::string name;
  std::optional<std::string> generator;
  nlohmann::json params = nlohmann::json::object();
};

/// On disk: {"points": [{"re": .., "im": ..}, ...], "meta": {"name": .., "generator": .., "params": {..}}}.
/// Coordinates are written with 17 significant digits, so reading back is bit-exact.
struct SequenceFile {
  std::vector<DiskPoint> points;
  SequenceMeta meta;

  ZeroSequence sequence() const { return ZeroSequence(points); }
};

nlohmann::json to_json(const SequenceFile& f);

/// Throws ConfigInvalid on schema violations and InvalidPoint for points
/// outside the disk.
SequenceFile sequence_file_from_json(const nlohmann::json& j);

std::string dump_sequence_file(const SequenceFile& f);

/// IoFailure when the file cannot be opened; ConfigInvalid when it does not parse.
SequenceFile read_sequence_file(const std::filesystem::path& path);
void write_sequence_file(const std::filesystem::path& path, const SequenceFile& f);

}  // namespace blaschke_lab::cli
