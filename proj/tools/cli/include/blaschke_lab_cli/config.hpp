#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "blaschke_lab/circle_grid.hpp"
#include "blaschke_lab/sequences.hpp"

namespace blaschke_lab::cli {

enum class Kind { criteria, interpolate, union_, nearby, perturb, shift };

std::string to_string(Kind k);

/// Where a sequence comes from: exactly one of a file, an inline generator
/// call, or inline points.
struct SequenceInput {
  enum class Source { file, generator, points };
  Source source = Source::generator;
  std::filesystem::path file;        // resolved against the config's directory
  std::string generator;             // frostman_example | radial_sequence
  nlohmann::json params = nlohmann::json::object();
  std::vector<Complex> points;
};

/// ones | alternating | random | explicit list of values.
struct TargetRule {
  std::string mode = "ones";
  std::vector<Complex> values;
};

struct ExperimentConfig {
  Kind kind = Kind::criteria;
  std::optional<SequenceInput> a;
  std::optional<SequenceInput> z;
  TargetRule alpha;
  TargetRule beta;
  CircleGrid grid;
  RngSeed seed;
  std::vector<std::size_t> n_schedule;
  double tol = 1e-8;
  std::size_t max_iter = 30;
  // Kind-specific parameters.
  std::vector<double> radii{0.3, 0.5, 0.7};
  std::size_t trials = 100;
  double min_sep = kDefaultMinSeparation;
  double radius_factor = 0.8;
  std::vector<Complex> shift_points{Complex(0.3, 0.0)};
};

/// Throws ConfigInvalid on unknown keys, wrong types or missing required
/// inputs. Relative file paths are taken relative to base_dir.
ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// The full configuration with every default filled in.
nlohmann::json to_json(const ExperimentConfig& c);

/// Checks that the inputs a kind needs are present.
void validate(const ExperimentConfig& c);

}  // namespace blaschke_lab::cli
