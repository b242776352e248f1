#include "blaschke_lab_cli/config.hpp"

#include "blaschke_lab/errors.hpp"
#include "io.hpp"

namespace blaschke_lab::cli {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::ConfigInvalid, msg); }

Kind parse_kind(const std::string& s) {
  if (s == "criteria") return Kind::criteria;
  if (s == "interpolate") return Kind::interpolate;
  if (s == "union") return Kind::union_;
  if (s == "nearby") return Kind::nearby;
  if (s == "perturb") return Kind::perturb;
  if (s == "shift") return Kind::shift;
  invalid("unknown kind '" + s + "'");
}

Complex parse_complex(const nlohmann::json& j, std::string_view where) {
  if (j.is_number()) {
    nlohmann::json wrapped = {{"re", j}};
    return {get_number(wrapped, "re", where), 0.0};
  }
  require_object(j, where);
  reject_unknown_keys(j, {"re", "im"}, where);
  double im = j.contains("im") ? get_number(j, "im", where) : 0.0;
  return {get_number(j, "re", where), im};
}

std::vector<Complex> parse_complex_list(const nlohmann::json& j, std::string_view where) {
  if (!j.is_array()) invalid(std::string(where) + ": expected an array");
  std::vector<Complex> out;
  for (const auto& v : j) out.push_back(parse_complex(v, where));
  return out;
}

nlohmann::json complex_list_json(const std::vector<Complex>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (auto c : v) out.push_back({{"re", c.real()}, {"im", c.imag()}});
  return out;
}

SequenceInput parse_sequence_input(const nlohmann::json& j, const std::filesystem::path& base,
                                 std::string_view where) {
  require_object(j, where);
  reject_unknown_keys(j, {"file", "generator", "params", "points"}, where);
  int sources = int(j.contains("file")) + int(j.contains("generator")) + int(j.contains("points"));
  if (sources != 1) {
    invalid(std::string(where) + ": give exactly one of 'file', 'generator', 'points'");
  }
  SequenceInput s;
  if (j.contains("params") && !j.contains("generator")) {
    invalid(std::string(where) + ": 'params' only goes with 'generator'");
  }
  if (j.contains("file")) {
    s.source = SequenceInput::Source::file;
    std::filesystem::path p = get_string(j, "file", where);
    s.file = p.is_absolute() || base.empty() ? p : base / p;
  } else if (j.contains("points")) {
    s.source = SequenceInput::Source::points;
    s.points = parse_complex_list(j.at("points"), where);
  } else {
    s.source = SequenceInput::Source::generator;
    s.generator = get_string(j, "generator", where);
    std::string pw = std::string(where) + ".params";
    if (j.contains("params")) {
      s.params = j.at("params");
      require_object(s.params, pw);
    }
    if (s.generator == "frostman_example") {
      reject_unknown_keys(s.params, {"N"}, pw);
      if (s.params.contains("N")) get_uint(s.params, "N", pw);
    } else if (s.generator == "radial_sequence") {
      reject_unknown_keys(s.params, {"N", "q", "arg"}, pw);
      if (s.params.contains("N")) get_uint(s.params, "N", pw);
      get_number(s.params, "q", pw);
      if (!s.params.contains("arg")) s.params["arg"] = 0.0;
      get_number(s.params, "arg", pw);
    } else {
      invalid(std::string(where) + ": unknown generator '" + s.generator + "'");
    }
  }
  return s;
}

nlohmann::json sequence_input_json(const SequenceInput& s) {
  switch (s.source) {
    case SequenceInput::Source::file:
      return {{"file", s.file.string()}};
    case SequenceInput::Source::points:
      return {{"points", complex_list_json(s.points)}};
    case SequenceInput::Source::generator:
      break;
  }
  return {{"generator", s.generator}, {"params", s.params}};
}

TargetRule parse_target_rule(const nlohmann::json& j, std::string_view where) {
  TargetRule t;
  if (j.is_string()) {
    t.mode = j.get<std::string>();
    if (t.mode != "ones" && t.mode != "alternating" && t.mode != "random") {
      invalid(std::string(where) + ": unknown target mode '" + t.mode + "'");
    }
  } else {
    t.mode = "explicit";
    t.values = parse_complex_list(j, where);
  }
  return t;
}

nlohmann::json target_rule_json(const TargetRule& t) {
  if (t.mode == "explicit") return complex_list_json(t.values);
  return t.mode;
}

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::criteria: return "criteria";
    case Kind::interpolate: return "interpolate";
    case Kind::union_: return "union";
    case Kind::nearby: return "nearby";
    case Kind::perturb: return "perturb";
    case Kind::shift: return "shift";
  }
  return "?";
}

ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  require_object(j, "config");
  reject_unknown_keys(j, {"kind", "inputs", "targets", "grid", "seed", "N_schedule", "tolerances", "params"},
                      "config");
  ExperimentConfig c;
  c.kind = parse_kind(get_string(j, "kind", "config"));

  if (j.contains("inputs")) {
    const auto& in = j.at("inputs");
    require_object(in, "inputs");
    reject_unknown_keys(in, {"a", "z"}, "inputs");
    if (in.contains("a")) c.a = parse_sequence_input(in.at("a"), base_dir, "inputs.a");
    if (in.contains("z")) c.z = parse_sequence_input(in.at("z"), base_dir, "inputs.z");
  }
  if (j.contains("targets")) {
    const auto& t = j.at("targets");
    require_object(t, "targets");
    reject_unknown_keys(t, {"alpha", "beta"}, "targets");
    if (t.contains("alpha")) c.alpha = parse_target_rule(t.at("alpha"), "targets.alpha");
    if (t.contains("beta")) c.beta = parse_target_rule(t.at("beta"), "targets.beta");
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    require_object(g, "grid");
    reject_unknown_keys(g, {"base_count", "refinement_rounds"}, "grid");
    if (g.contains("base_count")) c.grid.base_count = get_uint(g, "base_count", "grid");
    if (g.contains("refinement_rounds")) {
      c.grid.refinement_rounds = get_uint(g, "refinement_rounds", "grid");
    }
  }
  if (j.contains("seed")) c.seed = RngSeed{get_uint(j, "seed", "config")};
  if (j.contains("N_schedule")) {
    const auto& s = j.at("N_schedule");
    if (!s.is_array()) invalid("N_schedule: expected an array");
    for (const auto& n : s) {
      if (!n.is_number_integer() || n.get<std::int64_t>() <= 0) {
        invalid("N_schedule: entries must be positive integers");
      }
      c.n_schedule.push_back(n.get<std::size_t>());
    }
  }
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    require_object(t, "tolerances");
    reject_unknown_keys(t, {"tol", "max_iter"}, "tolerances");
    if (t.contains("tol")) c.tol = get_number(t, "tol", "tolerances");
    if (t.contains("max_iter")) c.max_iter = get_uint(t, "max_iter", "tolerances");
  }
  if (j.contains("params")) {
    const auto& p = j.at("params");
    require_object(p, "params");
    reject_unknown_keys(p, {"r", "trials", "min_sep", "radius_factor", "shift_points"}, "params");
    if (p.contains("r")) {
      const auto& r = p.at("r");
      if (!r.is_array()) invalid("params.r: expected an array");
      c.radii.clear();
      for (const auto& v : r) {
        if (!v.is_number()) invalid("params.r: entries must be numbers");
        c.radii.push_back(v.get<double>());
      }
    }
    if (p.contains("trials")) c.trials = get_uint(p, "trials", "params");
    if (p.contains("min_sep")) c.min_sep = get_number(p, "min_sep", "params");
    if (p.contains("radius_factor")) c.radius_factor = get_number(p, "radius_factor", "params");
    if (p.contains("shift_points")) {
      c.shift_points = parse_complex_list(p.at("shift_points"), "params.shift_points");
    }
  }
  validate(c);
  return c;
}

void validate(const ExperimentConfig& c) {
  if (!c.a) invalid("inputs.a is required");
  if (c.kind == Kind::union_ && !c.z) invalid("kind 'union' needs inputs.z");
  if (c.z && c.kind != Kind::union_ && c.kind != Kind::nearby) {
    invalid("inputs.z is only used by 'union' and 'nearby'");
  }
  if (c.kind == Kind::criteria && c.n_schedule.empty()) invalid("N_schedule must not be empty");
  if (c.grid.base_count < CircleGrid::kMinBaseCount) {
    invalid("grid.base_count must be at least " + std::to_string(CircleGrid::kMinBaseCount));
  }
  if (!(c.tol > 0.0)) invalid("tolerances.tol must be positive");
  if (c.max_iter == 0) invalid("tolerances.max_iter must be positive");
  for (double r : c.radii) {
    if (!(r >= 0.0 && r < 1.0)) invalid("params.r entries must lie in [0, 1)");
  }
  if (c.radii.empty()) invalid("params.r must not be empty");
  if (!(c.min_sep >= 0.0 && c.min_sep < 1.0)) invalid("params.min_sep must lie in [0, 1)");
  if (!(c.radius_factor > 0.0)) invalid("params.radius_factor must be positive");
  if (c.shift_points.empty()) invalid("params.shift_points must not be empty");
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  return parse_config(parse_json_text(read_text_file(path), path.string()), path.parent_path());
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json inputs = nlohmann::json::object();
  if (c.a) inputs["a"] = sequence_input_json(*c.a);
  if (c.z) inputs["z"] = sequence_input_json(*c.z);
  return {
      {"kind", to_string(c.kind)},
      {"inputs", inputs},
      {"targets", {{"alpha", target_rule_json(c.alpha)}, {"beta", target_rule_json(c.beta)}}},
      {"grid", {{"base_count", c.grid.base_count}, {"refinement_rounds", c.grid.refinement_rounds}}},
      {"seed", c.seed.value},
      {"N_schedule", c.n_schedule},
      {"tolerances", {{"tol", c.tol}, {"max_iter", c.max_iter}}},
      {"params",
       {{"r", c.radii},
        {"trials", c.trials},
        {"min_sep", c.min_sep},
        {"radius_factor", c.radius_factor},
        {"shift_points", complex_list_json(c.shift_points)}}},
  };
}

}  // namespace blaschke_lab::cli
