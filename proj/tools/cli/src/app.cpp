#include "blaschke_lab_cli/app.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blaschke_lab/errors.hpp"
#include "blaschke_lab/sequences.hpp"
#include "blaschke_lab_cli/config.hpp"
#include "blaschke_lab_cli/emit.hpp"
#include "blaschke_lab_cli/run.hpp"
#include "blaschke_lab_cli/sequence_file.hpp"

namespace blaschke_lab::cli {

namespace {

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> grid_size;
  std::optional<std::string> out;
  std::string format = "json";
  std::optional<double> tol;
};

SequenceInput file_input(const std::string& path) {
  SequenceInput s;
  s.source = SequenceInput::Source::file;
  s.file = path;
  return s;
}

TargetRule target_mode(const std::string& mode) {
  if (mode != "ones" && mode != "alternating" && mode != "random") {
    throw Error(ErrorCode::ConfigInvalid, "unknown target mode '" + mode + "'");
  }
  return TargetRule{mode, {}};
}

Complex parse_point(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw Error(ErrorCode::ConfigInvalid, "bad point '" + text + "', expected re[,im]");
  if (in >> comma) {
    if (comma != ',' || !(in >> im) || !in.eof()) {
      throw Error(ErrorCode::ConfigInvalid, "bad point '" + text + "', expected re[,im]");
    }
  }
  return {re, im};
}

void apply_globals(const GlobalFlags& g, ExperimentConfig& c) {
  if (g.seed) c.seed = RngSeed{*g.seed};
  if (g.grid_size) c.grid.base_count = *g.grid_size;
  if (g.tol) c.tol = *g.tol;
}

void run_and_emit(ExperimentConfig c, const GlobalFlags& g, std::ostream& out) {
  apply_globals(g, c);
  validate(c);
  Format f = parse_format(g.format);
  std::optional<std::filesystem::path> dir;
  if (g.out) dir = *g.out;
  if (!dir && f != Format::json) {
    throw Error(ErrorCode::ConfigInvalid, "csv and plotdata output need --out <directory>");
  }
  emit(run(c), f, dir, out);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConfigInvalid: return kExitConfig;
    case ErrorCode::IoFailure: return kExitIo;
    default: return kExitNumeric;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Blaschke product experiments: criteria, interpolation, perturbation."};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--grid-size", g.grid_size, "circle grid base count (>= 256)");
  app.add_option("--out", g.out, "output directory (for gen: output file)");
  app.add_option("--format", g.format, "json | csv | plotdata")->check(CLI::IsMember({"json", "csv", "plotdata"}));
  app.add_option("--tol", g.tol, "iteration tolerance");

  // The work for the chosen subcommand; run after parsing so errors map to
  // exit codes in one place.
  std::function<void()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "write a sequence file");
  std::string generator;
  std::size_t gen_n = 0;
  double gen_q = 0.5;
  double gen_arg = 0.0;
  std::string gen_from;
  double gen_r = 0.3;
  double gen_min_sep = kDefaultMinSeparation;
  gen->add_option("generator", generator, "frostman_example | radial_sequence | perturb")
      ->required()
      ->check(CLI::IsMember({"frostman_example", "radial_sequence", "perturb"}));
  gen->add_option("--N", gen_n, "number of points");
  gen->add_option("--q", gen_q, "radial ratio in (0, 1)");
  gen->add_option("--arg", gen_arg, "radial direction");
  gen->add_option("--from", gen_from, "sequence file to perturb");
  gen->add_option("--r", gen_r, "perturbation radius");
  gen->add_option("--min-sep", gen_min_sep, "minimum rho separation of the perturbed points");
  gen->callback([&] {
    action = [&] {
      SequenceFile f;
      f.meta.name = generator;
      f.meta.generator = generator;
      if (generator == "perturb") {
        if (gen_from.empty()) throw Error(ErrorCode::ConfigInvalid, "gen perturb needs --from");
        std::uint64_t seed = g.seed.value_or(0);
        PairedSequences p = perturb_sample(read_sequence_file(gen_from).sequence(), gen_r, RngSeed{seed},
                                           gen_min_sep);
        f.points.assign(p.z().begin(), p.z().end());
        f.meta.params = {{"from", gen_from}, {"r", gen_r}, {"min_sep", gen_min_sep}, {"seed", seed}};
      } else {
        if (gen_n == 0) throw Error(ErrorCode::ConfigInvalid, "gen needs --N >= 1");
        ZeroSequence s = generator == "frostman_example" ? frostman_example(gen_n)
                                                         : radial_sequence(gen_q, gen_n, gen_arg);
        f.points.assign(s.begin(), s.end());
        f.meta.params = {{"N", gen_n}};
        if (generator == "radial_sequence") {
          f.meta.params["q"] = gen_q;
          f.meta.params["arg"] = gen_arg;
        }
      }
      if (g.out) {
        write_sequence_file(*g.out, f);
      } else {
        out << dump_sequence_file(f);
      }
    };
  });

  // check
  auto* check = app.add_subcommand("check", "run every criterion on a sequence file");
  std::string check_file;
  std::vector<std::size_t> check_n;
  std::string check_targets = "ones";
  check->add_option("file", check_file, "sequence file")->required();
  check->add_option("--N", check_n, "truncation schedule (default: all points)");
  check->add_option("--targets", check_targets, "targets for the Dyakonov sum");
  check->callback([&] {
    action = [&] {
      ExperimentConfig c;
      c.kind = Kind::criteria;
      c.a = file_input(check_file);
      c.alpha = target_mode(check_targets);
      c.n_schedule = check_n;
      if (c.n_schedule.empty()) c.n_schedule = {read_sequence_file(check_file).points.size()};
      run_and_emit(c, g, out);
    };
  });

  // interpolate
  auto* interp = app.add_subcommand("interpolate", "interpolate targets on a sequence in K_B");
  std::string interp_file;
  std::string interp_targets = "ones";
  interp->add_option("file", interp_file, "sequence file")->required();
  interp->add_option("--targets", interp_targets, "ones | alternating | random");
  interp->callback([&] {
    action = [&] {
      ExperimentConfig c;
      c.kind = Kind::interpolate;
      c.a = file_input(interp_file);
      c.alpha = target_mode(interp_targets);
      run_and_emit(c, g, out);
    };
  });

  // union
  auto* uni = app.add_subcommand("union", "interpolate on the union of two separated sequences");
  std::string union_a;
  std::string union_z;
  std::string union_alpha = "ones";
  std::string union_beta = "alternating";
  uni->add_option("a", union_a, "first sequence file")->required();
  uni->add_option("z", union_z, "second sequence file")->required();
  uni->add_option("--alpha", union_alpha, "targets on the first sequence");
  uni->add_option("--beta", union_beta, "targets on the second sequence");
  uni->callback([&] {
    action = [&] {
      ExperimentConfig c;
      c.kind = Kind::union_;
      c.a = file_input(union_a);
      c.z = file_input(union_z);
      c.alpha = target_mode(union_alpha);
      c.beta = target_mode(union_beta);
      run_and_emit(c, g, out);
    };
  });

  // nearby
  auto* nearby = app.add_subcommand("nearby", "interpolate on a perturbed sequence by iteration");
  std::string nearby_a;
  std::string nearby_z;
  std::string nearby_targets = "ones";
  double nearby_factor = 0.8;
  std::size_t nearby_max_iter = 30;
  nearby->add_option("file", nearby_a, "sequence file")->required();
  nearby->add_option("--z", nearby_z, "perturbed sequence file (default: sampled)");
  nearby->add_option("--targets", nearby_targets, "ones | alternating | random");
  nearby->add_option("--radius-factor", nearby_factor, "sample radius as a multiple of 1/(2M)");
  nearby->add_option("--max-iter", nearby_max_iter, "iteration cap");
  nearby->callback([&] {
    action = [&] {
      ExperimentConfig c;
      c.kind = Kind::nearby;
      c.a = file_input(nearby_a);
      if (!nearby_z.empty()) c.z = file_input(nearby_z);
      c.alpha = target_mode(nearby_targets);
      c.radius_factor = nearby_factor;
      c.max_iter = nearby_max_iter;
      run_and_emit(c, g, out);
    };
  });

  // perturb
  auto* perturb = app.add_subcommand("perturb", "Monte Carlo perturbation statistics");
  std::string perturb_file;
  std::vector<double> perturb_r{0.3, 0.5, 0.7};
  std::size_t perturb_trials = 100;
  double perturb_min_sep = kDefaultMinSeparation;
  perturb->add_option("file", perturb_file, "sequence file")->required();
  perturb->add_option("--r", perturb_r, "perturbation radii");
  perturb->add_option("--trials", perturb_trials, "trials per radius");
  perturb->add_option("--min-sep", perturb_min_sep, "minimum rho separation of perturbed points");
  perturb->callback([&] {
    action = [&] {
      ExperimentConfig c;
      c.kind = Kind::perturb;
      c.a = file_input(perturb_file);
      c.radii = perturb_r;
      c.trials = perturb_trials;
      c.min_sep = perturb_min_sep;
      run_and_emit(c, g, out);
    };
  });

  // shift
  auto* shift = app.add_subcommand("shift", "solve B(z) = w for each w");
  std::string shift_file;
  std::vector<std::string> shift_w{"0.3"};
  shift->add_option("file", shift_file, "sequence file")->required();
  shift->add_option("--w", shift_w, "shift values as re[,im]");
  shift->callback([&] {
    action = [&] {
      ExperimentConfig c;
      c.kind = Kind::shift;
      c.a = file_input(shift_file);
      c.shift_points.clear();
      for (const auto& w : shift_w) c.shift_points.push_back(parse_point(w));
      run_and_emit(c, g, out);
    };
  });

  // run
  auto* run_cmd = app.add_subcommand("run", "run an experiment config file");
  std::string config_file;
  run_cmd->add_option("config", config_file, "experiment config (json)")->required();
  run_cmd->callback([&] { action = [&] { run_and_emit(load_config(config_file), g, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "error: ConfigInvalid: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace blaschke_lab::cli
