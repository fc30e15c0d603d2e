// Command-line front end: run protection experiments, sweep states x modes,
// print decoupling phase lists and witness terms, and self-validate.
//
// Exit codes: 0 success, 1 validation/runtime failure, 2 usage error.

#include "urdd/checks.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

namespace fs = std::filesystem;

std::string default_out_dir() {
  const char* env = std::getenv("URDD_OUT_DIR");
  return env != nullptr ? std::string(env) : std::string(".");
}

const CLI::Validator EvenPulseCount(
    [](std::string& s) -> std::string {
      int n = 0;
      try {
        n = std::stoi(s);
      } catch (...) {
        return "not an integer";
      }
      if (n < 4 || n % 2 != 0) return "pulse count must be even and >= 4";
      return {};
    },
    "EVEN>=4");

struct RunOptions {
  std::string state = "triplet2";
  std::string mode = "standard";
  int m_max = 9;
  int shots = 8192;
  int trajectories = 200;
  std::string measurement = "exact";
  std::uint64_t seed = 0;
  double epsilon = 0.001;
  double epsilon_sigma = 0.0;
  double detuning_sigma = urdd::kDefaultDetuningSigma;
  double readout_error = 0.01;
  int n_pulses = 8;
  double phi2 = std::numbers::pi / 2.0;
  double tau_ns = 70.0;
  double pulse_duration_ns = 35.5;
};

void add_run_options(CLI::App* cmd, RunOptions& opt, bool with_state_mode) {
  if (with_state_mode) {
    cmd->add_option("--state", opt.state, "triplet2|ghz3|ghz4|cluster4")
        ->check(CLI::IsMember({"triplet2", "ghz3", "ghz4", "cluster4"}));
    cmd->add_option("--mode", opt.mode, "free|standard|pr|cpr")
        ->check(CLI::IsMember({"free", "standard", "pr", "cpr"}));
  }
  cmd->add_option("--m", opt.m_max, "number of sequence repetitions (time points 0..m)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--shots", opt.shots, "shots per witness term (sampled path)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--trajectories", opt.trajectories, "noise trajectories to average")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--measurement", opt.measurement, "exact|sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  cmd->add_option("--seed", opt.seed, "master seed");
  cmd->add_option("--epsilon", opt.epsilon, "systematic flip-angle error")
      ->check(CLI::Range(-0.49, 0.49));
  cmd->add_option("--epsilon-sigma", opt.epsilon_sigma, "per-trajectory flip-angle error sigma")
      ->check(CLI::Range(0.0, 0.49));
  cmd->add_option("--detuning-sigma", opt.detuning_sigma, "quasi-static detuning sigma (rad/us)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--readout-error", opt.readout_error, "symmetric readout flip probability")
      ->check(CLI::Range(0.0, 0.5));
  cmd->add_option("--n-pulses", opt.n_pulses, "pulses per sequence unit (even, >= 4)")
      ->check(EvenPulseCount);
  cmd->add_option("--phi2", opt.phi2, "second pulse phase (radians)");
  cmd->add_option("--tau", opt.tau_ns, "delay between pulses (ns)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--pulse-duration", opt.pulse_duration_ns, "pi pulse length (ns)")
      ->check(CLI::PositiveNumber);
}

urdd::ExperimentConfig make_config(const RunOptions& opt) {
  const urdd::StateKind state = urdd::parse_state_kind(opt.state);
  const urdd::RunMode mode = urdd::parse_run_mode(opt.mode);
  urdd::ExperimentConfig cfg = urdd::ExperimentConfig::defaults(state, mode, opt.seed);
  cfg.m_max = opt.m_max;
  cfg.shots = opt.shots;
  cfg.noise.trajectories = opt.trajectories;
  cfg.noise.detuning_sigma = opt.detuning_sigma;
  cfg.noise.readout_error = opt.readout_error;
  cfg.pulse_error = {opt.epsilon, opt.epsilon_sigma};
  cfg.measurement = opt.measurement == "exact" ? urdd::MeasurementPath::Exact
                                               : urdd::MeasurementPath::Sampled;
  cfg.unit = urdd::DDUnitSpec::ur(opt.n_pulses, opt.phi2, opt.tau_ns, opt.pulse_duration_ns);
  return cfg;
}

int write_run_csv(const urdd::ExperimentConfig& cfg, const fs::path& out) {
  const urdd::TimeSeries ts = urdd::run_experiment(cfg);
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out << " for writing\n";
    return 1;
  }
  urdd::write_csv(f, ts, cfg);
  std::cout << "wrote " << out.string() << " (" << ts.points.size() << " points)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy-qubit entanglement protection with robust dynamical decoupling"};
  app.require_subcommand(1);

  // phases
  int phases_n = 8;
  double phases_phi2 = std::numbers::pi / 2.0;
  CLI::App* phases_cmd = app.add_subcommand("phases", "print the decoupling phase list");
  phases_cmd->add_option("--n", phases_n, "number of pulses (even, >= 4)")->check(EvenPulseCount);
  phases_cmd->add_option("--phi2", phases_phi2, "second pulse phase (radians)");

  // run
  RunOptions run_opt;
  std::string run_out;
  CLI::App* run_cmd = app.add_subcommand("run", "run one experiment and write a CSV");
  add_run_options(run_cmd, run_opt, true);
  run_cmd->add_option("--out", run_out, "output CSV path");

  // sweep
  RunOptions sweep_opt;
  std::string sweep_dir = default_out_dir();
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run every state x mode combination");
  add_run_options(sweep_cmd, sweep_opt, false);
  sweep_cmd->add_option("--out-dir", sweep_dir, "output directory (default $URDD_OUT_DIR or .)");

  // validate
  CLI::App* validate_cmd = app.add_subcommand("validate", "run built-in consistency checks");

  // witness
  std::string witness_state = "triplet2";
  CLI::App* witness_cmd = app.add_subcommand("witness", "print a witness term list");
  witness_cmd->add_option("--state", witness_state, "triplet2|ghz3|ghz4|cluster4")
      ->check(CLI::IsMember({"triplet2", "ghz3", "ghz4", "cluster4"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (phases_cmd->parsed()) {
      std::cout << std::setprecision(17);
      for (double phi : urdd::urdd_phases(phases_n, phases_phi2)) std::cout << phi << '\n';
      return 0;
    }

    if (run_cmd->parsed()) {
      const urdd::ExperimentConfig cfg = make_config(run_opt);
      fs::path out = run_out.empty()
                         ? fs::path(default_out_dir()) / (run_opt.state + "_" + run_opt.mode + ".csv")
                         : fs::path(run_out);
      return write_run_csv(cfg, out);
    }

    if (sweep_cmd->parsed()) {
      for (const char* state : {"triplet2", "ghz3", "ghz4", "cluster4"}) {
        for (const char* mode : {"free", "standard", "pr", "cpr"}) {
          RunOptions opt = sweep_opt;
          opt.state = state;
          opt.mode = mode;
          const fs::path out =
              fs::path(sweep_dir) / (std::string(state) + "_" + mode + ".csv");
          if (int rc = write_run_csv(make_config(opt), out); rc != 0) return rc;
        }
      }
      return 0;
    }

    if (validate_cmd->parsed()) {
      const int failures = urdd::report_consistency_checks(std::cout);
      if (failures > 0) {
        std::cout << failures << " check(s) failed\n";
        return 1;
      }
      std::cout << "all checks passed\n";
      return 0;
    }

    if (witness_cmd->parsed()) {
      urdd::write_witness_terms(std::cout,
                                urdd::witness_operator(urdd::parse_state_kind(witness_state)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
