#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tfkit/errors.hpp"
#include "tfkit/stft.hpp"

namespace tfkit::harness {

/// Bad configuration: malformed JSON, unknown keys, invalid values.
struct ConfigError : Error {
  using Error::Error;
};

/// A signal literal as written in the config, resolved against a group later.
struct SignalSpec {
  std::string kind;  // dirac, gauss, random, values
  std::vector<int> at;
  double spread = 1.0;
  std::uint64_t seed = 0;
  std::vector<double> re;
  std::vector<double> im;
};

struct ExperimentConfig {
  std::string suite = "all";  // norms, kernel, frames, regnet, mpq, all
  std::vector<std::vector<int>> groups;  // empty: per-suite defaults
  std::vector<SignalSpec> windows;       // empty: per-suite defaults
  std::vector<SignalSpec> signals;       // norms suite probes
  std::uint64_t seed = 7;
  double tol = 1e-10;
  std::filesystem::path out = "tfkit-report";

  std::vector<std::string> kernel_ops{"apply", "compose", "trace", "bnorm", "expand"};
  std::vector<int> frame_a{2, 4};
  std::vector<int> frame_b{2, 4};
  std::vector<std::string> constructions{"pc", "loc", "gabor"};
  std::size_t stages = 4;
  std::string target = "identity";  // identity, fourier, random
  std::vector<Exponent> p_list{Exponent(1.0), Exponent(2.0), Exponent::infinity()};
  std::vector<Exponent> q_list{Exponent(1.0), Exponent(2.0), Exponent::infinity()};
};

const std::vector<std::string>& suite_names();

/// Parses a config document. Throws ConfigError; JSON syntax errors carry
/// "line L, column C" of the offending byte.
ExperimentConfig parse_config(const std::string& text, const std::string& source_name = "config");
ExperimentConfig load_config(const std::filesystem::path& path);

/// "[4,6]", "4,6" or "8".
std::vector<int> parse_group_literal(const std::string& text);
/// "1", "2.5", "inf".
Exponent parse_exponent(const std::string& text);
SignalSpec parse_signal_literal(const std::string& json_text);
/// Throws ConfigError when the literal does not fit the group.
Signal make_signal(const SignalSpec& lit, const GroupSpec& g);

/// One asserted (or logged) quantity.
struct Check {
  std::string suite;
  std::string name;
  double value = 0.0;
  double limit = 0.0;  // value <= limit passes
  bool pass = true;
};

struct RunResult {
  std::vector<Check> checks;
  std::vector<std::string> files;
  bool passed() const;
};

/// Runs the suite, writes CSV reports and summary.json into cfg.out, and
/// prints one summary line per suite plus every failing check to `log`.
RunResult run_suite(const ExperimentConfig& cfg, std::ostream& log);

/// 0 when every check passes, 1 otherwise.
int exit_code(const RunResult& r);

}  // namespace tfkit::harness
