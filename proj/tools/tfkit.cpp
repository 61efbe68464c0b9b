#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "tfkit/harness.hpp"

namespace h = tfkit::harness;

int main(int argc, char** argv) {
  CLI::App app{"tfkit: time-frequency kernel experiments on finite abelian groups"};
  app.require_subcommand(1);

  std::string config_path, out_dir, group, window, construction, target, kernel_op;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::size_t> stages;
  std::vector<int> a_steps, b_steps;
  std::vector<std::string> p_list, q_list;

  for (const std::string& name : h::suite_names()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " suite");
    sub->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "PRNG seed");
    sub->add_option("--tol", tol, "final-stage tolerance");
    sub->add_option("--group", group, "group orders, e.g. 8 or 2,6 or [4,6]");
    sub->add_option("--window", window, "window literal, e.g. {\"kind\":\"gauss\",\"spread\":2}");
    if (name == "kernel" || name == "all") sub->add_option("--op", kernel_op, "apply, compose, trace, bnorm or expand");
    if (name == "frames" || name == "all") {
      sub->add_option("--a", a_steps, "time steps")->delimiter(',');
      sub->add_option("--b", b_steps, "frequency steps")->delimiter(',');
    }
    if (name == "regnet" || name == "frames" || name == "all") sub->add_option("--stages", stages, "stage count");
    if (name == "regnet" || name == "all") {
      sub->add_option("--construction", construction, "pc, loc or gabor");
      sub->add_option("--target", target, "identity, fourier or random");
    }
    if (name == "mpq" || name == "all") {
      sub->add_option("--p", p_list, "inner exponents, e.g. 1,2,inf")->delimiter(',');
      sub->add_option("--q", q_list, "outer exponents")->delimiter(',');
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  h::ExperimentConfig cfg;
  try {
    if (!config_path.empty()) cfg = h::load_config(config_path);
    cfg.suite = app.get_subcommands().front()->get_name();
    if (!out_dir.empty()) cfg.out = out_dir;
    if (seed) cfg.seed = *seed;
    if (tol) cfg.tol = *tol;
    if (!group.empty()) cfg.groups = {h::parse_group_literal(group)};
    if (!window.empty()) cfg.windows = {h::parse_signal_literal(window)};
    if (!kernel_op.empty()) cfg.kernel_ops = {kernel_op};
    if (!a_steps.empty()) cfg.frame_a = a_steps;
    if (!b_steps.empty()) cfg.frame_b = b_steps;
    if (stages) cfg.stages = *stages;
    if (!construction.empty()) cfg.constructions = {construction};
    if (!target.empty()) cfg.target = target;
    if (!p_list.empty()) {
      cfg.p_list.clear();
      for (const auto& p : p_list) cfg.p_list.push_back(h::parse_exponent(p));
    }
    if (!q_list.empty()) {
      cfg.q_list.clear();
      for (const auto& q : q_list) cfg.q_list.push_back(h::parse_exponent(q));
    }
  } catch (const tfkit::Error& e) {
    std::cerr << "tfkit: config error: " << e.what() << "\n";
    return 2;
  }

  try {
    const h::RunResult r = h::run_suite(cfg, std::cout);
    return h::exit_code(r);
  } catch (const h::ConfigError& e) {
    std::cerr << "tfkit: config error: " << e.what() << "\n";
    return 2;
  } catch (const tfkit::Error& e) {
    std::cerr << "tfkit: " << e.what() << "\n";
    return 1;
  }
}
