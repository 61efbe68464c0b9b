#include "tfkit/harness.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tfkit/gabor.hpp"
#include "tfkit/kernel.hpp"
#include "tfkit/linalg.hpp"
#include "tfkit/modspace.hpp"
#include "tfkit/opnorm.hpp"
#include "tfkit/parallel.hpp"
#include "tfkit/regularizers.hpp"

namespace tfkit::harness {

using json = nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------- config

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) fail(where + ": expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) fail(where + ": unknown key '" + it.key() + "'");
  }
}

std::vector<int> group_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": group must be an array of orders");
  std::vector<int> out;
  for (const json& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 1 || e.get<long long>() > 4096) {
      fail(where + ": group orders must be integers in [1, 4096]");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<double> doubles_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of numbers");
  std::vector<double> out;
  for (const json& e : j) {
    if (!e.is_number()) fail(where + ": expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<int> ints_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return {j.get<int>()};
  if (!j.is_array()) fail(where + ": expected an integer or an array of integers");
  std::vector<int> out;
  for (const json& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 1) fail(where + ": expected positive integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<std::string> strings_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return {j.get<std::string>()};
  if (!j.is_array()) fail(where + ": expected a string or an array of strings");
  std::vector<std::string> out;
  for (const json& e : j) {
    if (!e.is_string()) fail(where + ": expected strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Exponent exponent_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return parse_exponent(j.get<std::string>());
  if (!j.is_number() || !(j.get<double>() >= 1.0)) fail(where + ": exponents are numbers >= 1 or \"inf\"");
  return Exponent(j.get<double>());
}

std::vector<Exponent> exponents_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) return {exponent_from_json(j, where)};
  std::vector<Exponent> out;
  for (const json& e : j) out.push_back(exponent_from_json(e, where));
  if (out.empty()) fail(where + ": empty exponent list");
  return out;
}

std::uint64_t seed_from_json(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(where + ": seed must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

SignalSpec signal_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) fail(where + ": signal needs a string 'kind'");
  SignalSpec s;
  s.kind = j["kind"].get<std::string>();
  if (s.kind == "dirac") {
    check_keys(j, {"kind", "at"}, where);
    if (j.contains("at")) {
      if (!j["at"].is_array()) fail(where + ": 'at' must be an array of coordinates");
      for (const json& e : j["at"]) {
        if (!e.is_number_integer()) fail(where + ": 'at' must be an array of coordinates");
        s.at.push_back(e.get<int>());
      }
    }
  } else if (s.kind == "gauss") {
    check_keys(j, {"kind", "spread"}, where);
    if (!j.contains("spread") || !j["spread"].is_number() || !(j["spread"].get<double>() > 0.0)) {
      fail(where + ": gauss needs a positive 'spread'");
    }
    s.spread = j["spread"].get<double>();
  } else if (s.kind == "random") {
    check_keys(j, {"kind", "seed"}, where);
    if (!j.contains("seed")) fail(where + ": random needs a 'seed'");
    s.seed = seed_from_json(j["seed"], where);
  } else if (s.kind == "values") {
    check_keys(j, {"kind", "re", "im"}, where);
    if (!j.contains("re")) fail(where + ": values needs 're'");
    s.re = doubles_from_json(j["re"], where + ".re");
    if (j.contains("im")) {
      s.im = doubles_from_json(j["im"], where + ".im");
      if (s.im.size() != s.re.size()) fail(where + ": 're' and 'im' differ in length");
    }
  } else {
    fail(where + ": unknown signal kind '" + s.kind + "' (dirac, gauss, random, values)");
  }
  return s;
}

std::vector<SignalSpec> signals_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) return {signal_from_json(j, where)};
  std::vector<SignalSpec> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(signal_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

void validate(const ExperimentConfig& c) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), c.suite) == names.end()) fail("unknown suite '" + c.suite + "'");
  if (!(c.tol > 0.0)) fail("tol must be positive");
  for (const auto& op : c.kernel_ops) {
    static const std::set<std::string> ok{"apply", "compose", "trace", "bnorm", "expand"};
    if (!ok.count(op)) fail("unknown kernel op '" + op + "'");
  }
  for (const auto& k : c.constructions) {
    if (k != "pc" && k != "loc" && k != "gabor") fail("unknown construction '" + k + "'");
  }
  if (c.target != "identity" && c.target != "fourier" && c.target != "random") fail("unknown target '" + c.target + "'");
  if (c.stages < 2 || c.stages > 64) fail("stages must lie in [2, 64]");
  for (const auto& g : c.groups) {
    std::size_t n = 1;
    for (int o : g) n *= static_cast<std::size_t>(o);
    if (n > 64) fail("group order above 64 is out of scope");
  }
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// ---------------------------------------------------------------- reports

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num(std::size_t v) { return std::to_string(v); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Table {
  std::string file;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> r) { rows.push_back(std::move(r)); }

  std::string render() const {
    std::string out;
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (k) out += ',';
        out += csv_field(r[k]);
      }
      out += "\r\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
  }
};

struct SuiteOutput {
  std::string suite;
  std::vector<Table> tables;
  std::vector<Check> checks;

  Check& check(const std::string& name, double value, double limit) {
    checks.push_back({suite, name, value, limit, value <= limit});
    return checks.back();
  }
  /// Logged quantity: passes whenever it is finite.
  void log(const std::string& name, double value) { checks.push_back({suite, name, value, kInf, std::isfinite(value)}); }
};

std::uint64_t suite_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 step so neighbouring seeds give unrelated streams
  std::uint64_t z = seed + salt * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double side_length(const GroupSpec& g) {
  return std::pow(static_cast<double>(g.size()), 1.0 / static_cast<double>(std::max<std::size_t>(1, g.rank())));
}

Signal unit_gauss(const GroupSpec& g) {
  const Signal w = gauss(g, std::sqrt(side_length(g)));
  return w.scaled(1.0 / w.norm2());
}

std::vector<std::vector<int>> groups_or(const ExperimentConfig& c, std::vector<std::vector<int>> fallback) {
  return c.groups.empty() ? fallback : c.groups;
}

Signal window_for(const ExperimentConfig& c, const GroupSpec& g) {
  if (c.windows.empty()) return unit_gauss(g);
  const Signal w = make_signal(c.windows.front(), g);
  if (w.is_zero()) fail("window must be nonzero");
  return w;
}

std::vector<Signal> random_probes(const GroupSpec& g, std::size_t count, Rng& rng) {
  std::vector<Signal> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_signal(g, rng));
  return out;
}

double rel(double err, double scale) { return err / std::max(1.0, scale); }

// ---------------------------------------------------------------- norms

SuiteOutput run_norms(const ExperimentConfig& c) {
  SuiteOutput out{"norms", {}, {}};
  Table t{"norms.csv", {"group", "window_id", "signal_id", "s0_conv", "m1", "m2", "m4", "minf"}, {}};
  Rng rng(suite_seed(c.seed, 1));
  for (const auto& orders : groups_or(c, {{8}, {2, 6}, {12}})) {
    const GroupSpec G = make_group(orders);
    std::vector<Signal> windows;
    if (c.windows.empty()) {
      windows.push_back(unit_gauss(G));
      windows.push_back(random_signal(G, rng));
    } else {
      for (const auto& w : c.windows) windows.push_back(make_signal(w, G));
    }
    std::vector<Signal> signals;
    if (c.signals.empty()) {
      signals.push_back(dirac_index(G, 0));
      signals.push_back(gauss(G, 1.5));
      for (int k = 0; k < 3; ++k) signals.push_back(random_signal(G, rng));
    } else {
      for (const auto& s : c.signals) signals.push_back(make_signal(s, G));
    }
    const std::string gl = G.label();
    for (std::size_t wi = 0; wi < windows.size(); ++wi) {
      const Signal& g = windows[wi];
      if (g.is_zero()) fail("window w" + std::to_string(wi) + " is zero");
      double inv_err = 0.0, moyal_err = 0.0;
      for (std::size_t si = 0; si < signals.size(); ++si) {
        const Signal& s = signals[si];
        t.add({gl, "w" + std::to_string(wi), "s" + std::to_string(si), num(s0_norm_conv(s, g)), num(m1_norm(s, g)),
               num(mp_norm(s, g, Exponent(2.0))), num(mp_norm(s, g, Exponent(4.0))), num(minf_norm(s, g))});
      }
      std::vector<Signal> round_trip = signals;
      for (std::size_t x = 0; x < G.size(); ++x) round_trip.push_back(unit_vector(G, x));
      for (int k = 0; k < 20; ++k) round_trip.push_back(random_signal(G, rng));
      for (const Signal& s : round_trip) {
        const PhaseTable V = stft(g, s);
        inv_err = std::max(inv_err, rel(max_abs_diff(stft_invert(g, V), s), s.norm_inf()));
        const double lhs = table_norm(V, Exponent(2.0)), rhs = g.norm2() * s.norm2();
        moyal_err = std::max(moyal_err, rel(std::abs(lhs - rhs), rhs));
      }
      const std::string tag = gl + " w" + std::to_string(wi);
      out.check("inversion " + tag, inv_err, 1e-10);
      out.check("moyal " + tag, moyal_err, 1e-10);
    }
    // tensor factorization on G x G
    const Signal g = windows.front();
    const Signal gg = tensor(g, g);
    double e1 = 0.0, einf = 0.0;
    for (int k = 0; k < 25; ++k) {
      const Signal f1 = random_signal(G, rng), f2 = random_signal(G, rng);
      const Signal f = tensor(f1, f2);
      const double a1 = m1_norm(f1, g) * m1_norm(f2, g);
      const double ainf = minf_norm(f1, g) * minf_norm(f2, g);
      e1 = std::max(e1, rel(std::abs(m1_norm(f, gg) - a1), a1));
      einf = std::max(einf, rel(std::abs(minf_norm(f, gg) - ainf), ainf));
    }
    out.check("tensor m1 " + gl, e1, 1e-10);
    out.check("tensor minf " + gl, einf, 1e-10);
  }
  out.tables.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------- kernel

SuiteOutput run_kernel(const ExperimentConfig& c) {
  SuiteOutput out{"kernel", {}, {}};
  Table t{"kernel.csv", {"group", "op", "check", "value", "limit", "pass"}, {}};
  Rng rng(suite_seed(c.seed, 2));
  const std::set<std::string> ops(c.kernel_ops.begin(), c.kernel_ops.end());
  auto record = [&](const std::string& gl, const std::string& op, const std::string& name, double v, double lim) {
    const Check& ch = lim == kInf ? (out.log(op + " " + name + " " + gl, v), out.checks.back())
                                  : out.check(op + " " + name + " " + gl, v, lim);
    t.add({gl, op, name, num(v), num(lim), ch.pass ? "1" : "0"});
  };
  constexpr int kCount = 20;
  for (const auto& orders : groups_or(c, {{6}})) {
    const GroupSpec G = make_group(orders);
    const std::string gl = G.label();
    const Signal g = window_for(c, G);
    std::vector<KernelOperator> ts;
    for (int k = 0; k < kCount; ++k) ts.push_back(random_operator(G, G, rng));

    if (ops.count("apply")) {
      double bij = 0.0, mat = 0.0;
      for (const auto& T : ts) {
        const KernelOperator K = kernel_from_operator([&](const Signal& s) { return apply(T, s); }, G, G);
        for (std::size_t x = 0; x < G.size(); ++x) {
          const Signal e = unit_vector(G, x);
          bij = std::max(bij, max_abs_diff(apply(K, e), apply(T, e)));
        }
        const Signal s = random_signal(G, rng);
        mat = std::max(mat, max_abs_diff(apply(T, s), to_signal(operator_matrix(T) * to_vector(s), G)));
      }
      record(gl, "apply", "bijection", bij, 1e-12);
      record(gl, "apply", "matrix", mat, 1e-12);
    }
    if (ops.count("compose")) {
      double prod = 0.0, assoc = 0.0, ratio = 0.0;
      for (int k = 0; k + 2 < kCount; ++k) {
        const KernelOperator &A = ts[k], &B = ts[k + 1], &C = ts[k + 2];
        const KernelOperator AB = compose(A, B);
        const Matrix M = operator_matrix(B) * operator_matrix(A);
        prod = std::max(prod, (operator_matrix(AB) - M).cwiseAbs().maxCoeff());
        const KernelOperator l = compose(AB, C), r = compose(A, compose(B, C));
        assoc = std::max(assoc, rel(max_kernel_diff(l, r), l.kernel().norm_inf()));
        ratio = std::max(ratio, b_norm(AB, g, g) / (b_norm(A, g, g) * b_norm(B, g, g)));
      }
      record(gl, "compose", "matrix_product", prod, 1e-12);
      record(gl, "compose", "associativity", assoc, 1e-10);
      record(gl, "compose", "submultiplicative_ratio", ratio, kInf);
    }
    if (ops.count("trace")) {
      double diag = 0.0, cyc = 0.0, r1 = 0.0;
      for (int k = 0; k + 1 < kCount; ++k) {
        const KernelOperator &A = ts[k], &B = ts[k + 1];
        const cplx tr = trace(A);
        diag = std::max(diag, rel(std::abs(tr - operator_matrix(A).trace()), std::abs(tr)));
        const cplx ab = trace(compose(A, B)), ba = trace(compose(B, A));
        cyc = std::max(cyc, rel(std::abs(ab - ba), std::abs(ab)));
        const Signal f1 = random_signal(G, rng), f2 = random_signal(G, rng);
        r1 = std::max(r1, std::abs(trace(rank_one(f1, f2)) - pair_bilinear(f1, f2)));
      }
      record(gl, "trace", "diagonal_sum", diag, 1e-12);
      record(gl, "trace", "cyclicity", cyc, 1e-10);
      record(gl, "trace", "rank_one", r1, 1e-12);
      record(gl, "trace", "identity", std::abs(trace(identity_operator(G)) - static_cast<double>(G.size())), 1e-12);
    }
    if (ops.count("bnorm")) {
      double two = 0.0, r1 = 0.0;
      const Signal gg = tensor(g, g);
      for (int k = 0; k < std::min(kCount, 5); ++k) {
        const double a = b_norm(ts[k], g, g), b = m1_norm(ts[k].kernel(), gg);
        two = std::max(two, std::abs(a - b) / b);
        const Signal f1 = random_signal(G, rng), f2 = random_signal(G, rng);
        const double lhs = b_norm(rank_one(f1, f2), g, g), rhs = m1_norm(f1, g) * m1_norm(f2, g);
        r1 = std::max(r1, std::abs(lhs - rhs) / rhs);
      }
      record(gl, "bnorm", "two_paths", two, 1e-8);
      record(gl, "bnorm", "rank_one", r1, 1e-10);
    }
    if (ops.count("expand")) {
      double err = 0.0, gap = 0.0;
      for (int k = 0; k < std::min(kCount, 5); ++k) {
        const TensorExpansion e = tensor_expand(ts[k], c.tol);
        err = std::max(err, max_kernel_diff(reconstruct(e), ts[k]));
        gap = std::max(gap, b_norm(ts[k], g, g) / projective_norm(e, g, g) - 1.0);
      }
      record(gl, "expand", "reconstruction", err, c.tol);
      record(gl, "expand", "bnorm_over_projective_minus_1", gap, 1e-8);
    }
  }
  out.tables.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------- frames

double analysis_energy(const Signal& f, const GaborSystem& sys, const std::vector<std::size_t>& pts) {
  double e = 0.0;
  for (std::size_t v : pts) e += sys.weight() * std::norm(inner(f, tf_shift_index(sys.window, v)));
  return e;
}

SuiteOutput run_frames(const ExperimentConfig& c) {
  SuiteOutput out{"frames", {}, {}};
  Table t{"frames.csv",
          {"group", "window_id", "a", "b", "points", "lower", "upper", "is_frame", "parseval_dev", "frame_rep_err"},
          {}};
  Table p{"frames_partial.csv", {"group", "window_id", "a", "b", "stage", "points", "err_sq", "tail", "critical"}, {}};
  Rng rng(suite_seed(c.seed, 3));
  for (const auto& orders : groups_or(c, {{8}})) {
    const GroupSpec G = make_group(orders);
    const std::string gl = G.label();
    std::vector<Signal> windows;
    if (c.windows.empty()) {
      // an even window has a Zak zero at critical density, so add a generic one
      windows.push_back(unit_gauss(G));
      windows.push_back(random_signal(G, rng));
    } else {
      for (const auto& w : c.windows) windows.push_back(make_signal(w, G));
    }
    for (std::size_t wi = 0; wi < windows.size(); ++wi) {
    const Signal& g = windows[wi];
    if (g.is_zero()) fail("window w" + std::to_string(wi) + " is zero");
    const std::string wl = "w" + std::to_string(wi);
    const double g2 = g.norm2() * g.norm2();
    const FrameBounds full = frame_bounds(make_gabor_system(g, full_lattice(G)));
    out.check("full_lattice_lower " + gl + " " + wl, std::abs(full.lower - g2) / g2, 1e-10);
    out.check("full_lattice_upper " + gl + " " + wl, std::abs(full.upper - g2) / g2, 1e-10);

    std::vector<std::pair<int, int>> steps{{1, 1}};
    for (int a : c.frame_a) {
      for (int b : c.frame_b) {
        if (a == 1 && b == 1) continue;
        steps.emplace_back(a, b);
      }
    }
    for (const auto& [a, b] : steps) {
      bool fits = true;
      for (int o : orders) fits = fits && o % a == 0 && o % b == 0;
      if (!fits) continue;
      const std::vector<int> av(orders.size(), a), bv(orders.size(), b);
      const GaborSystem sys = make_gabor_system(g, make_lattice(G, av, bv));
      const FrameBounds fb = frame_bounds(sys);
      const std::string tag = gl + " " + wl + " a=" + std::to_string(a) + " b=" + std::to_string(b);
      std::string dev_s, rep_s;
      if (fb.is_frame) {
        const GaborSystem par = parseval_system(sys);
        const Matrix S = operator_matrix(frame_operator(par));
        const double dev = spectral_norm(S - Matrix::Identity(S.rows(), S.cols()));
        const Signal h = canonical_dual(sys);
        const auto pts = subgroup_indices(sys.lattice);
        double rep = 0.0;
        for (int k = 0; k < 20; ++k) {
          const Signal f = random_signal(G, rng), s = random_signal(G, rng);
          cplx rhs = 0.0;
          for (std::size_t v : pts) {
            rhs += sys.weight() * inner(f, tf_shift_index(g, v)) * pair_bilinear(tf_shift_index(h, v), s);
          }
          rep = std::max(rep, std::abs(pair_bilinear(f, s) - rhs));
        }
        dev_s = num(dev);
        rep_s = num(rep);
        out.check("parseval " + tag, dev, 1e-10);
        out.check("frame_rep " + tag, rep, 1e-9);

        const bool critical = std::abs(par.weight() * static_cast<double>(par.lattice.size()) - 1.0) < 1e-12;
        double law = 0.0;
        const auto stages = nested_exhaustion(par.lattice, c.stages);
        const Signal f = random_signal(G, rng);
        for (std::size_t st = 0; st < stages.size(); ++st) {
          std::vector<std::size_t> rest;
          std::set_difference(pts.begin(), pts.end(), stages[st].begin(), stages[st].end(), std::back_inserter(rest));
          const double err = std::pow((apply(partial_frame_sum_indices(par, stages[st]), f) - f).norm2(), 2);
          const double tail = analysis_energy(f, par, rest);
          law = std::max(law, critical ? std::abs(err - tail) : err - tail);
          p.add({gl, wl, std::to_string(a), std::to_string(b), num(st), num(stages[st].size()), num(err), num(tail),
                 critical ? "1" : "0"});
        }
        out.check((critical ? "pythagoras " : "pythagoras_inequality ") + tag, law, 1e-9);
      }
      t.add({gl, wl, std::to_string(a), std::to_string(b), num(sys.lattice.size()), num(fb.lower), num(fb.upper),
             fb.is_frame ? "1" : "0", dev_s, rep_s});
    }
    }
  }
  out.tables.push_back(std::move(t));
  out.tables.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------- regnet

RegNet build_net(const std::string& kind, const Signal& w, std::size_t stages) {
  const GroupSpec& G = w.group();
  if (kind == "pc") {
    std::vector<double> spreads;
    const double top = std::max(1.0, side_length(G) / 4.0);
    for (std::size_t k = 0; k + 1 < stages; ++k) spreads.push_back(top * std::pow(0.5, static_cast<double>(k)));
    return pc_net(G, spreads);
  }
  if (kind == "loc") return localization_net(w, nested_indicator_masks(G, stages));
  std::vector<int> a(G.rank()), b(G.rank());
  for (std::size_t j = 0; j < G.rank(); ++j) {
    const int n = G.orders()[j];
    a[j] = n % 2 == 0 ? 2 : 1;
    b[j] = n % 2 == 0 ? 2 : 1;
  }
  const GaborSystem sys = parseval_system(make_gabor_system(w, make_lattice(G, a, b)));
  return gabor_partial_net(sys, nested_exhaustion(sys.lattice, stages));
}

SuiteOutput run_regnet(const ExperimentConfig& c) {
  SuiteOutput out{"regnet", {}, {}};
  Table t{"convergence.csv",
          {"construction", "stage", "m1_err", "weak_err", "b_norm", "m1_opnorm", "minf_opnorm"},
          {}};
  Table d{"fourier_delta.csv", {"stage", "x", "y", "re", "im", "delta"}, {}};
  Rng rng(suite_seed(c.seed, 4));
  const GroupSpec G = make_group(groups_or(c, {{8}}).front());
  // localization nets need a unit window
  const Signal w0 = window_for(c, G);
  const Signal w1 = w0.scaled(1.0 / w0.norm2());
  const std::vector<Signal> probes1 = random_probes(G, 8, rng);

  KernelOperator target = identity_operator(G);
  if (c.target == "fourier") target = fourier_operator(G);
  if (c.target == "random") target = random_operator(G, G, rng);
  const GroupSpec H = target.codomain();
  const Signal w2 = c.target == "fourier" ? fourier(w1) : w1;
  const std::vector<Signal> probes2 = c.target == "fourier" ? random_probes(H, 8, rng) : probes1;

  for (const std::string& kind : c.constructions) {
    const RegNet net1 = build_net(kind, w1, c.stages);
    std::vector<KernelOperator> stages = net1.stages;
    if (c.target != "identity") stages = sandwich(target, net1, build_net(kind, w2, c.stages));
    std::vector<double> weak;
    for (std::size_t a = 0; a < stages.size(); ++a) {
      const KernelOperator& Ta = stages[a];
      double m1e = 0.0, we = 0.0;
      for (const Signal& f : probes1) {
        const Signal diff = apply(target, f) - apply(Ta, f);
        m1e = std::max(m1e, m1_norm(diff, w2));
        for (const Signal& s : probes2) we = std::max(we, std::abs(pair_bilinear(s, diff)));
      }
      weak.push_back(we);
      const NormBracket n1 = induced_norm(Ta, w1, w2, ModSpace::M1, ModSpace::M1);
      const NormBracket ninf = induced_norm(Ta, w1, w2, ModSpace::Minf, ModSpace::Minf);
      t.add({kind, num(a), num(m1e), num(we), num(b_norm(Ta, w1, w2)), num(n1.upper), num(ninf.upper)});
      if (a + 1 == stages.size()) {
        out.check(kind + " final m1_err", m1e, c.tol);
        out.check(kind + " final weak_err", we, c.tol);
      }
      out.log(kind + " m1_opnorm stage " + std::to_string(a), n1.upper);
      out.log(kind + " minf_opnorm stage " + std::to_string(a), ninf.upper);
    }
    std::size_t rises = 0;
    for (std::size_t a = 1; a < weak.size(); ++a) rises += weak[a] > weak[a - 1] + 1e-12;
    out.log(kind + " weak_err increases", static_cast<double>(rises));
  }

  // F^-1 o F through localization nets on G, G^, G
  const KernelOperator F = fourier_operator(G), Finv = inverse_fourier_operator(G);
  const KernelOperator exact = compose(F, Finv);
  out.check("fourier_delta exact", max_kernel_diff(exact, identity_operator(G)), 1e-12);
  const auto masks = nested_indicator_masks(G, c.stages);
  std::vector<PhaseTable> dual_masks;
  for (const auto& m : masks) dual_masks.push_back(fourier_conjugate_mask(m));
  const RegNet n1 = localization_net(w1, masks), n2 = localization_net(fourier(w1), dual_masks);
  const ComposeApprox ca = compose_approx(F, Finv, n1, n2, n1, probes1, probes1, w1, w1, c.tol);
  std::size_t rises = 0;
  for (std::size_t a = 0; a < ca.stages.size(); ++a) {
    if (a > 0) rises += ca.report.rows[a].operator_err > ca.report.rows[a - 1].operator_err + 1e-12;
    for (std::size_t x = 0; x < G.size(); ++x) {
      for (std::size_t y = 0; y < G.size(); ++y) {
        const cplx k = ca.stages[a].at(x, y) * G.haar_weight();
        d.add({num(a), num(x), num(y), num(k.real()), num(k.imag()), x == y ? "1" : "0"});
      }
    }
  }
  out.check("fourier_delta staged operator_err increases", static_cast<double>(rises), 0.0);
  out.check("fourier_delta final kernel_err", ca.report.rows.back().kernel_err, c.tol);

  out.tables.push_back(std::move(t));
  out.tables.push_back(std::move(d));
  return out;
}

// ---------------------------------------------------------------- mpq

SuiteOutput run_mpq(const ExperimentConfig& c) {
  SuiteOutput out{"mpq", {}, {}};
  Table t{"mpq.csv", {"operator_id", "p", "q", "condition", "empirical", "ratio"}, {}};
  Table gap{"mpq_gap.csv", {"N", "condition", "empirical", "ratio"}, {}};
  Rng rng(suite_seed(c.seed, 5));
  const GroupSpec G = make_group(groups_or(c, {{8}}).front());
  const Signal g = window_for(c, G);
  const std::vector<Signal> probes = mpq_probes(g, 40, rng);

  struct Case {
    std::string id;
    KernelOperator T;
    Signal g2;
  };
  const Signal f1 = random_signal(G, rng), f2 = random_signal(G, rng);
  std::vector<Case> cases{
      {"rank_one", rank_one(f1, f2), g},
      {"identity", identity_operator(G), g},
      {"fourier", fourier_operator(G), fourier(g)},
      {"random", random_operator(G, G, rng), g},
  };
  for (const Case& k : cases) {
    for (const Exponent& p : c.p_list) {
      for (const Exponent& q : c.q_list) {
        const double cond = mpq_bound(k.T, g, k.g2, p, q);
        const double emp = empirical_mpq_opnorm(k.T, g, k.g2, p, q, probes);
        t.add({k.id, p.label(), q.label(), num(cond), num(emp), num(emp / cond)});
        out.check(k.id + " p=" + p.label() + " q=" + q.label() + " ratio", emp / cond, 1.0 + 1e-12);
      }
    }
  }
  double prev = 0.0;
  std::size_t rises = 0;
  for (int n : {4, 8, 16}) {
    const GroupSpec Gn = make_group({n});
    const Signal gn = unit_gauss(Gn);
    const KernelOperator I = identity_operator(Gn);
    const double cond = mpq_bound(I, gn, gn, Exponent(2.0), Exponent(2.0));
    const double emp = empirical_mpq_opnorm(I, gn, gn, Exponent(2.0), Exponent(2.0), mpq_probes(gn, 20, rng));
    gap.add({std::to_string(n), num(cond), num(emp), num(emp / cond)});
    rises += cond > prev;
    prev = cond;
    out.check("identity gap N=" + std::to_string(n) + " |empirical - 1|", std::abs(emp - 1.0), 1e-9);
  }
  out.check("identity gap condition non-increasing steps", 3.0 - static_cast<double>(rises), 0.0);
  out.tables.push_back(std::move(t));
  out.tables.push_back(std::move(gap));
  return out;
}

SuiteOutput run_one(const std::string& suite, const ExperimentConfig& c) {
  if (suite == "norms") return run_norms(c);
  if (suite == "kernel") return run_kernel(c);
  if (suite == "frames") return run_frames(c);
  if (suite == "regnet") return run_regnet(c);
  return run_mpq(c);
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + path.string());
  f << bytes;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"norms", "kernel", "frames", "regnet", "mpq", "all"};
  return names;
}

ExperimentConfig parse_config(const std::string& text, const std::string& source_name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    fail(source_name + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
  check_keys(j,
             {"suite", "group", "groups", "seed", "tol", "out", "windows", "window", "signals", "kernel", "frames",
              "regnet", "mpq"},
             source_name);
  ExperimentConfig c;
  try {
    if (j.contains("suite")) {
      if (!j["suite"].is_string()) fail("suite must be a string");
      c.suite = j["suite"].get<std::string>();
    }
    if (j.contains("group") && j.contains("groups")) fail("give either 'group' or 'groups'");
    if (j.contains("group")) c.groups = {group_from_json(j["group"], "group")};
    if (j.contains("groups")) {
      if (!j["groups"].is_array()) fail("groups must be an array of groups");
      for (const json& g : j["groups"]) c.groups.push_back(group_from_json(g, "groups"));
    }
    if (j.contains("seed")) c.seed = seed_from_json(j["seed"], "seed");
    if (j.contains("tol")) {
      if (!j["tol"].is_number()) fail("tol must be a number");
      c.tol = j["tol"].get<double>();
    }
    if (j.contains("out")) {
      if (!j["out"].is_string()) fail("out must be a string");
      c.out = j["out"].get<std::string>();
    }
    if (j.contains("window")) c.windows = signals_from_json(j["window"], "window");
    if (j.contains("windows")) c.windows = signals_from_json(j["windows"], "windows");
    if (j.contains("signals")) c.signals = signals_from_json(j["signals"], "signals");
    if (j.contains("kernel")) {
      const json& k = j["kernel"];
      check_keys(k, {"op"}, "kernel");
      if (k.contains("op")) c.kernel_ops = strings_from_json(k["op"], "kernel.op");
    }
    if (j.contains("frames")) {
      const json& f = j["frames"];
      check_keys(f, {"a", "b", "window", "stages"}, "frames");
      if (f.contains("a")) c.frame_a = ints_from_json(f["a"], "frames.a");
      if (f.contains("b")) c.frame_b = ints_from_json(f["b"], "frames.b");
      if (f.contains("window")) c.windows = {signal_from_json(f["window"], "frames.window")};
      if (f.contains("stages")) c.stages = static_cast<std::size_t>(ints_from_json(f["stages"], "frames.stages").front());
    }
    if (j.contains("regnet")) {
      const json& r = j["regnet"];
      check_keys(r, {"construction", "stages", "target"}, "regnet");
      if (r.contains("construction")) c.constructions = strings_from_json(r["construction"], "regnet.construction");
      if (r.contains("stages")) c.stages = static_cast<std::size_t>(ints_from_json(r["stages"], "regnet.stages").front());
      if (r.contains("target")) {
        if (!r["target"].is_string()) fail("regnet.target must be a string");
        c.target = r["target"].get<std::string>();
      }
    }
    if (j.contains("mpq")) {
      const json& m = j["mpq"];
      check_keys(m, {"p", "q"}, "mpq");
      if (m.contains("p")) c.p_list = exponents_from_json(m["p"], "mpq.p");
      if (m.contains("q")) c.q_list = exponents_from_json(m["q"], "mpq.q");
    }
  } catch (const json::exception& e) {
    fail(source_name + ": " + e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    fail(source_name + ": " + e.what());
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail("cannot read config " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), path.string());
}

std::vector<int> parse_group_literal(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '[') {
    try {
      return group_from_json(json::parse(s), "group");
    } catch (const json::parse_error& e) {
      fail("group literal '" + text + "': " + e.what());
    }
  }
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      fail("group literal '" + text + "' is not a list of orders");
    }
    if (used != item.size() || v < 1) fail("group literal '" + text + "' is not a list of positive orders");
    out.push_back(v);
  }
  return out;
}

Exponent parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity") return Exponent::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    fail("exponent '" + text + "' is not a number or 'inf'");
  }
  if (used != text.size() || !(v >= 1.0)) fail("exponent '" + text + "' must be >= 1 or 'inf'");
  if (std::isinf(v)) return Exponent::infinity();
  return Exponent(v);
}

SignalSpec parse_signal_literal(const std::string& json_text) {
  try {
    return signal_from_json(json::parse(json_text), "signal");
  } catch (const json::parse_error& e) {
    fail("signal literal: " + std::string(e.what()));
  }
}

Signal make_signal(const SignalSpec& lit, const GroupSpec& g) {
  if (lit.kind == "dirac") {
    if (lit.at.empty()) return dirac(g, g.zero());
    const GroupElement x{lit.at};
    if (!g.contains(x)) fail("dirac position does not lie in " + g.label());
    return dirac(g, x);
  }
  if (lit.kind == "gauss") return gauss(g, lit.spread);
  if (lit.kind == "random") {
    Rng rng(lit.seed);
    return random_signal(g, rng);
  }
  if (lit.kind == "values") {
    if (lit.re.size() != g.size()) {
      fail("values literal has " + std::to_string(lit.re.size()) + " entries, " + g.label() + " needs " +
           std::to_string(g.size()));
    }
    std::vector<cplx> v(g.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = {lit.re[k], lit.im.empty() ? 0.0 : lit.im[k]};
    try {
      return Signal(g, std::move(v));
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }
  fail("unknown signal kind '" + lit.kind + "'");
}

bool RunResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

int exit_code(const RunResult& r) { return r.passed() ? 0 : 1; }

RunResult run_suite(const ExperimentConfig& cfg, std::ostream& log) {
  validate(cfg);
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    suites = {"norms", "kernel", "frames", "regnet", "mpq"};
  } else {
    suites = {cfg.suite};
  }

  std::vector<SuiteOutput> outputs(suites.size());
  parallel_for(suites.size(), [&](std::size_t k) { outputs[k] = run_one(suites[k], cfg); });

  std::filesystem::create_directories(cfg.out);
  RunResult result;
  json summary = json::object();
  summary["seed"] = cfg.seed;
  summary["tol"] = cfg.tol;
  summary["suite"] = cfg.suite;
  summary["prng"] = "mt19937_64";
  json per_suite = json::object();
  for (const SuiteOutput& o : outputs) {
    json files = json::array();
    for (const Table& t : o.tables) {
      write_file(cfg.out / t.file, t.render());
      result.files.push_back(t.file);
      files.push_back(t.file);
    }
    std::size_t failed = 0;
    json checks = json::array();
    for (const Check& c : o.checks) {
      failed += !c.pass;
      json jc = json::object();
      jc["name"] = c.name;
      jc["value"] = std::isfinite(c.value) ? json(c.value) : json(num(c.value));
      jc["limit"] = std::isfinite(c.limit) ? json(c.limit) : json(num(c.limit));
      jc["pass"] = c.pass;
      checks.push_back(jc);
      result.checks.push_back(c);
    }
    json s = json::object();
    s["checks"] = o.checks.size();
    s["failed"] = failed;
    s["files"] = files;
    s["results"] = checks;
    per_suite[o.suite] = s;

    std::string names;
    for (const Table& t : o.tables) names += (names.empty() ? "" : ", ") + t.file;
    log << o.suite << ": " << (o.checks.size() - failed) << "/" << o.checks.size() << " checks passed (" << names
        << ")\n";
    for (const Check& c : o.checks) {
      if (!c.pass) log << "  FAIL " << c.name << " value=" << num(c.value) << " limit=" << num(c.limit) << "\n";
    }
  }
  summary["suites"] = per_suite;
  summary["passed"] = result.passed();
  write_file(cfg.out / "summary.json", summary.dump(2) + "\n");
  result.files.push_back("summary.json");
  return result;
}

}  // namespace tfkit::harness
