#include "tfkit/regularizers.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "tfkit/errors.hpp"
#include "tfkit/linalg.hpp"

namespace tfkit {

namespace {

constexpr double kMonotoneSlack = 1e-12;

bool non_increasing(const std::vector<double>& v) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] > v[k - 1] + kMonotoneSlack) return false;
  }
  return true;
}

void require_pair_group(const GroupSpec& g, const Signal& f) {
  require_same_group(f.group(), product(g, g), "shear");
}

}  // namespace

RegNet make_regnet(GroupSpec group, std::vector<KernelOperator> stages, std::vector<std::string> labels) {
  if (stages.empty()) throw DomainError("a regularizing net needs at least one stage");
  for (const KernelOperator& T : stages) {
    if (!(T.domain() == group) || !(T.codomain() == group)) {
      throw DomainError("every net stage must be square on " + group.label());
    }
  }
  labels.resize(stages.size());
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k].empty()) labels[k] = "stage" + std::to_string(k);
  }
  return RegNet{std::move(group), std::move(stages), std::move(labels)};
}

RegNet identity_net(const GroupSpec& g, std::size_t stages) {
  return make_regnet(g, std::vector<KernelOperator>(stages, identity_operator(g)), {});
}

Signal tau1(const GroupSpec& g, const Signal& f) {
  require_pair_group(g, f);
  const std::size_t n = g.size();
  std::vector<cplx> out(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) out[s * n + t] = f[s * n + g.sub_index(t, s)];
  }
  return Signal(f.group(), std::move(out));
}

Signal tau2(const GroupSpec& g, const Signal& f) {
  require_pair_group(g, f);
  const std::size_t n = g.size();
  std::vector<cplx> out(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) out[s * n + t] = f[g.sub_index(t, s) * n + t];
  }
  return Signal(f.group(), std::move(out));
}

Signal tau1_inverse(const GroupSpec& g, const Signal& f) {
  require_pair_group(g, f);
  const std::size_t n = g.size();
  std::vector<cplx> out(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) out[s * n + t] = f[s * n + g.add_index(t, s)];
  }
  return Signal(f.group(), std::move(out));
}

// tau2 is an involution.
Signal tau2_inverse(const GroupSpec& g, const Signal& f) { return tau2(g, f); }

KernelOperator pc_operator(const Signal& h1, const Signal& h2) {
  require_same_group(h1.group(), h2.group(), "pc_operator");
  const GroupSpec& g = h1.group();
  return KernelOperator(g, g, tau1(g, tensor(h1, h2)));
}

KernelOperator cp_operator(const Signal& h1, const Signal& h2) {
  require_same_group(h1.group(), h2.group(), "cp_operator");
  const GroupSpec& g = h1.group();
  return KernelOperator(g, g, tau2(g, tensor(h1, h2)));
}

double fourier_algebra_norm(const Signal& f) { return fourier(f).norm1(); }

Signal unit_multiplier(const GroupSpec& g, double width) {
  if (!(width > 0.0)) throw DomainError("multiplier width must be positive");
  if (std::isinf(width)) return constant(g, 1.0);
  const Signal s = gauss(g, width);
  const Signal p = s.scaled(1.0 / s[0].real());
  const double a = fourier_algebra_norm(p);
  return a > 1.0 ? p.scaled(1.0 / a) : p;
}

Signal approximate_unit(const GroupSpec& g, double spread) {
  const Signal h = gauss(g, spread);
  return h.scaled(1.0 / h.norm1());
}

RegNet pc_net(const GroupSpec& g, const std::vector<double>& spreads) {
  if (spreads.empty()) throw DomainError("pc_net needs at least one spread");
  for (std::size_t k = 0; k < spreads.size(); ++k) {
    if (!(spreads[k] > 0.0)) throw DomainError("pc_net spreads must be positive");
    if (k > 0 && !(spreads[k] < spreads[k - 1])) throw DomainError("pc_net spreads must be decreasing");
  }
  const double side = std::pow(static_cast<double>(g.size()), 1.0 / static_cast<double>(std::max<std::size_t>(1, g.rank())));
  std::vector<KernelOperator> stages;
  std::vector<std::string> labels;
  for (double spread : spreads) {
    stages.push_back(pc_operator(unit_multiplier(g, side / spread), approximate_unit(g, spread)));
    labels.push_back("pc spread=" + std::to_string(spread));
  }
  stages.push_back(pc_operator(constant(g, 1.0), dirac_index(g, 0)));
  labels.emplace_back("pc exact");
  return make_regnet(g, std::move(stages), std::move(labels));
}

KernelOperator localization_operator(const Signal& g, const PhaseTable& mask) {
  const GroupSpec& G = g.group();
  require_same_group(mask.group, G, "localization mask");
  const std::size_t n = G.size();
  std::vector<cplx> k(n * n);
  for (std::size_t v = 0; v < mask.size(); ++v) {
    const cplx h = mask.values[v];
    if (h == cplx{0.0, 0.0}) continue;
    const Signal atom = tf_shift_index(g, v);
    for (std::size_t s = 0; s < n; ++s) {
      const cplx a = mask.weight * h * std::conj(atom[s]);
      for (std::size_t t = 0; t < n; ++t) k[s * n + t] += a * atom[t];
    }
  }
  return KernelOperator(G, G, std::move(k));
}

RegNet localization_net(const Signal& g, const std::vector<PhaseTable>& masks) {
  if (std::abs(g.norm2() - 1.0) > 1e-10) throw DomainError("localization window must have unit L2 norm");
  if (masks.empty()) throw DomainError("localization_net needs at least one mask");
  std::vector<KernelOperator> stages;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < masks.size(); ++k) {
    for (const cplx& h : masks[k].values) {
      if (!std::isfinite(std::abs(h))) throw DomainError("mask entries must be finite");
    }
    stages.push_back(localization_operator(g, masks[k]));
    labels.push_back("loc mask" + std::to_string(k));
  }
  return make_regnet(g.group(), std::move(stages), std::move(labels));
}

std::vector<PhaseTable> nested_indicator_masks(const GroupSpec& g, std::size_t stages) {
  if (stages == 0) throw DomainError("need at least one mask");
  const std::size_t n = g.size();
  std::vector<double> dist(n * n);
  double rmax = 0.0;
  for (std::size_t v = 0; v < n * n; ++v) {
    dist[v] = g.distance_sq(v / n) + g.distance_sq(v % n);
    rmax = std::max(rmax, dist[v]);
  }
  std::vector<PhaseTable> masks;
  for (std::size_t k = 1; k <= stages; ++k) {
    PhaseTable m = zero_table(g);
    const double frac = static_cast<double>(k) / static_cast<double>(stages);
    const double r2 = (k == stages) ? rmax : rmax * frac * frac;
    for (std::size_t v = 0; v < n * n; ++v) m.values[v] = dist[v] <= r2 ? 1.0 : 0.0;
    masks.push_back(std::move(m));
  }
  return masks;
}

PhaseTable fourier_conjugate_mask(const PhaseTable& mask) {
  const GroupSpec& G = mask.group;
  const std::size_t n = G.size();
  PhaseTable out{G.dual(), std::vector<cplx>(n * n), phase_weight(G.dual())};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out.values[a * n + b] = mask.values[G.neg_index(b) * n + a];
  }
  return out;
}

RegNet gabor_partial_net(const GaborSystem& sys, const std::vector<std::vector<std::size_t>>& exhaustion) {
  const FrameBounds fb = frame_bounds(sys);
  if (std::abs(fb.lower - 1.0) > 1e-10 || std::abs(fb.upper - 1.0) > 1e-10) {
    throw NotParseval("gabor_partial_net needs a Parseval system");
  }
  if (exhaustion.empty()) throw DomainError("exhaustion must be nonempty");
  const std::vector<std::size_t> all = subgroup_indices(sys.lattice);
  std::set<std::size_t> prev;
  for (const auto& subset : exhaustion) {
    std::set<std::size_t> cur(subset.begin(), subset.end());
    if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) {
      throw DomainError("exhaustion must be nested");
    }
    prev = std::move(cur);
  }
  if (prev != std::set<std::size_t>(all.begin(), all.end())) {
    throw DomainError("exhaustion must end with the whole lattice");
  }
  std::vector<KernelOperator> stages;
  std::vector<std::string> labels;
  for (const auto& subset : exhaustion) {
    stages.push_back(partial_frame_sum_indices(sys, subset));
    labels.push_back("gabor |N|=" + std::to_string(subset.size()));
  }
  return make_regnet(sys.window.group(), std::move(stages), std::move(labels));
}

RegularizingReport check_regularizing(const RegNet& net, const std::vector<Signal>& probes, const Signal& window,
                                      double tol) {
  RegularizingReport rep;
  std::vector<double> m1s, weaks;
  for (std::size_t k = 0; k < net.stages.size(); ++k) {
    const KernelOperator& T = net.stages[k];
    RegStageRow row;
    row.stage = k;
    row.label = net.labels[k];
    std::vector<Signal> images;
    for (const Signal& f : probes) {
      if (f.is_zero()) continue;
      images.push_back(apply(T, f));
      row.m1_err = std::max(row.m1_err, m1_norm(images.back() - f, window));
    }
    std::size_t j = 0;
    for (const Signal& s : probes) {
      if (s.is_zero()) continue;
      const Signal diff = images[j++] - s;
      for (const Signal& f : probes) {
        if (!f.is_zero()) row.weak_err = std::max(row.weak_err, std::abs(pair_bilinear(f, diff)));
      }
    }
    row.b_norm = b_norm(T, window, window);
    row.m1_opnorm = induced_norm(T, window, window, ModSpace::M1, ModSpace::M1);
    row.minf_opnorm = induced_norm(T, window, window, ModSpace::Minf, ModSpace::Minf);
    rep.sup_m1_opnorm = std::max(rep.sup_m1_opnorm, row.m1_opnorm.upper);
    rep.sup_minf_opnorm = std::max(rep.sup_minf_opnorm, row.minf_opnorm.upper);
    m1s.push_back(row.m1_err);
    weaks.push_back(row.weak_err);
    rep.rows.push_back(std::move(row));
  }
  rep.strong_ok = rep.rows.back().m1_err <= tol;
  rep.weak_ok = rep.rows.back().weak_err <= tol;
  rep.m1_bound_ok = std::isfinite(rep.sup_m1_opnorm);
  rep.minf_bound_ok = std::isfinite(rep.sup_minf_opnorm);
  rep.monotone_m1 = non_increasing(m1s);
  rep.monotone_weak = non_increasing(weaks);
  return rep;
}

std::vector<KernelOperator> sandwich(const KernelOperator& T, const RegNet& net1, const RegNet& net2) {
  if (net1.stages.size() != net2.stages.size()) throw DomainError("sandwich needs nets with equal stage counts");
  require_same_group(net1.group, T.domain(), "sandwich domain net");
  require_same_group(net2.group, T.codomain(), "sandwich codomain net");
  std::vector<KernelOperator> out;
  out.reserve(net1.stages.size());
  for (std::size_t a = 0; a < net1.stages.size(); ++a) {
    out.push_back(compose(compose(net1.stages[a], T), net2.stages[a]));
  }
  return out;
}

ApproxReport approximation_report(const KernelOperator& target, const std::vector<KernelOperator>& stages,
                                  const std::vector<Signal>& probes1, const std::vector<Signal>& probes2,
                                  const Signal& g1, const Signal& g2, double tol) {
  ApproxReport rep;
  std::vector<double> weak, opnorm;
  for (std::size_t a = 0; a < stages.size(); ++a) {
    const KernelOperator diff = target - stages[a];
    ApproxStageRow row;
    row.stage = a;
    for (const Signal& f1 : probes1) {
      const Signal image = apply(diff, f1);
      for (const Signal& f2 : probes2) row.weak_err = std::max(row.weak_err, std::abs(pair_bilinear(f2, image)));
    }
    row.kernel_err = diff.kernel().norm_inf();
    row.operator_err = spectral_norm(operator_matrix(diff));
    row.b_norm = b_norm(stages[a], g1, g2);
    row.m1_to_minf = induced_norm(stages[a], g1, g2, ModSpace::M1, ModSpace::Minf);
    rep.sup_m1_to_minf = std::max(rep.sup_m1_to_minf, row.m1_to_minf.upper);
    weak.push_back(row.weak_err);
    opnorm.push_back(row.operator_err);
    rep.rows.push_back(row);
  }
  if (!rep.rows.empty()) {
    rep.final_ok = rep.rows.back().weak_err <= tol && rep.rows.back().kernel_err <= tol;
  }
  rep.monotone_weak = non_increasing(weak);
  rep.monotone_operator = non_increasing(opnorm);
  return rep;
}

ApproxReport sandwich_report(const KernelOperator& T, const RegNet& net1, const RegNet& net2,
                             const std::vector<Signal>& probes1, const std::vector<Signal>& probes2,
                             const Signal& g1, const Signal& g2, double tol) {
  return approximation_report(T, sandwich(T, net1, net2), probes1, probes2, g1, g2, tol);
}

ComposeApprox compose_approx(const KernelOperator& S, const KernelOperator& T, const RegNet& net1,
                             const RegNet& net2, const RegNet& net3, const std::vector<Signal>& probes1,
                             const std::vector<Signal>& probes3, const Signal& g1, const Signal& g3, double tol) {
  const std::vector<KernelOperator> s_stages = sandwich(S, net1, net2);
  const std::vector<KernelOperator> t_stages = sandwich(T, net2, net3);
  std::vector<KernelOperator> stages;
  stages.reserve(s_stages.size());
  for (std::size_t a = 0; a < s_stages.size(); ++a) stages.push_back(compose(s_stages[a], t_stages[a]));
  KernelOperator target = compose(S, T);
  ApproxReport rep = approximation_report(target, stages, probes1, probes3, g1, g3, tol);
  return ComposeApprox{std::move(stages), std::move(target), std::move(rep)};
}

}  // namespace tfkit
