#pragma once

#include <string>
#include <vector>

#include "tfkit/gabor.hpp"
#include "tfkit/kernel.hpp"
#include "tfkit/opnorm.hpp"
#include "tfkit/stft.hpp"

namespace tfkit {

/// Finite, totally ordered stand-in for a regularizing net: square
/// operators on one group, meant to approach the identity stage by stage.
struct RegNet {
  GroupSpec group;
  std::vector<KernelOperator> stages;
  std::vector<std::string> labels;
};

/// Validates that the list is nonempty and every stage is square on `group`.
RegNet make_regnet(GroupSpec group, std::vector<KernelOperator> stages, std::vector<std::string> labels);
RegNet identity_net(const GroupSpec& g, std::size_t stages = 1);

// Shears of a function on G x G.
Signal tau1(const GroupSpec& g, const Signal& f);  // f(s, t - s)
Signal tau2(const GroupSpec& g, const Signal& f);  // f(t - s, t)
Signal tau1_inverse(const GroupSpec& g, const Signal& f);
Signal tau2_inverse(const GroupSpec& g, const Signal& f);

/// s -> (s . h1) * h2, kernel tau1(h1 (x) h2).
KernelOperator pc_operator(const Signal& h1, const Signal& h2);
/// s -> (s * h1) . h2, kernel tau2(h1 (x) h2).
KernelOperator cp_operator(const Signal& h1, const Signal& h2);

/// |f^|_{L1(G^)}
double fourier_algebra_norm(const Signal& f);

/// Multiplier rising to 1: periodized Gaussian of the given width scaled to
/// 1 at the origin, then divided by max(1, its Fourier algebra norm). Its
/// Fourier transform is positive, so the norm is 1 up to the truncation of
/// the periodization. width = inf gives the constant 1.
Signal unit_multiplier(const GroupSpec& g, double width);

/// L1-normalized periodized Gaussian approximate unit.
Signal approximate_unit(const GroupSpec& g, double spread);

/// One product-convolution stage per spread s: h = approximate_unit(s),
/// multiplier = unit_multiplier(|G|^(1/rank) / s), so the multiplier widens
/// while h narrows. Closed by the exact stage h = dirac_0, multiplier = 1.
/// Throws DomainError for an empty, non-positive or non-decreasing spread list.
RegNet pc_net(const GroupSpec& g, const std::vector<double>& spreads);

/// T s = sum_v weight H(v) V_g s(v) pi(v) g.
KernelOperator localization_operator(const Signal& g, const PhaseTable& mask);

/// One localization operator per mask. Throws DomainError unless |g|_2 = 1
/// (within 1e-10) and every mask lives on the phase space of g's group.
RegNet localization_net(const Signal& g, const std::vector<PhaseTable>& masks);

/// Indicator masks of growing phase-space discs; the last mask is 1 everywhere.
std::vector<PhaseTable> nested_indicator_masks(const GroupSpec& g, std::size_t stages);

/// Mask on the phase space of G^ such that conjugating a localization
/// operator on G by the Fourier transform gives the localization operator on
/// G^ with window fourier(g) and this mask: H'(w, y) = H(-y, w).
PhaseTable fourier_conjugate_mask(const PhaseTable& mask);

/// Stages = partial_frame_sum over the exhaustion. Throws NotParseval when
/// the system's frame bounds are not (1, 1) within 1e-10, and DomainError
/// unless the exhaustion is nested and ends with the full lattice.
RegNet gabor_partial_net(const GaborSystem& sys, const std::vector<std::vector<std::size_t>>& exhaustion);

struct RegStageRow {
  std::size_t stage = 0;
  std::string label;
  double m1_err = 0.0;    // max over probes of |T f - f|_{M1}
  double weak_err = 0.0;  // max over probe pairs of |(f, T s - s)|
  double b_norm = 0.0;
  NormBracket m1_opnorm;
  NormBracket minf_opnorm;
};

struct RegularizingReport {
  std::vector<RegStageRow> rows;
  bool strong_ok = false;     // (i)  final m1_err <= tol
  bool m1_bound_ok = false;   // (ii) sup of the M1 operator norms finite
  bool minf_bound_ok = false; // (iii) same on M-inf
  bool weak_ok = false;       // (iv) final weak_err <= tol
  double sup_m1_opnorm = 0.0;
  double sup_minf_opnorm = 0.0;
  bool monotone_m1 = false;   // logged only
  bool monotone_weak = false; // logged only

  bool passed() const { return strong_ok && m1_bound_ok && minf_bound_ok && weak_ok; }
};

RegularizingReport check_regularizing(const RegNet& net, const std::vector<Signal>& probes, const Signal& window,
                                      double tol);

/// Stage a: net2[a] o T o net1[a]. Throws DomainError on mismatched stage
/// counts or groups.
std::vector<KernelOperator> sandwich(const KernelOperator& T, const RegNet& net1, const RegNet& net2);

struct ApproxStageRow {
  std::size_t stage = 0;
  double weak_err = 0.0;      // max over probe pairs |(f2, (T - T_a) f1)|
  double kernel_err = 0.0;    // max-entry kernel deviation
  double operator_err = 0.0;  // L2 operator-norm deviation
  double b_norm = 0.0;
  NormBracket m1_to_minf;     // |T_a| : M1 -> M-inf
};

struct ApproxReport {
  std::vector<ApproxStageRow> rows;
  double sup_m1_to_minf = 0.0;
  bool final_ok = false;
  bool monotone_weak = false;      // logged
  bool monotone_operator = false;  // logged

  double final_weak_err() const { return rows.empty() ? 0.0 : rows.back().weak_err; }
};

/// Stage-wise comparison of approximants against a target operator.
ApproxReport approximation_report(const KernelOperator& target, const std::vector<KernelOperator>& stages,
                                  const std::vector<Signal>& probes1, const std::vector<Signal>& probes2,
                                  const Signal& g1, const Signal& g2, double tol);

/// Sandwich T between the nets and report convergence to T.
ApproxReport sandwich_report(const KernelOperator& T, const RegNet& net1, const RegNet& net2,
                             const std::vector<Signal>& probes1, const std::vector<Signal>& probes2,
                             const Signal& g1, const Signal& g2, double tol);

struct ComposeApprox {
  std::vector<KernelOperator> stages;  // compose(S_a, T_a)
  KernelOperator target;               // compose(S, T)
  ApproxReport report;
};

/// S_a = net2 o S o net1, T_a = net3 o T o net2, stages compose(S_a, T_a),
/// compared against compose(S, T).
ComposeApprox compose_approx(const KernelOperator& S, const KernelOperator& T, const RegNet& net1,
                             const RegNet& net2, const RegNet& net3, const std::vector<Signal>& probes1,
                             const std::vector<Signal>& probes3, const Signal& g1, const Signal& g3, double tol);

}  // namespace tfkit
