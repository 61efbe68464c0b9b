#pragma once

#include <vector>

#include "tfkit/gabor.hpp"
#include "tfkit/kernel.hpp"

namespace tfkit {

/// pi(x, w) = E_w T_x as a kernel operator on g.
KernelOperator tf_shift_operator(const GroupSpec& g, const PhasePoint& v);
/// E_w T_{-x}: the domain-side shift appearing when a kernel expansion is
/// turned back into an operator expansion.
KernelOperator domain_shift_operator(const GroupSpec& g, const PhasePoint& v);

struct OperatorAtom {
  PhasePoint domain_point;    // (x1, w1)
  PhasePoint codomain_point;  // (x2, w2)
  cplx kernel_coefficient;    // c_j in kappa(T) = sum c_j E T kappa(T0)
  cplx operator_coefficient;  // w1(x1) c_j
};

struct OperatorExpansion {
  GroupSpec domain;
  GroupSpec codomain;
  std::vector<OperatorAtom> atoms;
  double l1 = 0.0;  // sum |operator_coefficient|
  FrameBounds bounds;
};

/// Expands T as sum_j c_j pi(v2_j) o T0 o E_{w1_j} T_{-x1_j}, with the
/// (v1_j, v2_j) running over lattice1 x lattice2. The coefficients come from
/// the canonical dual of the Gabor system on G1 x G2 generated by kappa(T0).
/// Throws NonFrame (with the measured bounds) when that system is not a frame.
OperatorExpansion atomic_operator_expand(const KernelOperator& T, const KernelOperator& T0,
                                         const PhaseSubgroup& lattice1, const PhaseSubgroup& lattice2);

/// Sum of the expansion's terms built by explicit operator composition.
KernelOperator synthesize_operator(const OperatorExpansion& e, const KernelOperator& T0);

}  // namespace tfkit
