#pragma once

#include "tfkit/kernel.hpp"

namespace tfkit {

enum class ModSpace { M1, Minf };

/// Two-sided bracket for an induced operator norm.
struct NormBracket {
  double lower = 0.0;
  double upper = 0.0;
};

/// Induced norm of T : M^p(G1) -> M^q(G2), p, q in {1, inf}, with the
/// norms taken against windows g1 and g2.
///
/// Every s satisfies s = |g1|^{-2} sum_v weight (pi(v) g1, s) conj(pi(v) g1),
/// so T acts on analysis coefficients through the matrix
///   B(u, v) = |g1|^{-2} (pi(u) g2, T conj(pi(v) g1)).
/// The upper end is the matching weighted l1/l-inf matrix norm of B; the
/// lower end is the best ratio |T s| / |s| attained on explicit test signals
/// (atoms and phase-aligned syntheses).
NormBracket induced_norm(const KernelOperator& T, const Signal& g1, const Signal& g2, ModSpace from, ModSpace to);

}  // namespace tfkit
