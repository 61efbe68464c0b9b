#include "tfkit/opnorm.hpp"

#include <algorithm>
#include <cmath>

#include "tfkit/errors.hpp"
#include "tfkit/stft.hpp"

namespace tfkit {

namespace {

double space_norm(const Signal& s, const Signal& g, ModSpace m) {
  return m == ModSpace::M1 ? m1_norm(s, g) : minf_norm(s, g);
}

}  // namespace

NormBracket induced_norm(const KernelOperator& T, const Signal& g1, const Signal& g2, ModSpace from, ModSpace to) {
  require_same_group(g1.group(), T.domain(), "induced_norm window 1");
  require_same_group(g2.group(), T.codomain(), "induced_norm window 2");
  if (g1.is_zero() || g2.is_zero()) throw ZeroWindow("induced_norm needs nonzero windows");

  const GroupSpec& G1 = T.domain();
  const std::size_t p1 = G1.size() * G1.size();
  const std::size_t p2 = T.codomain().size() * T.codomain().size();
  const double w1 = phase_weight(G1);
  const double w2 = phase_weight(T.codomain());
  const double inv_g1 = 1.0 / (g1.norm2() * g1.norm2());

  // column v of B, stored as B[v * p2 + u]
  std::vector<cplx> B(p1 * p2);
  std::vector<Signal> atoms;
  atoms.reserve(p1);
  for (std::size_t v = 0; v < p1; ++v) {
    atoms.push_back(tf_shift_index(g1, v).conj());
    const PhaseTable col = tf_pairing(g2, apply(T, atoms.back()));
    for (std::size_t u = 0; u < p2; ++u) B[v * p2 + u] = inv_g1 * col.values[u];
  }

  NormBracket r;
  std::size_t best_row = 0;
  if (from == ModSpace::M1 && to == ModSpace::M1) {
    for (std::size_t v = 0; v < p1; ++v) {
      double s = 0.0;
      for (std::size_t u = 0; u < p2; ++u) s += w2 * std::abs(B[v * p2 + u]);
      r.upper = std::max(r.upper, s);
    }
  } else if (from == ModSpace::Minf && to == ModSpace::Minf) {
    for (std::size_t u = 0; u < p2; ++u) {
      double s = 0.0;
      for (std::size_t v = 0; v < p1; ++v) s += w1 * std::abs(B[v * p2 + u]);
      if (s > r.upper) {
        r.upper = s;
        best_row = u;
      }
    }
  } else if (from == ModSpace::M1 && to == ModSpace::Minf) {
    for (const cplx& b : B) r.upper = std::max(r.upper, std::abs(b));
  } else {
    double s = 0.0;
    for (const cplx& b : B) s += std::abs(b);
    r.upper = w1 * w2 * s;
  }

  // Lower end: atoms always, plus the phase-aligned synthesis that attains
  // the row bound when the domain carries the sup norm.
  for (const Signal& a : atoms) {
    const double den = space_norm(a, g1, from);
    if (den > 0.0) r.lower = std::max(r.lower, space_norm(apply(T, a), g2, to) / den);
  }
  if (from == ModSpace::Minf) {
    std::vector<cplx> coeff(p1);
    for (std::size_t v = 0; v < p1; ++v) {
      const cplx b = B[v * p2 + best_row];
      coeff[v] = std::abs(b) > 0.0 ? std::conj(b) / std::abs(b) : cplx{1.0, 0.0};
    }
    Signal s(G1);
    for (std::size_t v = 0; v < p1; ++v) s = s + atoms[v].scaled(inv_g1 * w1 * coeff[v]);
    const double den = space_norm(s, g1, from);
    if (den > 0.0) r.lower = std::max(r.lower, space_norm(apply(T, s), g2, to) / den);
  }
  return r;
}

}  // namespace tfkit
