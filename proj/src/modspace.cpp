#include "tfkit/modspace.hpp"

#include <algorithm>
#include <cmath>

#include "tfkit/errors.hpp"
#include "tfkit/parallel.hpp"

namespace tfkit {

double mixed_norm_condition(const KernelOperator& T, const Signal& g1, const Signal& g2, Exponent p, Exponent q) {
  if (g1.is_zero() || g2.is_zero()) throw ZeroWindow("mixed_norm_condition needs nonzero windows");
  const KernelPairingTable t = kernel_pairing_table(T, g1, g2);

  // inner[v2] = L^p norm over v1
  std::vector<double> inner(t.phase2, 0.0);
  parallel_for(t.phase2, [&](std::size_t v2) {
    double acc = 0.0;
    if (p.is_infinite()) {
      for (std::size_t v1 = 0; v1 < t.phase1; ++v1) acc = std::max(acc, std::abs(t.at(v1, v2)));
    } else {
      for (std::size_t v1 = 0; v1 < t.phase1; ++v1) acc += std::pow(std::abs(t.at(v1, v2)), p.value());
      acc = std::pow(t.weight1 * acc, 1.0 / p.value());
    }
    inner[v2] = acc;
  });

  if (q.is_infinite()) return *std::max_element(inner.begin(), inner.end());
  double outer = 0.0;
  for (double v : inner) outer += std::pow(v, q.value());
  return std::pow(t.weight2 * outer, 1.0 / q.value());
}

double empirical_mpq_opnorm(const KernelOperator& T, const Signal& g1, const Signal& g2, Exponent p, Exponent q,
                            const std::vector<Signal>& probes) {
  const Exponent pc = p.conjugate();
  double best = 0.0;
  for (const Signal& s : probes) {
    if (s.is_zero()) continue;
    const double den = mp_norm(s, g1, pc);
    if (den > 0.0) best = std::max(best, mp_norm(apply(T, s), g2, q) / den);
  }
  return best;
}

double mpq_bound(const KernelOperator& T, const Signal& g1, const Signal& g2, Exponent p, Exponent q) {
  if (g1.is_zero()) throw ZeroWindow("mpq_bound needs a nonzero window");
  const double n = g1.norm2();
  return mixed_norm_condition(T, g1.conj(), g2, p, q) / (n * n);
}

std::vector<Signal> mpq_probes(const Signal& g, std::size_t count, Rng& rng) {
  std::vector<Signal> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    PhaseTable c = zero_table(g.group());
    for (cplx& v : c.values) v = rng.complex_normal();
    out.push_back(stft_invert(g, c));
  }
  return out;
}

}  // namespace tfkit
