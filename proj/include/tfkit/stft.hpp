#pragma once

#include <limits>
#include <vector>

#include "tfkit/group.hpp"
#include "tfkit/signal.hpp"

namespace tfkit {

/// Function on the phase space G x G^ of a base group, stored time-major
/// (index = x * |G| + w), with the phase-space per-point weight.
struct PhaseTable {
  GroupSpec group;  // base group G
  std::vector<cplx> values;
  double weight = 0.0;

  cplx at(std::size_t x, std::size_t w) const { return values[x * group.size() + w]; }
  std::size_t size() const { return values.size(); }
};

PhaseTable zero_table(const GroupSpec& g);

/// Exponent p in [1, inf]. Infinity is a separate flag so that the
/// sup-norm branches never rely on IEEE infinity arithmetic.
class Exponent {
 public:
  /// Throws DomainError for p < 1 or NaN.
  explicit Exponent(double p);
  static Exponent infinity() { return Exponent(); }

  bool is_infinite() const { return infinite_; }
  double value() const { return infinite_ ? std::numeric_limits<double>::infinity() : p_; }
  /// 1/p + 1/p' = 1
  Exponent conjugate() const;
  std::string label() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent() : p_(0.0), infinite_(true) {}
  double p_;
  bool infinite_;
};

/// V_g s(v) = (conj(pi(v) g), s) = <s, pi(v) g>
PhaseTable stft(const Signal& g, const Signal& s);
/// Same table from the O(N^3) triple sum.
PhaseTable stft_reference(const Signal& g, const Signal& s);

/// (pi(v) g, s): the unconjugated pairing used by the modulation-space norms.
PhaseTable tf_pairing(const Signal& g, const Signal& s);

/// f = |g|_2^{-2} sum_v weight V(v) pi(v) g. Throws ZeroWindow for g = 0.
Signal stft_invert(const Signal& g, const PhaseTable& V);

/// Weighted L^p norm of a phase-space table.
double table_norm(const PhaseTable& t, Exponent p);

/// sum_w dual_weight | (E_w f) * g |_1. Throws ZeroWindow for g = 0.
double s0_norm_conv(const Signal& f, const Signal& g);

/// (sum_v weight |(pi(v) g, s)|^p)^(1/p), sup at p = inf.
double mp_norm(const Signal& s, const Signal& g, Exponent p);
double m1_norm(const Signal& s, const Signal& g);
double minf_norm(const Signal& s, const Signal& g);
/// Variant with the conjugated window pairing <s, pi(v) g>.
double mp_norm_conjugated(const Signal& s, const Signal& g, Exponent p);

struct RatioRange {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t skipped = 0;  // zero probes
};

/// Range of m1_norm(f, g1) / m1_norm(f, g2) over the nonzero probes.
RatioRange window_equivalence_ratio(const Signal& g1, const Signal& g2, const std::vector<Signal>& probes);

}  // namespace tfkit
