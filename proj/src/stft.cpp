#include "tfkit/stft.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tfkit/errors.hpp"
#include "tfkit/fft.hpp"

namespace tfkit {

namespace {

void require_window(const Signal& g) {
  if (g.is_zero()) throw ZeroWindow("window must be nonzero");
}

// Row x of the table is weight_G * DFT_sign( s(t) * window_x(t) ), with
// window_x(t) = g(t - x) or its conjugate.
PhaseTable windowed_transform(const Signal& g, const Signal& s, bool conjugate_window, int sign) {
  require_same_group(g.group(), s.group(), "stft");
  const GroupSpec& G = g.group();
  const std::size_t n = G.size();
  PhaseTable out{G, std::vector<cplx>(n * n), phase_weight(G)};
  std::vector<cplx> row(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t t = 0; t < n; ++t) {
      const cplx w = g[G.sub_index(t, x)];
      row[t] = s[t] * (conjugate_window ? std::conj(w) : w);
    }
    dft_inplace(row, G.orders(), sign);
    for (std::size_t k = 0; k < n; ++k) out.values[x * n + k] = G.haar_weight() * row[k];
  }
  return out;
}

}  // namespace

PhaseTable zero_table(const GroupSpec& g) {
  return PhaseTable{g, std::vector<cplx>(g.size() * g.size()), phase_weight(g)};
}

Exponent::Exponent(double p) : p_(p), infinite_(false) {
  if (std::isnan(p) || p < 1.0) throw DomainError("exponent must lie in [1, inf]");
  if (std::isinf(p)) infinite_ = true;
}

Exponent Exponent::conjugate() const {
  if (infinite_) return Exponent(1.0);
  if (p_ == 1.0) return Exponent::infinity();
  return Exponent(p_ / (p_ - 1.0));
}

std::string Exponent::label() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << p_;
  return os.str();
}

PhaseTable stft(const Signal& g, const Signal& s) { return windowed_transform(g, s, true, -1); }

PhaseTable stft_reference(const Signal& g, const Signal& s) {
  require_same_group(g.group(), s.group(), "stft_reference");
  const GroupSpec& G = g.group();
  const std::size_t n = G.size();
  PhaseTable out = zero_table(G);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t w = 0; w < n; ++w) {
      cplx acc{0.0, 0.0};
      for (std::size_t t = 0; t < n; ++t) {
        const cplx shifted = G.character(w, t) * g[G.sub_index(t, x)];
        acc += s[t] * std::conj(shifted);
      }
      out.values[x * n + w] = G.haar_weight() * acc;
    }
  }
  return out;
}

PhaseTable tf_pairing(const Signal& g, const Signal& s) { return windowed_transform(g, s, false, +1); }

Signal stft_invert(const Signal& g, const PhaseTable& V) {
  require_window(g);
  require_same_group(g.group(), V.group, "stft_invert");
  const GroupSpec& G = g.group();
  const std::size_t n = G.size();
  const double g2 = g.norm2() * g.norm2();
  std::vector<cplx> out(n), row(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::copy(V.values.begin() + static_cast<std::ptrdiff_t>(x * n),
              V.values.begin() + static_cast<std::ptrdiff_t>((x + 1) * n), row.begin());
    // row(t) = sum_w V(x, w) w(t)
    dft_inplace(row, G.orders(), +1);
    for (std::size_t t = 0; t < n; ++t) out[t] += g[G.sub_index(t, x)] * row[t];
  }
  for (auto& v : out) v *= V.weight / g2;
  return Signal(G, std::move(out));
}

double table_norm(const PhaseTable& t, Exponent p) {
  if (p.is_infinite()) {
    double m = 0.0;
    for (const cplx& v : t.values) m = std::max(m, std::abs(v));
    return m;
  }
  const double e = p.value();
  double s = 0.0;
  for (const cplx& v : t.values) s += std::pow(std::abs(v), e);
  return std::pow(t.weight * s, 1.0 / e);
}

double s0_norm_conv(const Signal& f, const Signal& g) {
  require_window(g);
  require_same_group(f.group(), g.group(), "s0_norm_conv");
  const GroupSpec& G = f.group();
  double total = 0.0;
  for (std::size_t w = 0; w < G.size(); ++w) total += convolve(modulate_index(f, w), g).norm1();
  return G.dual_haar_weight() * total;
}

double mp_norm(const Signal& s, const Signal& g, Exponent p) {
  require_window(g);
  return table_norm(tf_pairing(g, s), p);
}

double m1_norm(const Signal& s, const Signal& g) { return mp_norm(s, g, Exponent(1.0)); }

double minf_norm(const Signal& s, const Signal& g) { return mp_norm(s, g, Exponent::infinity()); }

double mp_norm_conjugated(const Signal& s, const Signal& g, Exponent p) {
  require_window(g);
  return table_norm(stft(g, s), p);
}

RatioRange window_equivalence_ratio(const Signal& g1, const Signal& g2, const std::vector<Signal>& probes) {
  require_window(g1);
  require_window(g2);
  RatioRange r{std::numeric_limits<double>::infinity(), 0.0, 0};
  bool any = false;
  for (const Signal& f : probes) {
    if (f.is_zero()) {
      ++r.skipped;
      continue;
    }
    const double ratio = m1_norm(f, g1) / m1_norm(f, g2);
    r.lo = std::min(r.lo, ratio);
    r.hi = std::max(r.hi, ratio);
    any = true;
  }
  if (!any) throw DomainError("window_equivalence_ratio needs at least one nonzero probe");
  return r;
}

}  // namespace tfkit
