#include "tfkit/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tfkit/errors.hpp"
#include "tfkit/fft.hpp"

namespace tfkit {

Signal::Signal(GroupSpec group) : group_(std::move(group)), values_(group_.size(), cplx{0.0, 0.0}) {}

Signal::Signal(GroupSpec group, std::vector<cplx> values) : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.size()) {
    throw DomainError("signal length " + std::to_string(values_.size()) + " does not match |G| = " +
                      std::to_string(group_.size()));
  }
  for (const cplx& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("signal has a non-finite entry");
  }
}

Signal Signal::conj() const {
  std::vector<cplx> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [](cplx v) { return std::conj(v); });
  return Signal(group_, std::move(out));
}

Signal Signal::scaled(cplx c) const {
  std::vector<cplx> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [c](cplx v) { return c * v; });
  return Signal(group_, std::move(out));
}

double Signal::norm1() const {
  double s = 0.0;
  for (const cplx& v : values_) s += std::abs(v);
  return group_.haar_weight() * s;
}

double Signal::norm2() const {
  double s = 0.0;
  for (const cplx& v : values_) s += std::norm(v);
  return std::sqrt(group_.haar_weight() * s);
}

double Signal::norm_inf() const {
  double m = 0.0;
  for (const cplx& v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool Signal::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](cplx v) { return v == cplx{0.0, 0.0}; });
}

Signal operator+(const Signal& a, const Signal& b) {
  require_same_group(a.group(), b.group(), "signal sum");
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return Signal(a.group(), std::move(out));
}

Signal operator-(const Signal& a, const Signal& b) {
  require_same_group(a.group(), b.group(), "signal difference");
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return Signal(a.group(), std::move(out));
}

void require_same_group(const GroupSpec& a, const GroupSpec& b, const char* what) {
  if (!(a == b)) throw DomainError(std::string(what) + ": group mismatch (" + a.label() + " vs " + b.label() + ")");
}

Signal constant(const GroupSpec& g, cplx c) { return Signal(g, std::vector<cplx>(g.size(), c)); }

Signal dirac(const GroupSpec& g, const GroupElement& x) { return dirac_index(g, g.index_of(x)); }

Signal dirac_index(const GroupSpec& g, std::size_t x) {
  std::vector<cplx> v(g.size());
  v.at(x) = 1.0 / g.haar_weight();
  return Signal(g, std::move(v));
}

Signal unit_vector(const GroupSpec& g, std::size_t x) {
  std::vector<cplx> v(g.size());
  v.at(x) = 1.0;
  return Signal(g, std::move(v));
}

Signal gauss(const GroupSpec& g, double spread) {
  if (!(spread > 0.0)) throw DomainError("Gaussian spread must be positive");
  std::vector<cplx> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const GroupElement x = g.element(i);
    double value = 1.0;
    for (std::size_t j = 0; j < g.rank(); ++j) {
      const double n = g.orders()[j];
      double s = 0.0;
      for (int k = -4; k <= 4; ++k) {
        const double d = x.coords[j] + k * n;
        s += std::exp(-std::numbers::pi * d * d / (spread * spread));
      }
      value *= s;
    }
    v[i] = value;
  }
  return Signal(g, std::move(v));
}

Signal random_signal(const GroupSpec& g, Rng& rng) {
  std::vector<cplx> v(g.size());
  for (auto& e : v) e = rng.complex_normal();
  return Signal(g, std::move(v));
}

Signal random_real_signal(const GroupSpec& g, Rng& rng) {
  std::vector<cplx> v(g.size());
  for (auto& e : v) e = rng.normal();
  return Signal(g, std::move(v));
}

Signal translate(const Signal& f, const GroupElement& x) { return translate_index(f, f.group().index_of(x)); }

Signal translate_index(const Signal& f, std::size_t x) {
  const GroupSpec& g = f.group();
  std::vector<cplx> out(g.size());
  for (std::size_t t = 0; t < g.size(); ++t) out[t] = f[g.sub_index(t, x)];
  return Signal(g, std::move(out));
}

Signal modulate(const Signal& f, const GroupElement& w) { return modulate_index(f, f.group().index_of(w)); }

Signal modulate_index(const Signal& f, std::size_t w) {
  const GroupSpec& g = f.group();
  std::vector<cplx> out(g.size());
  for (std::size_t t = 0; t < g.size(); ++t) out[t] = g.character(w, t) * f[t];
  return Signal(g, std::move(out));
}

Signal tf_shift(const Signal& f, const PhasePoint& v) {
  const GroupSpec& g = f.group();
  return modulate_index(translate_index(f, g.index_of(v.x)), g.index_of(v.w));
}

Signal tf_shift_index(const Signal& f, std::size_t v) {
  const std::size_t n = f.group().size();
  if (v >= n * n) throw DomainError("phase-space index out of range");
  return modulate_index(translate_index(f, v / n), v % n);
}

Signal fourier(const Signal& f) {
  std::vector<cplx> data(f.values().begin(), f.values().end());
  dft_inplace(data, f.group().orders(), -1);
  const double w = f.group().haar_weight();
  for (auto& v : data) v *= w;
  return Signal(f.group().dual(), std::move(data));
}

Signal inv_fourier(const Signal& F) {
  std::vector<cplx> data(F.values().begin(), F.values().end());
  dft_inplace(data, F.group().orders(), +1);
  const double w = F.group().haar_weight();
  for (auto& v : data) v *= w;
  return Signal(F.group().dual(), std::move(data));
}

Signal fourier_reference(const Signal& f) {
  auto data = dft_reference(f.values(), f.group().orders(), -1);
  for (auto& v : data) v *= f.group().haar_weight();
  return Signal(f.group().dual(), std::move(data));
}

Signal convolve(const Signal& f, const Signal& g) {
  require_same_group(f.group(), g.group(), "convolve");
  const GroupSpec& G = f.group();
  std::vector<cplx> out(G.size());
  for (std::size_t x = 0; x < G.size(); ++x) {
    cplx acc{0.0, 0.0};
    for (std::size_t y = 0; y < G.size(); ++y) acc += f[y] * g[G.sub_index(x, y)];
    out[x] = G.haar_weight() * acc;
  }
  return Signal(G, std::move(out));
}

Signal pointwise(const Signal& f, const Signal& g) {
  require_same_group(f.group(), g.group(), "pointwise");
  std::vector<cplx> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] * g[i];
  return Signal(f.group(), std::move(out));
}

Signal involute(const Signal& g) {
  const GroupSpec& G = g.group();
  std::vector<cplx> out(G.size());
  for (std::size_t t = 0; t < G.size(); ++t) out[t] = g[G.neg_index(t)];
  return Signal(G, std::move(out));
}

cplx pair_bilinear(const Signal& f, const Signal& s) {
  require_same_group(f.group(), s.group(), "pair_bilinear");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * s[i];
  return f.group().haar_weight() * acc;
}

cplx inner(const Signal& f, const Signal& g) {
  require_same_group(f.group(), g.group(), "inner");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * std::conj(g[i]);
  return f.group().haar_weight() * acc;
}

Signal tensor(const Signal& f1, const Signal& f2) {
  const GroupSpec g = product(f1.group(), f2.group());
  std::vector<cplx> out(g.size());
  const std::size_t n2 = f2.size();
  for (std::size_t a = 0; a < f1.size(); ++a) {
    for (std::size_t b = 0; b < n2; ++b) out[a * n2 + b] = f1[a] * f2[b];
  }
  return Signal(g, std::move(out));
}

double max_abs_diff(const Signal& a, const Signal& b) {
  require_same_group(a.group(), b.group(), "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace tfkit
