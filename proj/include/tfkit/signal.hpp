#pragma once

#include <span>
#include <vector>

#include "tfkit/group.hpp"
#include "tfkit/random.hpp"

namespace tfkit {

/// Complex-valued function on a finite group, stored in the group's
/// enumeration order. At finite scale the same array also acts as a
/// functional through pair_bilinear, so there is no separate
/// distribution type.
class Signal {
 public:
  explicit Signal(GroupSpec group);  // zero signal
  /// Throws DomainError on a length mismatch or a non-finite entry.
  Signal(GroupSpec group, std::vector<cplx> values);

  const GroupSpec& group() const { return group_; }
  std::size_t size() const { return values_.size(); }
  std::span<const cplx> values() const { return values_; }
  cplx operator[](std::size_t i) const { return values_[i]; }
  cplx at(const GroupElement& x) const { return values_[group_.index_of(x)]; }

  Signal conj() const;
  Signal scaled(cplx c) const;

  /// (sum_x haar_weight |f(x)|^p)^(1/p)
  double norm1() const;
  double norm2() const;
  double norm_inf() const;
  bool is_zero() const;

  friend Signal operator+(const Signal& a, const Signal& b);
  friend Signal operator-(const Signal& a, const Signal& b);
  friend Signal operator*(cplx c, const Signal& a) { return a.scaled(c); }
  friend Signal operator*(const Signal& a, cplx c) { return a.scaled(c); }

 private:
  GroupSpec group_;
  std::vector<cplx> values_;
};

/// Throws DomainError unless both signals live on the same group.
void require_same_group(const GroupSpec& a, const GroupSpec& b, const char* what);

// Constructors used throughout the suites.
Signal constant(const GroupSpec& g, cplx c);
/// Dirac functional at x: pair_bilinear(dirac(g, x), h) == h(x), so the
/// stored value at x is 1 / haar_weight.
Signal dirac(const GroupSpec& g, const GroupElement& x);
Signal dirac_index(const GroupSpec& g, std::size_t x);
/// Plain indicator of one point (value 1).
Signal unit_vector(const GroupSpec& g, std::size_t x);
/// Periodized Gaussian prod_j sum_k exp(-pi (x_j + k n_j)^2 / spread^2).
Signal gauss(const GroupSpec& g, double spread);
/// Entries with independent standard complex normal parts.
Signal random_signal(const GroupSpec& g, Rng& rng);
Signal random_real_signal(const GroupSpec& g, Rng& rng);

// Time-frequency operations.
Signal translate(const Signal& f, const GroupElement& x);
Signal translate_index(const Signal& f, std::size_t x);
Signal modulate(const Signal& f, const GroupElement& w);
Signal modulate_index(const Signal& f, std::size_t w);
/// pi(x, w) f = E_w T_x f
Signal tf_shift(const Signal& f, const PhasePoint& v);
/// tf_shift with v given as a phase-space index.
Signal tf_shift_index(const Signal& f, std::size_t v);

/// f^(w) = sum_x haar_weight f(x) conj(w(x)); the result lives on the dual group.
Signal fourier(const Signal& f);
/// f(x) = sum_w dual_weight F(w) w(x); F must live on a dual group.
Signal inv_fourier(const Signal& F);
/// Direct O(N^2) evaluation of the forward transform.
Signal fourier_reference(const Signal& f);

/// (f * g)(x) = sum_y haar_weight f(y) g(x - y)
Signal convolve(const Signal& f, const Signal& g);
Signal pointwise(const Signal& f, const Signal& g);
/// g(t) -> g(-t)
Signal involute(const Signal& g);

/// (f, s) = sum_x haar_weight f(x) s(x), no conjugation.
cplx pair_bilinear(const Signal& f, const Signal& s);
/// <f, g> = sum_x haar_weight f(x) conj(g(x))
cplx inner(const Signal& f, const Signal& g);

/// (f1 (x) f2)(x1, x2) = f1(x1) f2(x2) on product(G1, G2).
Signal tensor(const Signal& f1, const Signal& f2);

/// max_x |a(x) - b(x)|
double max_abs_diff(const Signal& a, const Signal& b);

}  // namespace tfkit
