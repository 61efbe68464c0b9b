#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tfkit/group.hpp"
#include "tfkit/signal.hpp"
#include "tfkit/stft.hpp"

namespace tfkit {

/// Operator G1 -> G2 held as its kernel K on G1 x G2 (index x * |G2| + y).
///
/// No Haar weight is folded into K; weights enter when the operator acts:
///   (T s)(y) = sum_x haar_weight(G1) K(x, y) s(x).
/// With that convention K(x, y) = (T dirac_x)(y) holds literally.
class KernelOperator {
 public:
  /// Throws DomainError unless kernel lives on product(domain, codomain).
  KernelOperator(GroupSpec domain, GroupSpec codomain, Signal kernel);
  KernelOperator(GroupSpec domain, GroupSpec codomain, std::vector<cplx> kernel_values);

  const GroupSpec& domain() const { return domain_; }
  const GroupSpec& codomain() const { return codomain_; }
  const Signal& kernel() const { return kernel_; }
  cplx at(std::size_t x, std::size_t y) const { return kernel_[x * codomain_.size() + y]; }
  bool is_square() const { return domain_ == codomain_; }

  KernelOperator scaled(cplx c) const;
  friend KernelOperator operator+(const KernelOperator& a, const KernelOperator& b);
  friend KernelOperator operator-(const KernelOperator& a, const KernelOperator& b);
  friend KernelOperator operator*(cplx c, const KernelOperator& a) { return a.scaled(c); }

 private:
  GroupSpec domain_;
  GroupSpec codomain_;
  Signal kernel_;
};

using LinearMap = std::function<Signal(const Signal&)>;

KernelOperator zero_operator(const GroupSpec& g1, const GroupSpec& g2);
/// K(x, y) = [x == y] / haar_weight
KernelOperator identity_operator(const GroupSpec& g);
KernelOperator random_operator(const GroupSpec& g1, const GroupSpec& g2, Rng& rng);
/// Fourier transform G -> G^, K(x, w) = conj(w(x)).
KernelOperator fourier_operator(const GroupSpec& g);
/// Inverse transform G^ -> G, K(w, x) = w(x). `g` is the base group G.
KernelOperator inverse_fourier_operator(const GroupSpec& g);

Signal apply(const KernelOperator& T, const Signal& s);

/// (K, s1 (x) s2) on G1 x G2.
cplx bilinear_form(const KernelOperator& T, const Signal& s1, const Signal& s2);

/// Argument swap S: G2 -> G1 with K_S(y, x) = K(x, y). Not the adjoint.
KernelOperator transpose(const KernelOperator& T);
/// L2 adjoint, K*(y, x) = conj(K(x, y)).
KernelOperator adjoint(const KernelOperator& T);

/// Kernel of a black-box linear map by probing with Dirac functionals:
/// K(x, y) = (probe(dirac_x))(y). Throws DomainError when a probe result
/// does not live on `codomain`.
KernelOperator kernel_from_operator(const LinearMap& probe, const GroupSpec& domain, const GroupSpec& codomain);

/// First T1 (G1 -> G2), then T2 (G2 -> G3):
///   K(x1, x3) = sum_x2 haar_weight(G2) K1(x1, x2) K2(x2, x3).
KernelOperator compose(const KernelOperator& T1, const KernelOperator& T2);

/// sum_x haar_weight K(x, x). Throws DomainError for a non-square operator.
cplx trace(const KernelOperator& T);

/// s -> (f1, s) f2, kernel f1 (x) f2.
KernelOperator rank_one(const Signal& f1, const Signal& f2);

double max_kernel_diff(const KernelOperator& a, const KernelOperator& b);

/// Values (pi(v2) g2, T pi(v1) g1) for every pair of phase points, stored
/// at v1 * |phase(G2)| + v2, plus the two phase-space weights.
struct KernelPairingTable {
  std::size_t phase1 = 0;  // |G1|^2
  std::size_t phase2 = 0;  // |G2|^2
  double weight1 = 0.0;
  double weight2 = 0.0;
  std::vector<cplx> values;

  cplx at(std::size_t v1, std::size_t v2) const { return values[v1 * phase2 + v2]; }
};

/// Built operator-side: apply T to every atom pi(v1) g1, then analyse the
/// result against g2 with one FFT per time slice.
KernelPairingTable kernel_pairing_table(const KernelOperator& T, const Signal& g1, const Signal& g2);

/// Double phase-space L1 norm of the pairing table.
double b_norm(const KernelOperator& T, const Signal& g1, const Signal& g2);
/// Same integrand with the sesquilinear pairing <T pi(v1) g1, pi(v2) g2>.
double b_norm_conjugated(const KernelOperator& T, const Signal& g1, const Signal& g2);
/// Sup of the pairing table.
double bprime_norm(const KernelOperator& T, const Signal& g1, const Signal& g2);

struct TensorExpansion {
  GroupSpec domain;
  GroupSpec codomain;
  std::vector<std::pair<Signal, Signal>> pairs;  // kernel ~ sum_j f1_j (x) f2_j
  std::vector<double> singular_values;            // all of them, descending
  double tail = 0.0;                              // Frobenius norm of the dropped part
};

/// Truncated singular value expansion of the kernel. Keeps the fewest
/// leading terms whose dropped tail has Frobenius norm <= tol, so the
/// max-norm reconstruction error is <= tol. Throws DomainError for tol <= 0.
TensorExpansion tensor_expand(const KernelOperator& T, double tol);
KernelOperator reconstruct(const TensorExpansion& e);
/// sum_j |f1_j|_{M1,g1} |f2_j|_{M1,g2}
double projective_norm(const TensorExpansion& e, const Signal& g1, const Signal& g2);

/// T s = |g|^{-2} sum_v weight V_g s(v) T(pi(v) g), evaluated atom by atom.
Signal weak_reconstruct(const KernelOperator& T, const Signal& g, const Signal& s);

}  // namespace tfkit
