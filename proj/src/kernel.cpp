#include "tfkit/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "tfkit/errors.hpp"
#include "tfkit/linalg.hpp"

namespace tfkit {

KernelOperator::KernelOperator(GroupSpec domain, GroupSpec codomain, Signal kernel)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), kernel_(std::move(kernel)) {
  require_same_group(kernel_.group(), product(domain_, codomain_), "kernel operator");
}

KernelOperator::KernelOperator(GroupSpec domain, GroupSpec codomain, std::vector<cplx> kernel_values)
    : KernelOperator(domain, codomain, Signal(product(domain, codomain), std::move(kernel_values))) {}

KernelOperator KernelOperator::scaled(cplx c) const { return KernelOperator(domain_, codomain_, kernel_.scaled(c)); }

KernelOperator operator+(const KernelOperator& a, const KernelOperator& b) {
  return KernelOperator(a.domain(), a.codomain(), a.kernel() + b.kernel());
}

KernelOperator operator-(const KernelOperator& a, const KernelOperator& b) {
  return KernelOperator(a.domain(), a.codomain(), a.kernel() - b.kernel());
}

KernelOperator zero_operator(const GroupSpec& g1, const GroupSpec& g2) {
  return KernelOperator(g1, g2, Signal(product(g1, g2)));
}

KernelOperator identity_operator(const GroupSpec& g) {
  const std::size_t n = g.size();
  std::vector<cplx> k(n * n);
  for (std::size_t x = 0; x < n; ++x) k[x * n + x] = 1.0 / g.haar_weight();
  return KernelOperator(g, g, std::move(k));
}

KernelOperator random_operator(const GroupSpec& g1, const GroupSpec& g2, Rng& rng) {
  return KernelOperator(g1, g2, random_signal(product(g1, g2), rng));
}

KernelOperator fourier_operator(const GroupSpec& g) {
  const std::size_t n = g.size();
  std::vector<cplx> k(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t w = 0; w < n; ++w) k[x * n + w] = std::conj(g.character(w, x));
  }
  return KernelOperator(g, g.dual(), std::move(k));
}

KernelOperator inverse_fourier_operator(const GroupSpec& g) {
  const std::size_t n = g.size();
  std::vector<cplx> k(n * n);
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t x = 0; x < n; ++x) k[w * n + x] = g.character(w, x);
  }
  return KernelOperator(g.dual(), g, std::move(k));
}

Signal apply(const KernelOperator& T, const Signal& s) {
  require_same_group(s.group(), T.domain(), "apply");
  const std::size_t n1 = T.domain().size();
  const std::size_t n2 = T.codomain().size();
  std::vector<cplx> out(n2);
  for (std::size_t x = 0; x < n1; ++x) {
    const cplx sx = s[x];
    if (sx == cplx{0.0, 0.0}) continue;
    for (std::size_t y = 0; y < n2; ++y) out[y] += T.at(x, y) * sx;
  }
  const double w = T.domain().haar_weight();
  for (auto& v : out) v *= w;
  return Signal(T.codomain(), std::move(out));
}

cplx bilinear_form(const KernelOperator& T, const Signal& s1, const Signal& s2) {
  return pair_bilinear(T.kernel(), tensor(s1, s2));
}

KernelOperator transpose(const KernelOperator& T) {
  const std::size_t n1 = T.domain().size();
  const std::size_t n2 = T.codomain().size();
  std::vector<cplx> k(n1 * n2);
  for (std::size_t x = 0; x < n1; ++x) {
    for (std::size_t y = 0; y < n2; ++y) k[y * n1 + x] = T.at(x, y);
  }
  return KernelOperator(T.codomain(), T.domain(), std::move(k));
}

KernelOperator adjoint(const KernelOperator& T) {
  const KernelOperator S = transpose(T);
  return KernelOperator(S.domain(), S.codomain(), S.kernel().conj());
}

KernelOperator kernel_from_operator(const LinearMap& probe, const GroupSpec& domain, const GroupSpec& codomain) {
  const std::size_t n1 = domain.size();
  const std::size_t n2 = codomain.size();
  std::vector<cplx> k(n1 * n2);
  for (std::size_t x = 0; x < n1; ++x) {
    const Signal column = probe(dirac_index(domain, x));
    if (!(column.group() == codomain)) {
      throw DomainError("probe returned a signal on " + column.group().label() + ", expected " + codomain.label());
    }
    for (std::size_t y = 0; y < n2; ++y) k[x * n2 + y] = column[y];
  }
  return KernelOperator(domain, codomain, std::move(k));
}

KernelOperator compose(const KernelOperator& T1, const KernelOperator& T2) {
  require_same_group(T1.codomain(), T2.domain(), "compose");
  const std::size_t n1 = T1.domain().size();
  const std::size_t n2 = T1.codomain().size();
  const std::size_t n3 = T2.codomain().size();
  const double w = T1.codomain().haar_weight();
  std::vector<cplx> k(n1 * n3);
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    cplx* row = k.data() + x1 * n3;
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      const cplx a = T1.at(x1, x2);
      for (std::size_t x3 = 0; x3 < n3; ++x3) row[x3] += a * T2.at(x2, x3);
    }
    for (std::size_t x3 = 0; x3 < n3; ++x3) row[x3] *= w;
  }
  return KernelOperator(T1.domain(), T2.codomain(), std::move(k));
}

cplx trace(const KernelOperator& T) {
  if (!T.is_square()) throw DomainError("trace of a non-square operator");
  cplx acc{0.0, 0.0};
  for (std::size_t x = 0; x < T.domain().size(); ++x) acc += T.at(x, x);
  return T.domain().haar_weight() * acc;
}

KernelOperator rank_one(const Signal& f1, const Signal& f2) {
  return KernelOperator(f1.group(), f2.group(), tensor(f1, f2));
}

double max_kernel_diff(const KernelOperator& a, const KernelOperator& b) {
  return max_abs_diff(a.kernel(), b.kernel());
}

namespace {

KernelPairingTable pairing_table(const KernelOperator& T, const Signal& g1, const Signal& g2, bool conjugated) {
  require_same_group(g1.group(), T.domain(), "kernel pairing window 1");
  require_same_group(g2.group(), T.codomain(), "kernel pairing window 2");
  if (g1.is_zero() || g2.is_zero()) throw ZeroWindow("kernel pairing needs nonzero windows");
  KernelPairingTable out;
  out.phase1 = T.domain().size() * T.domain().size();
  out.phase2 = T.codomain().size() * T.codomain().size();
  out.weight1 = phase_weight(T.domain());
  out.weight2 = phase_weight(T.codomain());
  out.values.resize(out.phase1 * out.phase2);
  for (std::size_t v1 = 0; v1 < out.phase1; ++v1) {
    const Signal image = apply(T, tf_shift_index(g1, v1));
    const PhaseTable row = conjugated ? stft(g2, image) : tf_pairing(g2, image);
    std::copy(row.values.begin(), row.values.end(), out.values.begin() + static_cast<std::ptrdiff_t>(v1 * out.phase2));
  }
  return out;
}

}  // namespace

KernelPairingTable kernel_pairing_table(const KernelOperator& T, const Signal& g1, const Signal& g2) {
  return pairing_table(T, g1, g2, false);
}

double b_norm(const KernelOperator& T, const Signal& g1, const Signal& g2) {
  const KernelPairingTable t = kernel_pairing_table(T, g1, g2);
  double s = 0.0;
  for (const cplx& v : t.values) s += std::abs(v);
  return t.weight1 * t.weight2 * s;
}

double b_norm_conjugated(const KernelOperator& T, const Signal& g1, const Signal& g2) {
  const KernelPairingTable t = pairing_table(T, g1, g2, true);
  double s = 0.0;
  for (const cplx& v : t.values) s += std::abs(v);
  return t.weight1 * t.weight2 * s;
}

double bprime_norm(const KernelOperator& T, const Signal& g1, const Signal& g2) {
  const KernelPairingTable t = kernel_pairing_table(T, g1, g2);
  double m = 0.0;
  for (const cplx& v : t.values) m = std::max(m, std::abs(v));
  return m;
}

TensorExpansion tensor_expand(const KernelOperator& T, double tol) {
  if (!(tol > 0.0)) throw DomainError("tensor_expand tolerance must be positive");
  const std::size_t n1 = T.domain().size();
  const std::size_t n2 = T.codomain().size();
  Matrix K(static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(n2));
  for (std::size_t x = 0; x < n1; ++x) {
    for (std::size_t y = 0; y < n2; ++y) K(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = T.at(x, y);
  }
  Eigen::JacobiSVD<Matrix> svd(K, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const auto total = static_cast<std::size_t>(sv.size());

  // tail[r] = Frobenius norm of the terms r, r+1, ...
  std::vector<double> tail(total + 1, 0.0);
  for (std::size_t r = total; r-- > 0;) tail[r] = std::hypot(tail[r + 1], sv(static_cast<Eigen::Index>(r)));
  std::size_t keep = 0;
  while (keep < total && tail[keep] > tol) ++keep;

  TensorExpansion e{T.domain(), T.codomain(), {}, std::vector<double>(sv.data(), sv.data() + sv.size()), tail[keep]};
  for (std::size_t j = 0; j < keep; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    const double root = std::sqrt(sv(jj));
    std::vector<cplx> f1(n1), f2(n2);
    for (std::size_t x = 0; x < n1; ++x) f1[x] = root * svd.matrixU()(static_cast<Eigen::Index>(x), jj);
    for (std::size_t y = 0; y < n2; ++y) f2[y] = root * std::conj(svd.matrixV()(static_cast<Eigen::Index>(y), jj));
    e.pairs.emplace_back(Signal(T.domain(), std::move(f1)), Signal(T.codomain(), std::move(f2)));
  }
  return e;
}

KernelOperator reconstruct(const TensorExpansion& e) {
  KernelOperator sum = zero_operator(e.domain, e.codomain);
  for (const auto& [f1, f2] : e.pairs) sum = sum + rank_one(f1, f2);
  return sum;
}

double projective_norm(const TensorExpansion& e, const Signal& g1, const Signal& g2) {
  double s = 0.0;
  for (const auto& [f1, f2] : e.pairs) s += m1_norm(f1, g1) * m1_norm(f2, g2);
  return s;
}

Signal weak_reconstruct(const KernelOperator& T, const Signal& g, const Signal& s) {
  require_same_group(g.group(), T.domain(), "weak_reconstruct");
  if (g.is_zero()) throw ZeroWindow("weak_reconstruct needs a nonzero window");
  const PhaseTable V = stft(g, s);
  const double scale = V.weight / (g.norm2() * g.norm2());
  std::vector<cplx> out(T.codomain().size());
  for (std::size_t v = 0; v < V.size(); ++v) {
    if (V.values[v] == cplx{0.0, 0.0}) continue;
    const Signal image = apply(T, tf_shift_index(g, v));
    const cplx c = scale * V.values[v];
    for (std::size_t y = 0; y < out.size(); ++y) out[y] += c * image[y];
  }
  return Signal(T.codomain(), std::move(out));
}

}  // namespace tfkit
