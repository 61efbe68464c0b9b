#include <gtest/gtest.h>

#include "tfkit/errors.hpp"
#include "tfkit/operator_expansion.hpp"
#include "oracles.hpp"

using namespace tfkit;

TEST(OperatorExpansion, ShiftOperators) {
  const GroupSpec g = make_group({3, 2});
  Rng rng(1);
  const Signal f = random_signal(g, rng);
  for (std::size_t v = 0; v < 36; v += 5) {
    const PhasePoint p = phase_point(g, v);
    EXPECT_LT(max_abs_diff(apply(tf_shift_operator(g, p), f), tf_shift(f, p)), 1e-13);
    const Signal expect = modulate(translate(f, g.neg(p.x)), p.w);
    EXPECT_LT(max_abs_diff(apply(domain_shift_operator(g, p), f), expect), 1e-13);
  }
}

TEST(OperatorExpansion, ReconstructsRandomOperator) {
  const GroupSpec g1 = make_group({4}), g2 = make_group({3});
  Rng rng(2);
  const KernelOperator T0 = random_operator(g1, g2, rng);
  const PhaseSubgroup L1 = make_lattice(g1, {2}, {1}), L2 = full_lattice(g2);
  for (int k = 0; k < 3; ++k) {
    const KernelOperator T = random_operator(g1, g2, rng);
    const OperatorExpansion e = atomic_operator_expand(T, T0, L1, L2);
    EXPECT_EQ(e.atoms.size(), L1.size() * L2.size());
    EXPECT_TRUE(e.bounds.is_frame);
    EXPECT_LT(max_kernel_diff(synthesize_operator(e, T0), T), 1e-8);
    double l1 = 0.0;
    for (const OperatorAtom& a : e.atoms) {
      l1 += std::abs(a.operator_coefficient);
      EXPECT_NEAR(std::abs(a.operator_coefficient), std::abs(a.kernel_coefficient), 1e-14);
      EXPECT_TRUE(L1.contains(a.domain_point));
      EXPECT_TRUE(L2.contains(a.codomain_point));
    }
    EXPECT_NEAR(e.l1, l1, 1e-12);
  }
}

TEST(OperatorExpansion, SelfExpansion) {
  const GroupSpec g1 = make_group({3}), g2 = make_group({2, 2});
  Rng rng(3);
  const KernelOperator T0 = random_operator(g1, g2, rng);
  const PhaseSubgroup L1 = full_lattice(g1), L2 = make_lattice(g2, {1, 2}, {2, 1});
  const OperatorExpansion e = atomic_operator_expand(T0, T0, L1, L2);
  EXPECT_LT(max_kernel_diff(synthesize_operator(e, T0), T0), 1e-8);

  // kernel coefficients are the canonical-dual coefficients of kappa(T0)
  const PhaseSubgroup prod = make_lattice(product(g1, g2), {1, 1, 2}, {1, 2, 1}, L1.weight * L2.weight);
  const AtomicExpansion ref = atomic_expand(T0.kernel(), make_gabor_system(T0.kernel(), prod));
  ASSERT_EQ(ref.coefficients.size(), e.atoms.size());
  for (std::size_t k = 0; k < ref.coefficients.size(); ++k) {
    EXPECT_LT(std::abs(ref.coefficients[k] - e.atoms[k].kernel_coefficient), 1e-12);
  }

  const OperatorExpansion z = atomic_operator_expand(zero_operator(g1, g2), T0, L1, L2);
  for (const OperatorAtom& a : z.atoms) EXPECT_EQ(a.operator_coefficient, cplx(0.0, 0.0));
  EXPECT_EQ(z.l1, 0.0);
}

// With T0 = rank_one(g1, g2) and full lattices the canonical dual is
// (g1 (x) g2) / |g1 (x) g2|^2, so the kernel coefficients are a scaled STFT.
TEST(OperatorExpansion, RankOneFullLattice) {
  const GroupSpec g1 = make_group({3}), g2 = make_group({4});
  Rng rng(4);
  const Signal w1 = gauss(g1, 1.2), w2 = random_signal(g2, rng);
  const KernelOperator T0 = rank_one(w1, w2);
  const KernelOperator T = random_operator(g1, g2, rng);
  const OperatorExpansion e = atomic_operator_expand(T, T0, full_lattice(g1), full_lattice(g2));
  const Signal window = tensor(w1, w2);
  const double scale = phase_weight(g1) * phase_weight(g2) / std::pow(window.norm2(), 2);
  const std::size_t n1 = 3, n2 = 4, n = n1 * n2;
  for (std::size_t k = 0; k < e.atoms.size(); ++k) {
    const OperatorAtom& a = e.atoms[k];
    // product phase index (x1, x2, w1, w2)
    const std::size_t x = g1.index_of(a.domain_point.x) * n2 + g2.index_of(a.codomain_point.x);
    const std::size_t w = g1.index_of(a.domain_point.w) * n2 + g2.index_of(a.codomain_point.w);
    const auto atom = oracle::tf_shift(window, x * n + w);
    cplx c = 0.0;
    for (std::size_t t = 0; t < n; ++t) c += T.kernel()[t] * std::conj(atom[t]);
    EXPECT_LT(std::abs(a.kernel_coefficient - scale * c), 1e-12);
  }
  EXPECT_LT(max_kernel_diff(synthesize_operator(e, T0), T), 1e-8);
}

TEST(OperatorExpansion, NonFrameReportsBounds) {
  const GroupSpec g1 = make_group({4}), g2 = make_group({3});
  const KernelOperator T0 = rank_one(dirac_index(g1, 0), gauss(g2, 1.0));
  Rng rng(5);
  try {
    atomic_operator_expand(random_operator(g1, g2, rng), T0, make_lattice(g1, {2}, {1}), full_lattice(g2));
    FAIL() << "expected NonFrame";
  } catch (const NonFrame& e) {
    EXPECT_LT(e.lower_bound, 1e-10 * e.upper_bound);
    EXPECT_GT(e.upper_bound, 0.0);
  }
  EXPECT_THROW(atomic_operator_expand(zero_operator(g1, g2), zero_operator(g1, g2), full_lattice(g1), full_lattice(g2)),
               ZeroWindow);
  EXPECT_THROW(atomic_operator_expand(zero_operator(g1, g2), T0, full_lattice(g2), full_lattice(g2)), DomainError);
}
