#include <gtest/gtest.h>

#include "tfkit/errors.hpp"
#include "tfkit/modspace.hpp"
#include "oracles.hpp"

using namespace tfkit;

namespace {

const std::vector<Exponent> kSweep{Exponent(1.0), Exponent(2.0), Exponent::infinity()};

// Direct 4D enumeration of the mixed norm.
double condition_oracle(const KernelOperator& T, const Signal& g1, const Signal& g2, Exponent p, Exponent q) {
  const std::size_t p1 = T.domain().size() * T.domain().size();
  const std::size_t p2 = T.codomain().size() * T.codomain().size();
  const double w1 = phase_weight(T.domain()), w2 = phase_weight(T.codomain());
  std::vector<double> inner(p2);
  for (std::size_t v2 = 0; v2 < p2; ++v2) {
    double acc = 0.0;
    for (std::size_t v1 = 0; v1 < p1; ++v1) {
      const double a = std::abs(oracle::kernel_pairing(T, g1, g2, v1, v2));
      acc = p.is_infinite() ? std::max(acc, a) : acc + w1 * std::pow(a, p.value());
    }
    inner[v2] = p.is_infinite() ? acc : std::pow(acc, 1.0 / p.value());
  }
  double out = 0.0;
  for (double v : inner) out = q.is_infinite() ? std::max(out, v) : out + w2 * std::pow(v, q.value());
  return q.is_infinite() ? out : std::pow(out, 1.0 / q.value());
}

}  // namespace

TEST(ModSpace, Reductions) {
  const GroupSpec a = make_group({4}), b = make_group({3});
  Rng rng(1);
  const KernelOperator T = random_operator(a, b, rng);
  const Signal g1 = random_signal(a, rng), g2 = gauss(b, 1.3);
  EXPECT_NEAR(mixed_norm_condition(T, g1, g2, Exponent(1.0), Exponent(1.0)), b_norm(T, g1, g2), 1e-10);
  EXPECT_NEAR(mixed_norm_condition(T, g1, g2, Exponent::infinity(), Exponent::infinity()), bprime_norm(T, g1, g2),
              1e-10);
}

TEST(ModSpace, AgainstEnumeration) {
  const GroupSpec a = make_group({3}), b = make_group({2, 2});
  Rng rng(2);
  const KernelOperator T = random_operator(a, b, rng);
  const Signal g1 = random_signal(a, rng), g2 = random_signal(b, rng);
  for (const Exponent& p : kSweep) {
    for (const Exponent& q : kSweep) {
      const double expect = condition_oracle(T, g1, g2, p, q);
      EXPECT_NEAR(mixed_norm_condition(T, g1, g2, p, q), expect, 1e-10 * expect) << p.label() << "," << q.label();
    }
  }
  const double e3 = condition_oracle(T, g1, g2, Exponent(3.0), Exponent(1.5));
  EXPECT_NEAR(mixed_norm_condition(T, g1, g2, Exponent(3.0), Exponent(1.5)), e3, 1e-10 * e3);
}

TEST(ModSpace, IdentityGapGrowsWithN) {
  double prev_condition = 0.0;
  for (int n : {4, 8, 16}) {
    const GroupSpec g = make_group({n});
    const Signal w = gauss(g, std::sqrt(static_cast<double>(n)));
    const KernelOperator I = identity_operator(g);
    const double c = mixed_norm_condition(I, w, w, Exponent(2.0), Exponent(2.0));
    if (n <= 8) EXPECT_NEAR(c, condition_oracle(I, w, w, Exponent(2.0), Exponent(2.0)), 1e-10 * c);
    // Moyal makes every inner L2 norm equal to |g|^2, so the outer sum is
    // sqrt(phase-space mass) * |g|^2 = sqrt(N) |g|^2.
    EXPECT_NEAR(c, std::sqrt(static_cast<double>(n)) * std::pow(w.norm2(), 2), 1e-10 * c);
    Rng rng(3);
    const double emp = empirical_mpq_opnorm(I, w, w, Exponent(2.0), Exponent(2.0), mpq_probes(w, 20, rng));
    EXPECT_NEAR(emp, 1.0, 1e-10);
    EXPECT_GT(c / std::pow(w.norm2(), 2), prev_condition);
    prev_condition = c / std::pow(w.norm2(), 2);
  }
}

TEST(ModSpace, EmpiricalBasics) {
  const GroupSpec g = make_group({6});
  Rng rng(4);
  const Signal w = gauss(g, 2.0);
  auto probes = mpq_probes(w, 10, rng);
  EXPECT_EQ(empirical_mpq_opnorm(zero_operator(g, g), w, w, Exponent(1.0), Exponent(1.0), probes), 0.0);
  const KernelOperator T = random_operator(g, g, rng);
  const double base = empirical_mpq_opnorm(T, w, w, Exponent(2.0), Exponent(1.0), probes);
  probes.push_back(Signal(g));
  EXPECT_EQ(empirical_mpq_opnorm(T, w, w, Exponent(2.0), Exponent(1.0), probes), base);
  EXPECT_EQ(empirical_mpq_opnorm(T, w, w, Exponent(2.0), Exponent(1.0), {Signal(g)}), 0.0);
  EXPECT_THROW(Exponent(0.9), DomainError);
  EXPECT_THROW(mixed_norm_condition(T, Signal(g), w, Exponent(1.0), Exponent(1.0)), ZeroWindow);
}

TEST(ModSpace, Homogeneous) {
  const GroupSpec g = make_group({5});
  Rng rng(5);
  const KernelOperator T = random_operator(g, g, rng);
  const Signal w = random_signal(g, rng);
  const auto probes = mpq_probes(w, 10, rng);
  const cplx c(0.0, 2.5);
  for (const Exponent& p : kSweep) {
    for (const Exponent& q : kSweep) {
      EXPECT_NEAR(mixed_norm_condition(T.scaled(c), w, w, p, q), 2.5 * mixed_norm_condition(T, w, w, p, q), 1e-9);
      EXPECT_NEAR(empirical_mpq_opnorm(T.scaled(c), w, w, p, q, probes),
                  2.5 * empirical_mpq_opnorm(T, w, w, p, q, probes), 1e-9);
    }
  }
}

TEST(ModSpace, RankOneDomination) {
  const GroupSpec g = make_group({8});
  Rng rng(6);
  const Signal w = gauss(g, 2.0);
  const KernelOperator R = rank_one(random_signal(g, rng), random_signal(g, rng));
  const auto probes = mpq_probes(w, 100, rng);
  const double emp = empirical_mpq_opnorm(R, w, w, Exponent(1.0), Exponent(1.0), probes);
  EXPECT_LE(emp, mpq_bound(R, w, w, Exponent(1.0), Exponent(1.0)) * (1 + 1e-12));
}

TEST(ModSpace, DominationSweepComplexWindows) {
  const GroupSpec g = make_group({6});
  Rng rng(7);
  const Signal g1 = random_signal(g, rng), g2 = random_signal(g, rng);
  std::vector<KernelOperator> ops{rank_one(random_signal(g, rng), random_signal(g, rng)), identity_operator(g),
                                  random_operator(g, g, rng)};
  const auto probes = mpq_probes(g1, 30, rng);
  for (const KernelOperator& T : ops) {
    for (const Exponent& p : kSweep) {
      for (const Exponent& q : kSweep) {
        const double emp = empirical_mpq_opnorm(T, g1, g2, p, q, probes);
        EXPECT_LE(emp, mpq_bound(T, g1, g2, p, q) * (1 + 1e-12)) << p.label() << "," << q.label();
      }
    }
  }
}
