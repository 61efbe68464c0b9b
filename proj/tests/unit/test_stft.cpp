#include <gtest/gtest.h>

#include "tfkit/errors.hpp"
#include "tfkit/stft.hpp"
#include "oracles.hpp"

using namespace tfkit;

namespace {

std::vector<cplx> stft_oracle(const Signal& g, const Signal& s) {
  const GroupSpec& G = g.group();
  const std::size_t n = G.size();
  std::vector<cplx> out(n * n);
  for (std::size_t v = 0; v < n * n; ++v) {
    const auto atom = oracle::tf_shift(g, v);
    for (std::size_t t = 0; t < n; ++t) out[v] += G.haar_weight() * s[t] * std::conj(atom[t]);
  }
  return out;
}

const std::vector<Exponent> kExponents{Exponent(1.0), Exponent(2.0), Exponent(4.0), Exponent::infinity()};

}  // namespace

TEST(Stft, HandExample) {
  const GroupSpec g = make_group({2});
  const PhaseTable t = stft(dirac_index(g, 0), dirac_index(g, 0));
  EXPECT_EQ(t.at(0, 0), cplx(1.0, 0.0));
  EXPECT_EQ(t.at(0, 1), cplx(1.0, 0.0));
  EXPECT_EQ(t.at(1, 0), cplx(0.0, 0.0));
  EXPECT_EQ(t.at(1, 1), cplx(0.0, 0.0));
  EXPECT_DOUBLE_EQ(t.weight, 0.5);
  for (const cplx& v : stft(gauss(g, 1.0), Signal(g)).values) EXPECT_EQ(v, cplx(0.0, 0.0));
}

TEST(Stft, AgainstTripleSum) {
  for (const auto& orders : std::vector<std::vector<int>>{{6}, {2, 3}, {9}, {4, 4}}) {
    for (double w : {1.0, 2.0}) {
      const GroupSpec G = make_group_with_weight(orders, w);
      Rng rng(G.size() + 11);
      const Signal g = random_signal(G, rng), s = random_signal(G, rng);
      const auto expect = stft_oracle(g, s);
      EXPECT_LT(oracle::max_diff(stft(g, s).values, expect), 1e-12);
      EXPECT_LT(oracle::max_diff(stft_reference(g, s).values, expect), 1e-12);
      // sesquilinear form for L2 inputs
      for (std::size_t v = 0; v < G.size() * G.size(); v += 5) {
        EXPECT_NEAR(std::abs(stft(g, s).values[v] - inner(s, tf_shift_index(g, v))), 0.0, 1e-12);
      }
      // tf_pairing is the bilinear pairing with the unconjugated atom
      const PhaseTable p = tf_pairing(g, s);
      for (std::size_t v = 0; v < G.size() * G.size(); ++v) {
        cplx direct = 0.0;
        const auto atom = oracle::tf_shift(g, v);
        for (std::size_t t = 0; t < G.size(); ++t) direct += G.haar_weight() * atom[t] * s[t];
        EXPECT_NEAR(std::abs(p.values[v] - direct), 0.0, 1e-12);
      }
    }
  }
}

TEST(Stft, Moyal) {
  for (const auto& orders : std::vector<std::vector<int>>{{4}, {9}, {2, 6}}) {
    const GroupSpec G = make_group(orders);
    Rng rng(100 + G.size());
    for (int k = 0; k < 50; ++k) {
      const Signal f = random_signal(G, rng), g = random_signal(G, rng);
      const PhaseTable V = stft(g, f);
      double lhs = 0.0;
      for (const cplx& v : V.values) lhs += V.weight * std::norm(v);
      const double rhs = std::pow(f.norm2() * g.norm2(), 2);
      EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, rhs));
    }
  }
}

TEST(Stft, Inversion) {
  for (const auto& orders : std::vector<std::vector<int>>{{8}, {2, 3}, {5}}) {
    const GroupSpec G = make_group_with_weight(orders, 0.5);
    Rng rng(7);
    const Signal g = random_signal(G, rng);
    for (std::size_t x = 0; x < G.size(); ++x) {
      const Signal d = dirac_index(G, x);
      EXPECT_LT(max_abs_diff(stft_invert(g, stft(g, d)), d), 1e-10);
    }
    for (int k = 0; k < 20; ++k) {
      const Signal f = random_signal(G, rng);
      EXPECT_LT(max_abs_diff(stft_invert(g, stft(g, f)), f), 1e-10);
    }
    EXPECT_TRUE(stft_invert(g, zero_table(G)).is_zero());
  }
  const GroupSpec G = make_group({4});
  EXPECT_THROW(stft_invert(Signal(G), zero_table(G)), ZeroWindow);
  EXPECT_THROW(stft(gauss(G, 1.0), gauss(make_group({5}), 1.0)), DomainError);
}

TEST(Stft, InversionAgainstSynthesisSum) {
  const GroupSpec G = make_group({8});
  const Signal g = gauss(G, 2.0);
  const Signal d = dirac_index(G, 0);
  const PhaseTable V = stft(g, d);
  std::vector<cplx> synth(8);
  for (std::size_t v = 0; v < 64; ++v) {
    const auto atom = oracle::tf_shift(g, v);
    for (std::size_t t = 0; t < 8; ++t) synth[t] += V.weight * V.values[v] * atom[t];
  }
  const double gn = g.norm2() * g.norm2();
  for (cplx& c : synth) c /= gn;
  EXPECT_LT(oracle::max_diff(d, synth), 1e-12);
  EXPECT_LT(max_abs_diff(stft_invert(g, V), d), 1e-12);
}

TEST(Stft, ExponentBasics) {
  EXPECT_THROW(Exponent(0.5), DomainError);
  EXPECT_THROW(Exponent(std::nan("")), DomainError);
  EXPECT_TRUE(Exponent(1.0).conjugate().is_infinite());
  EXPECT_EQ(Exponent::infinity().conjugate(), Exponent(1.0));
  EXPECT_NEAR(Exponent(4.0).conjugate().value(), 4.0 / 3.0, 1e-15);
  EXPECT_EQ(Exponent(2.0).conjugate(), Exponent(2.0));
  EXPECT_EQ(Exponent::infinity().label(), "inf");
  EXPECT_EQ(Exponent(2.0).label(), "2");
}

TEST(Stft, S0ConvNorm) {
  const GroupSpec z2 = make_group({2});
  const Signal d = dirac_index(z2, 0);
  // direct enumeration over w and t
  double expect = 0.0;
  for (std::size_t w = 0; w < 2; ++w) {
    for (std::size_t t = 0; t < 2; ++t) {
      cplx c = 0.0;
      for (std::size_t y = 0; y < 2; ++y) c += oracle::character({2}, w, y) * d[y] * d[oracle::sub({2}, t, y)];
      expect += z2.dual_haar_weight() * std::abs(c);
    }
  }
  EXPECT_NEAR(s0_norm_conv(d, d), expect, 1e-15);

  const GroupSpec G = make_group({10});
  Rng rng(12);
  const Signal g = gauss(G, 3.0), f = random_signal(G, rng), h = random_signal(G, rng);
  EXPECT_EQ(s0_norm_conv(Signal(G), g), 0.0);
  EXPECT_GT(s0_norm_conv(f, g), 0.0);
  const cplx c = rng.complex_normal();
  EXPECT_NEAR(s0_norm_conv(f.scaled(c), g), std::abs(c) * s0_norm_conv(f, g), 1e-12);
  EXPECT_LE(s0_norm_conv(f + h, g), s0_norm_conv(f, g) + s0_norm_conv(h, g) + 1e-12);
  EXPECT_THROW(s0_norm_conv(f, Signal(G)), ZeroWindow);
}

TEST(Stft, MpNormAxioms) {
  const GroupSpec G = make_group({2, 4});
  Rng rng(13);
  const Signal g = random_signal(G, rng);
  for (const Exponent& p : kExponents) {
    EXPECT_EQ(mp_norm(Signal(G), g, p), 0.0);
    for (int k = 0; k < 10; ++k) {
      const Signal f = random_signal(G, rng), h = random_signal(G, rng);
      const cplx c = rng.complex_normal();
      EXPECT_GT(mp_norm(f, g, p), 0.0);
      EXPECT_NEAR(mp_norm(f.scaled(c), g, p), std::abs(c) * mp_norm(f, g, p), 1e-11);
      EXPECT_LE(mp_norm(f + h, g, p), mp_norm(f, g, p) + mp_norm(h, g, p) + 1e-11);
      EXPECT_NEAR(mp_norm(f, g, p), table_norm(tf_pairing(g, f), p), 1e-12);
    }
  }
  const Signal f = random_signal(G, rng);
  EXPECT_EQ(m1_norm(f, g), mp_norm(f, g, Exponent(1.0)));
  EXPECT_EQ(minf_norm(f, g), mp_norm(f, g, Exponent::infinity()));
  EXPECT_THROW(m1_norm(f, Signal(G)), ZeroWindow);
}

TEST(Stft, MinfOfDirac) {
  const GroupSpec G = make_group({8});
  Rng rng(14);
  const Signal g = random_signal(G, rng);
  for (std::size_t x = 0; x < 8; ++x) {
    double expect = 0.0;
    for (std::size_t v = 0; v < 64; ++v) expect = std::max(expect, std::abs(oracle::tf_shift(g, v)[x]));
    EXPECT_NEAR(minf_norm(dirac_index(G, x), g), expect, 1e-13);
    EXPECT_NEAR(minf_norm(dirac_index(G, x), g), g.norm_inf(), 1e-13);
  }
}

// The phase space of Z/N carries total mass N. Against the probability
// measure the L^p norms increase with p; against counting measure they
// decrease.
TEST(Stft, MpNormNesting) {
  for (const auto& orders : std::vector<std::vector<int>>{{6}, {3, 3}, {16}}) {
    const GroupSpec G = make_group(orders);
    const double w = phase_weight(G);
    const double mass = w * static_cast<double>(G.size() * G.size());
    Rng rng(15);
    const Signal g = gauss(G, 2.0);
    for (int k = 0; k < 10; ++k) {
      const Signal f = random_signal(G, rng);
      double prev_prob = 0.0;
      double prev_count = INFINITY;
      for (const Exponent& p : kExponents) {
        const double m = mp_norm(f, g, p);
        const double prob = p.is_infinite() ? m : m * std::pow(mass, -1.0 / p.value());
        const double count = p.is_infinite() ? m : m * std::pow(w, -1.0 / p.value());
        EXPECT_GE(prob, prev_prob * (1 - 1e-12));
        EXPECT_LE(count, prev_count * (1 + 1e-12));
        prev_prob = prob;
        prev_count = count;
      }
      EXPECT_LE(minf_norm(f, g), m1_norm(f, g) / w * (1 + 1e-12));
    }
  }
}

TEST(Stft, TfShiftIsometry) {
  const GroupSpec G = make_group({6});
  Rng rng(16);
  const Signal g = random_signal(G, rng), f = random_signal(G, rng);
  const double base = m1_norm(f, g);
  for (std::size_t v = 0; v < 36; ++v) EXPECT_NEAR(m1_norm(tf_shift_index(f, v), g), base, 1e-10);
}

TEST(Stft, ConjugatedVariant) {
  const GroupSpec G = make_group({7});
  Rng rng(17);
  const Signal real_window = random_real_signal(G, rng), f = random_signal(G, rng);
  for (const Exponent& p : kExponents) {
    EXPECT_NEAR(mp_norm_conjugated(f, real_window, p), mp_norm(f, real_window, p), 1e-12);
  }
  const Signal g = random_signal(G, rng);
  EXPECT_NEAR(mp_norm_conjugated(f, g, Exponent(2.0)), table_norm(stft(g, f), Exponent(2.0)), 1e-12);
}

TEST(Stft, WindowEquivalence) {
  const GroupSpec G = make_group({16});
  Rng rng(18);
  const Signal g1 = random_signal(G, rng), g2 = random_signal(G, rng);
  std::vector<Signal> probes;
  for (int k = 0; k < 100; ++k) probes.push_back(random_signal(G, rng));

  const RatioRange same = window_equivalence_ratio(g1, g1, probes);
  EXPECT_NEAR(same.lo, 1.0, 1e-12);
  EXPECT_NEAR(same.hi, 1.0, 1e-12);

  const RatioRange twice = window_equivalence_ratio(g1, g1.scaled(2.0), probes);
  EXPECT_NEAR(twice.lo, 0.5, 1e-12);
  EXPECT_NEAR(twice.hi, 0.5, 1e-12);

  probes.push_back(Signal(G));
  const RatioRange r = window_equivalence_ratio(g1, g2, probes);
  EXPECT_GT(r.lo, 0.0);
  EXPECT_LE(r.lo, r.hi);
  EXPECT_TRUE(std::isfinite(r.hi));
  EXPECT_EQ(r.skipped, 1u);
}

TEST(Stft, S0ConvAndM1Equivalent) {
  const GroupSpec G = make_group({12});
  Rng rng(19);
  const Signal g = gauss(G, 3.0);
  double lo = INFINITY, hi = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Signal f = random_signal(G, rng);
    const double r = s0_norm_conv(f, g) / m1_norm(f, g);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  EXPECT_GT(lo, 0.0);
  EXPECT_TRUE(std::isfinite(hi));
  RecordProperty("s0_over_m1_lo", std::to_string(lo));
  RecordProperty("s0_over_m1_hi", std::to_string(hi));
}
