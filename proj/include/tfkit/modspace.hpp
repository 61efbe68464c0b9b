#pragma once

#include <vector>

#include "tfkit/kernel.hpp"
#include "tfkit/random.hpp"
#include "tfkit/stft.hpp"

namespace tfkit {

/// ( sum_v2 w2 ( sum_v1 w1 |(pi(v2) g2, T pi(v1) g1)|^p )^(q/p) )^(1/q),
/// with sups replacing the sums at p = inf or q = inf.
/// Throws ZeroWindow for a zero window.
double mixed_norm_condition(const KernelOperator& T, const Signal& g1, const Signal& g2, Exponent p, Exponent q);

/// max over nonzero probes of mp_norm(T s, g2, q) / mp_norm(s, g1, p').
/// Zero probes are skipped; returns 0 when nothing is left.
double empirical_mpq_opnorm(const KernelOperator& T, const Signal& g1, const Signal& g2, Exponent p, Exponent q,
                            const std::vector<Signal>& probes);

/// Upper bound for empirical_mpq_opnorm:
///   |g1|_2^{-2} mixed_norm_condition(T, conj(g1), g2, p, q).
/// Follows from s = |g1|^{-2} sum_v w (pi(v) g1, s) conj(pi(v) g1) and
/// Hoelder in v.
double mpq_bound(const KernelOperator& T, const Signal& g1, const Signal& g2, Exponent p, Exponent q);

/// Signals synthesized from complex Gaussian phase-space coefficients
/// against window g.
std::vector<Signal> mpq_probes(const Signal& g, std::size_t count, Rng& rng);

}  // namespace tfkit
