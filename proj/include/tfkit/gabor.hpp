#pragma once

#include <vector>

#include "tfkit/group.hpp"
#include "tfkit/kernel.hpp"
#include "tfkit/signal.hpp"

namespace tfkit {

/// Window plus a separable lattice in G x G^. The per-point lattice weight
/// lives in lattice.weight.
struct GaborSystem {
  Signal window;
  PhaseSubgroup lattice;

  double weight() const { return lattice.weight; }
};

/// Throws ZeroWindow for a zero window and DomainError on a group mismatch.
GaborSystem make_gabor_system(Signal window, PhaseSubgroup lattice);

/// S f = sum_lambda weight <f, pi(lambda) g> pi(lambda) g as a kernel operator.
KernelOperator frame_operator(const GaborSystem& sys);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool is_frame = false;  // lower >= 1e-10 * upper
};

/// Extreme eigenvalues of the (Hermitian) frame operator.
FrameBounds frame_bounds(const GaborSystem& sys);

/// h = S^{-1} g. Throws NonFrame when the system is not a frame.
Signal canonical_dual(const GaborSystem& sys);

/// S^{-1/2} g; the system built on it has frame operator = identity.
Signal parseval_window(const GaborSystem& sys);
GaborSystem parseval_system(const GaborSystem& sys);

/// Coefficients indexed like subgroup_indices(sys.lattice).
struct AtomicExpansion {
  std::vector<std::size_t> points;
  std::vector<cplx> coefficients;
  double l1 = 0.0;  // sum |c|
};

/// c_lambda = weight <f, pi(lambda) h> with h the canonical dual.
AtomicExpansion atomic_expand(const Signal& f, const GaborSystem& sys);
/// sum_lambda c_lambda pi(lambda) g
Signal synthesize(const GaborSystem& sys, const AtomicExpansion& e);

/// Frame-operator sum restricted to `subset`:
///   K(t1, t2) = sum_{lambda in subset} weight conj(pi(lambda) g(t1)) pi(lambda) g(t2).
/// Throws InvalidLattice when a point is not on the lattice.
KernelOperator partial_frame_sum(const GaborSystem& sys, const std::vector<PhasePoint>& subset);
KernelOperator partial_frame_sum_indices(const GaborSystem& sys, const std::vector<std::size_t>& subset);

/// Nested lattice subsets ordered by phase-space distance from the origin;
/// the last one is the whole lattice.
std::vector<std::vector<std::size_t>> nested_exhaustion(const PhaseSubgroup& lattice, std::size_t stages);

}  // namespace tfkit
