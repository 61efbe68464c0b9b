#include "tfkit/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tfkit/errors.hpp"
#include "tfkit/linalg.hpp"

namespace tfkit {

namespace {

constexpr double kNonFrameRatio = 1e-10;

struct FrameSpectrum {
  Eigen::VectorXd values;
  Matrix vectors;
};

FrameSpectrum frame_spectrum(const GaborSystem& sys) {
  const Matrix S = operator_matrix(frame_operator(sys));
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (S + S.adjoint()));
  return {es.eigenvalues(), es.eigenvectors()};
}

FrameBounds bounds_of(const Eigen::VectorXd& ev) {
  const double lo = std::max(0.0, ev(0));
  const double hi = ev(ev.size() - 1);
  return {lo, hi, hi > 0.0 && lo >= kNonFrameRatio * hi};
}

Signal spectral_apply(const GaborSystem& sys, double power) {
  const FrameSpectrum sp = frame_spectrum(sys);
  const FrameBounds b = bounds_of(sp.values);
  if (!b.is_frame) throw NonFrame("Gabor system is not a frame", b.lower, b.upper);
  Eigen::VectorXd scaled = sp.values;
  for (Eigen::Index i = 0; i < scaled.size(); ++i) scaled(i) = std::pow(scaled(i), power);
  const Vector g = to_vector(sys.window);
  const Vector h = sp.vectors * (scaled.asDiagonal() * (sp.vectors.adjoint() * g));
  return to_signal(h, sys.window.group());
}

}  // namespace

GaborSystem make_gabor_system(Signal window, PhaseSubgroup lattice) {
  if (window.is_zero()) throw ZeroWindow("Gabor window must be nonzero");
  require_same_group(window.group(), lattice.group, "Gabor system");
  return GaborSystem{std::move(window), std::move(lattice)};
}

KernelOperator frame_operator(const GaborSystem& sys) {
  return partial_frame_sum_indices(sys, subgroup_indices(sys.lattice));
}

FrameBounds frame_bounds(const GaborSystem& sys) { return bounds_of(frame_spectrum(sys).values); }

Signal canonical_dual(const GaborSystem& sys) { return spectral_apply(sys, -1.0); }

Signal parseval_window(const GaborSystem& sys) { return spectral_apply(sys, -0.5); }

GaborSystem parseval_system(const GaborSystem& sys) {
  return make_gabor_system(parseval_window(sys), sys.lattice);
}

AtomicExpansion atomic_expand(const Signal& f, const GaborSystem& sys) {
  require_same_group(f.group(), sys.window.group(), "atomic_expand");
  const Signal h = canonical_dual(sys);
  AtomicExpansion e;
  e.points = subgroup_indices(sys.lattice);
  e.coefficients.reserve(e.points.size());
  for (std::size_t v : e.points) {
    const cplx c = sys.weight() * inner(f, tf_shift_index(h, v));
    e.coefficients.push_back(c);
    e.l1 += std::abs(c);
  }
  return e;
}

Signal synthesize(const GaborSystem& sys, const AtomicExpansion& e) {
  Signal out(sys.window.group());
  for (std::size_t k = 0; k < e.points.size(); ++k) {
    out = out + tf_shift_index(sys.window, e.points[k]).scaled(e.coefficients[k]);
  }
  return out;
}

KernelOperator partial_frame_sum(const GaborSystem& sys, const std::vector<PhasePoint>& subset) {
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  for (const PhasePoint& p : subset) {
    if (!sys.lattice.contains(p)) throw InvalidLattice("phase point is not on the lattice");
    idx.push_back(phase_index(sys.lattice.group, p));
  }
  return partial_frame_sum_indices(sys, idx);
}

KernelOperator partial_frame_sum_indices(const GaborSystem& sys, const std::vector<std::size_t>& subset) {
  const GroupSpec& G = sys.window.group();
  const std::size_t n = G.size();
  std::vector<cplx> k(n * n);
  for (std::size_t v : subset) {
    if (!sys.lattice.contains_index(v)) throw InvalidLattice("phase point is not on the lattice");
    const Signal atom = tf_shift_index(sys.window, v);
    for (std::size_t t1 = 0; t1 < n; ++t1) {
      const cplx a = sys.weight() * std::conj(atom[t1]);
      for (std::size_t t2 = 0; t2 < n; ++t2) k[t1 * n + t2] += a * atom[t2];
    }
  }
  return KernelOperator(G, G, std::move(k));
}

std::vector<std::vector<std::size_t>> nested_exhaustion(const PhaseSubgroup& lattice, std::size_t stages) {
  if (stages == 0) throw DomainError("exhaustion needs at least one stage");
  const GroupSpec& G = lattice.group;
  std::vector<std::size_t> pts = subgroup_indices(lattice);
  auto dist = [&](std::size_t v) { return G.distance_sq(v / G.size()) + G.distance_sq(v % G.size()); };
  std::stable_sort(pts.begin(), pts.end(), [&](std::size_t a, std::size_t b) { return dist(a) < dist(b); });
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 1; k <= stages; ++k) {
    const std::size_t count = (pts.size() * k) / stages;
    std::vector<std::size_t> subset(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(count));
    std::sort(subset.begin(), subset.end());
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace tfkit
