#include "tfkit/operator_expansion.hpp"

#include "tfkit/errors.hpp"

namespace tfkit {

namespace {

PhaseSubgroup product_lattice(const PhaseSubgroup& l1, const PhaseSubgroup& l2) {
  std::vector<int> a = l1.time_step;
  a.insert(a.end(), l2.time_step.begin(), l2.time_step.end());
  std::vector<int> b = l1.freq_step;
  b.insert(b.end(), l2.freq_step.begin(), l2.freq_step.end());
  return make_lattice(product(l1.group, l2.group), std::move(a), std::move(b), l1.weight * l2.weight);
}

// Splits a phase point of G1 x G2, coordinates (x1, x2, w1, w2).
std::pair<PhasePoint, PhasePoint> split_point(const PhasePoint& v, std::size_t rank1) {
  auto take = [](const std::vector<int>& c, std::size_t from, std::size_t to) {
    return GroupElement{std::vector<int>(c.begin() + static_cast<std::ptrdiff_t>(from),
                                         c.begin() + static_cast<std::ptrdiff_t>(to))};
  };
  const std::size_t r = v.x.coords.size();
  PhasePoint p1{take(v.x.coords, 0, rank1), take(v.w.coords, 0, rank1)};
  PhasePoint p2{take(v.x.coords, rank1, r), take(v.w.coords, rank1, r)};
  return {p1, p2};
}

}  // namespace

KernelOperator tf_shift_operator(const GroupSpec& g, const PhasePoint& v) {
  return kernel_from_operator([&](const Signal& s) { return tf_shift(s, v); }, g, g);
}

KernelOperator domain_shift_operator(const GroupSpec& g, const PhasePoint& v) {
  const PhasePoint reflected{g.neg(v.x), v.w};
  return tf_shift_operator(g, reflected);
}

OperatorExpansion atomic_operator_expand(const KernelOperator& T, const KernelOperator& T0,
                                         const PhaseSubgroup& lattice1, const PhaseSubgroup& lattice2) {
  require_same_group(T.domain(), T0.domain(), "atomic_operator_expand domain");
  require_same_group(T.codomain(), T0.codomain(), "atomic_operator_expand codomain");
  require_same_group(lattice1.group, T.domain(), "atomic_operator_expand lattice 1");
  require_same_group(lattice2.group, T.codomain(), "atomic_operator_expand lattice 2");
  if (T0.kernel().is_zero()) throw ZeroWindow("T0 must be a nontrivial operator");

  const GaborSystem sys = make_gabor_system(T0.kernel(), product_lattice(lattice1, lattice2));
  OperatorExpansion out{T.domain(), T.codomain(), {}, 0.0, frame_bounds(sys)};
  if (!out.bounds.is_frame) {
    throw NonFrame("kappa(T0) does not generate a frame on the product lattice", out.bounds.lower, out.bounds.upper);
  }
  const AtomicExpansion e = atomic_expand(T.kernel(), sys);
  const GroupSpec& G1 = T.domain();
  const GroupSpec prod = sys.lattice.group;
  for (std::size_t k = 0; k < e.points.size(); ++k) {
    const auto [p1, p2] = split_point(phase_point(prod, e.points[k]), G1.rank());
    const cplx c = e.coefficients[k];
    const cplx phase = character_value(G1, p1.w, p1.x);
    OperatorAtom atom{p1, p2, c, phase * c};
    out.l1 += std::abs(atom.operator_coefficient);
    out.atoms.push_back(std::move(atom));
  }
  return out;
}

KernelOperator synthesize_operator(const OperatorExpansion& e, const KernelOperator& T0) {
  KernelOperator sum = zero_operator(e.domain, e.codomain);
  for (const OperatorAtom& a : e.atoms) {
    if (a.operator_coefficient == cplx{0.0, 0.0}) continue;
    const KernelOperator term =
        compose(compose(domain_shift_operator(e.domain, a.domain_point), T0),
                tf_shift_operator(e.codomain, a.codomain_point));
    sum = sum + term.scaled(a.operator_coefficient);
  }
  return sum;
}

}  // namespace tfkit
