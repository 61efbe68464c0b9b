#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tfkit {

using cplx = std::complex<double>;

/// Element of Z/n_1 x ... x Z/n_k. Characters of the same group reuse this
/// type through the identification w <-> (x -> exp(2 pi i sum x_j w_j / n_j)).
struct GroupElement {
  std::vector<int> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// A point (x, w) of the phase space G x G^.
struct PhasePoint {
  GroupElement x;
  GroupElement w;

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

/// Finite abelian group given as an ordered product of cyclic factors,
/// together with the per-point Haar weights of G and of its dual.
///
/// Elements are enumerated lexicographically (last coordinate fastest), so
/// index(x) = sum_j x_j * stride_j. The weights always satisfy
/// haar_weight * dual_haar_weight * size == 1, which is what makes the
/// Fourier inversion formula hold without extra constants.
class GroupSpec {
 public:
  /// The trivial group with weights (1, 1).
  GroupSpec();

  /// Throws InvalidGroup on a non-positive order or an inadmissible weight pair.
  GroupSpec(std::vector<int> orders, double haar_weight, double dual_haar_weight);

  const std::vector<int>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const { return size_; }
  double haar_weight() const { return haar_weight_; }
  double dual_haar_weight() const { return dual_haar_weight_; }

  /// Dual group: same coordinates, weights swapped.
  GroupSpec dual() const;

  bool contains(const GroupElement& x) const;
  /// Throws DomainError when x is not a valid element.
  std::size_t index_of(const GroupElement& x) const;
  GroupElement element(std::size_t index) const;
  GroupElement zero() const;

  /// Reduces arbitrary integer coordinates mod n_j.
  GroupElement reduce(const std::vector<long long>& coords) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;

  // Index arithmetic used in the inner loops.
  std::size_t add_index(std::size_t a, std::size_t b) const;
  std::size_t sub_index(std::size_t a, std::size_t b) const;
  std::size_t neg_index(std::size_t a) const { return sub_index(0, a); }

  /// Value of the character w at x, both given as indices.
  cplx character(std::size_t w, std::size_t x) const;

  /// Squared torus distance of x from 0: sum_j min(x_j, n_j - x_j)^2.
  double distance_sq(std::size_t x) const;

  /// Structural equality plus equality of the Haar weights (relative 1e-12).
  bool same_as(const GroupSpec& other) const;
  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.same_as(b); }

  /// "Z4xZ6" style label, "Z1" for the trivial group.
  std::string label() const;

 private:
  std::vector<int> orders_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
  double haar_weight_ = 1.0;
  double dual_haar_weight_ = 1.0;
  long long lcm_ = 1;
};

/// Counting measure on G, normalized counting measure on G^.
GroupSpec make_group(std::vector<int> orders);

/// Any admissible normalization: dual weight = 1 / (haar_weight * |G|).
GroupSpec make_group_with_weight(std::vector<int> orders, double haar_weight);

/// omega(x) = exp(2 pi i sum_j x_j w_j / n_j). Throws DomainError on
/// out-of-range coordinates.
cplx character_value(const GroupSpec& g, const GroupElement& w, const GroupElement& x);

/// G1 x G2 with product weights; element (a, b) has index a * |G2| + b.
GroupSpec product(const GroupSpec& g1, const GroupSpec& g2);

/// G x G^ as a group in its own right: per-point weight
/// haar_weight * dual_haar_weight, points enumerated time-major.
GroupSpec phase_space(const GroupSpec& g);

/// Per-point weight of the phase space of g.
inline double phase_weight(const GroupSpec& g) {
  return g.haar_weight() * g.dual_haar_weight();
}

std::size_t phase_index(const GroupSpec& g, const PhasePoint& v);
PhasePoint phase_point(const GroupSpec& g, std::size_t index);

/// Separable lattice a Z x b Z inside G x G^, one divisor per factor.
struct PhaseSubgroup {
  GroupSpec group;
  std::vector<int> time_step;
  std::vector<int> freq_step;
  double weight = 0.0;  // per-point weight on the lattice

  std::size_t size() const;
  bool contains(const PhasePoint& v) const;
  bool contains_index(std::size_t phase_idx) const;
};

/// Builds and validates a lattice. With no explicit weight the lattice
/// inherits the ambient per-point phase-space weight. Throws
/// InvalidLattice when a step does not divide its order.
PhaseSubgroup make_lattice(const GroupSpec& g, std::vector<int> time_step,
                           std::vector<int> freq_step,
                           std::optional<double> weight = std::nullopt);

/// Full phase space as a lattice (all steps 1).
PhaseSubgroup full_lattice(const GroupSpec& g);

/// Points {(a s, b r)} in time-major lexicographic order.
std::vector<PhasePoint> enumerate_subgroup(const PhaseSubgroup& lattice);

/// Phase-space indices of the lattice points, same order as enumerate_subgroup.
std::vector<std::size_t> subgroup_indices(const PhaseSubgroup& lattice);

}  // namespace tfkit
