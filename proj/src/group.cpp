#include "tfkit/group.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "tfkit/errors.hpp"

namespace tfkit {

namespace {

bool close_rel(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

cplx unit_root(long long k, long long n) {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return {1.0, 0.0};
  // exact values on the axes keep geometric sums clean
  if (2 * k == n) return {-1.0, 0.0};
  if (4 * k == n) return {0.0, 1.0};
  if (4 * k == 3 * n) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

GroupSpec::GroupSpec() : GroupSpec({}, 1.0, 1.0) {}

GroupSpec::GroupSpec(std::vector<int> orders, double haar_weight, double dual_haar_weight)
    : orders_(std::move(orders)), haar_weight_(haar_weight), dual_haar_weight_(dual_haar_weight) {
  for (int n : orders_) {
    if (n < 1) throw InvalidGroup("group order must be positive, got " + std::to_string(n));
  }
  strides_.assign(orders_.size(), 1);
  size_ = 1;
  for (std::size_t j = orders_.size(); j-- > 0;) {
    strides_[j] = size_;
    size_ *= static_cast<std::size_t>(orders_[j]);
    lcm_ = std::lcm(lcm_, static_cast<long long>(orders_[j]));
  }
  if (!(haar_weight_ > 0.0) || !(dual_haar_weight_ > 0.0) || !std::isfinite(haar_weight_) ||
      !std::isfinite(dual_haar_weight_)) {
    throw InvalidGroup("Haar weights must be positive and finite");
  }
  if (std::abs(haar_weight_ * dual_haar_weight_ * static_cast<double>(size_) - 1.0) > 1e-12) {
    throw InvalidGroup("Haar weights violate the inversion normalization");
  }
}

GroupSpec GroupSpec::dual() const { return GroupSpec(orders_, dual_haar_weight_, haar_weight_); }

bool GroupSpec::contains(const GroupElement& x) const {
  if (x.coords.size() != orders_.size()) return false;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    if (x.coords[j] < 0 || x.coords[j] >= orders_[j]) return false;
  }
  return true;
}

std::size_t GroupSpec::index_of(const GroupElement& x) const {
  if (!contains(x)) throw DomainError("element does not belong to " + label());
  std::size_t idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) idx += strides_[j] * static_cast<std::size_t>(x.coords[j]);
  return idx;
}

GroupElement GroupSpec::element(std::size_t index) const {
  if (index >= size_) throw DomainError("element index out of range");
  GroupElement x;
  x.coords.resize(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    x.coords[j] = static_cast<int>((index / strides_[j]) % static_cast<std::size_t>(orders_[j]));
  }
  return x;
}

GroupElement GroupSpec::zero() const { return GroupElement{std::vector<int>(orders_.size(), 0)}; }

GroupElement GroupSpec::reduce(const std::vector<long long>& coords) const {
  if (coords.size() != orders_.size()) throw DomainError("coordinate count does not match group rank");
  GroupElement x;
  x.coords.resize(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    long long r = coords[j] % orders_[j];
    if (r < 0) r += orders_[j];
    x.coords[j] = static_cast<int>(r);
  }
  return x;
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  return element(add_index(index_of(a), index_of(b)));
}

GroupElement GroupSpec::sub(const GroupElement& a, const GroupElement& b) const {
  return element(sub_index(index_of(a), index_of(b)));
}

GroupElement GroupSpec::neg(const GroupElement& a) const { return element(neg_index(index_of(a))); }

std::size_t GroupSpec::add_index(std::size_t a, std::size_t b) const {
  std::size_t r = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const auto n = static_cast<std::size_t>(orders_[j]);
    const std::size_t aj = (a / strides_[j]) % n;
    const std::size_t bj = (b / strides_[j]) % n;
    r += strides_[j] * ((aj + bj) % n);
  }
  return r;
}

std::size_t GroupSpec::sub_index(std::size_t a, std::size_t b) const {
  std::size_t r = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const auto n = static_cast<std::size_t>(orders_[j]);
    const std::size_t aj = (a / strides_[j]) % n;
    const std::size_t bj = (b / strides_[j]) % n;
    r += strides_[j] * ((aj + n - bj) % n);
  }
  return r;
}

cplx GroupSpec::character(std::size_t w, std::size_t x) const {
  long long k = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const auto n = static_cast<long long>(orders_[j]);
    const auto wj = static_cast<long long>((w / strides_[j]) % orders_[j]);
    const auto xj = static_cast<long long>((x / strides_[j]) % orders_[j]);
    k = (k + ((wj * xj) % n) * (lcm_ / n)) % lcm_;
  }
  return unit_root(k, lcm_);
}

double GroupSpec::distance_sq(std::size_t x) const {
  double d = 0.0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const int xj = static_cast<int>((x / strides_[j]) % orders_[j]);
    const int m = std::min(xj, orders_[j] - xj);
    d += static_cast<double>(m) * m;
  }
  return d;
}

bool GroupSpec::same_as(const GroupSpec& other) const {
  return orders_ == other.orders_ && close_rel(haar_weight_, other.haar_weight_) &&
         close_rel(dual_haar_weight_, other.dual_haar_weight_);
}

std::string GroupSpec::label() const {
  if (orders_.empty()) return "Z1";
  std::ostringstream os;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    if (j) os << 'x';
    os << 'Z' << orders_[j];
  }
  return os.str();
}

GroupSpec make_group(std::vector<int> orders) {
  for (int n : orders) {
    if (n < 1) throw InvalidGroup("group order must be positive, got " + std::to_string(n));
  }
  std::size_t size = 1;
  for (int n : orders) size *= static_cast<std::size_t>(n);
  return GroupSpec(std::move(orders), 1.0, 1.0 / static_cast<double>(size));
}

GroupSpec make_group_with_weight(std::vector<int> orders, double haar_weight) {
  for (int n : orders) {
    if (n < 1) throw InvalidGroup("group order must be positive, got " + std::to_string(n));
  }
  if (!(haar_weight > 0.0)) throw InvalidGroup("Haar weight must be positive");
  std::size_t size = 1;
  for (int n : orders) size *= static_cast<std::size_t>(n);
  return GroupSpec(std::move(orders), haar_weight, 1.0 / (haar_weight * static_cast<double>(size)));
}

cplx character_value(const GroupSpec& g, const GroupElement& w, const GroupElement& x) {
  return g.character(g.index_of(w), g.index_of(x));
}

GroupSpec product(const GroupSpec& g1, const GroupSpec& g2) {
  std::vector<int> orders = g1.orders();
  orders.insert(orders.end(), g2.orders().begin(), g2.orders().end());
  return GroupSpec(std::move(orders), g1.haar_weight() * g2.haar_weight(),
                   g1.dual_haar_weight() * g2.dual_haar_weight());
}

GroupSpec phase_space(const GroupSpec& g) {
  std::vector<int> orders = g.orders();
  orders.insert(orders.end(), g.orders().begin(), g.orders().end());
  const double w = phase_weight(g);
  const double n2 = static_cast<double>(g.size()) * static_cast<double>(g.size());
  return GroupSpec(std::move(orders), w, 1.0 / (w * n2));
}

std::size_t phase_index(const GroupSpec& g, const PhasePoint& v) {
  return g.index_of(v.x) * g.size() + g.index_of(v.w);
}

PhasePoint phase_point(const GroupSpec& g, std::size_t index) {
  return PhasePoint{g.element(index / g.size()), g.element(index % g.size())};
}

// ---------------------------------------------------------------------------

std::size_t PhaseSubgroup::size() const {
  std::size_t n = 1;
  for (std::size_t j = 0; j < group.rank(); ++j) {
    n *= static_cast<std::size_t>(group.orders()[j] / time_step[j]);
    n *= static_cast<std::size_t>(group.orders()[j] / freq_step[j]);
  }
  return n;
}

bool PhaseSubgroup::contains(const PhasePoint& v) const {
  if (!group.contains(v.x) || !group.contains(v.w)) return false;
  for (std::size_t j = 0; j < group.rank(); ++j) {
    if (v.x.coords[j] % time_step[j] != 0 || v.w.coords[j] % freq_step[j] != 0) return false;
  }
  return true;
}

bool PhaseSubgroup::contains_index(std::size_t phase_idx) const {
  if (phase_idx >= group.size() * group.size()) return false;
  return contains(phase_point(group, phase_idx));
}

PhaseSubgroup make_lattice(const GroupSpec& g, std::vector<int> time_step, std::vector<int> freq_step,
                           std::optional<double> weight) {
  if (time_step.size() != g.rank() || freq_step.size() != g.rank()) {
    throw InvalidLattice("lattice steps must have one entry per cyclic factor");
  }
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const int n = g.orders()[j];
    if (time_step[j] < 1 || n % time_step[j] != 0 || freq_step[j] < 1 || n % freq_step[j] != 0) {
      throw InvalidLattice("lattice step does not divide the order of factor " + std::to_string(j));
    }
  }
  const double w = weight.value_or(phase_weight(g));
  if (!(w > 0.0)) throw InvalidLattice("lattice weight must be positive");
  return PhaseSubgroup{g, std::move(time_step), std::move(freq_step), w};
}

PhaseSubgroup full_lattice(const GroupSpec& g) {
  return make_lattice(g, std::vector<int>(g.rank(), 1), std::vector<int>(g.rank(), 1));
}

std::vector<PhasePoint> enumerate_subgroup(const PhaseSubgroup& lattice) {
  std::vector<PhasePoint> points;
  for (std::size_t idx : subgroup_indices(lattice)) points.push_back(phase_point(lattice.group, idx));
  return points;
}

std::vector<std::size_t> subgroup_indices(const PhaseSubgroup& lattice) {
  const std::size_t n = lattice.group.size();
  std::vector<std::size_t> out;
  out.reserve(lattice.size());
  // Scanning in index order keeps the time-major lexicographic ordering.
  for (std::size_t i = 0; i < n * n; ++i) {
    if (lattice.contains(phase_point(lattice.group, i))) out.push_back(i);
  }
  return out;
}

}  // namespace tfkit
