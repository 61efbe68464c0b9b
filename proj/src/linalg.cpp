#include "tfkit/linalg.hpp"

#include "tfkit/errors.hpp"

namespace tfkit {

Matrix operator_matrix(const KernelOperator& T) {
  const auto n1 = static_cast<Eigen::Index>(T.domain().size());
  const auto n2 = static_cast<Eigen::Index>(T.codomain().size());
  const double w = T.domain().haar_weight();
  Matrix M(n2, n1);
  for (Eigen::Index x = 0; x < n1; ++x) {
    for (Eigen::Index y = 0; y < n2; ++y) M(y, x) = w * T.at(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
  }
  return M;
}

KernelOperator operator_from_matrix(const Matrix& M, const GroupSpec& domain, const GroupSpec& codomain) {
  const std::size_t n1 = domain.size();
  const std::size_t n2 = codomain.size();
  if (static_cast<std::size_t>(M.rows()) != n2 || static_cast<std::size_t>(M.cols()) != n1) {
    throw DomainError("matrix shape does not match the operator groups");
  }
  std::vector<cplx> k(n1 * n2);
  for (std::size_t x = 0; x < n1; ++x) {
    for (std::size_t y = 0; y < n2; ++y) {
      k[x * n2 + y] = M(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) / domain.haar_weight();
    }
  }
  return KernelOperator(domain, codomain, std::move(k));
}

Vector to_vector(const Signal& s) {
  Vector v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

Signal to_signal(const Vector& v, const GroupSpec& g) {
  return Signal(g, std::vector<cplx>(v.data(), v.data() + v.size()));
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& M) {
  const Matrix H = 0.5 * (M + M.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double spectral_norm(const Matrix& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(M);
  return svd.singularValues()(0);
}

}  // namespace tfkit
