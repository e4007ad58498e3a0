#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "hadamard/matrix.hpp"

namespace hadamard {

namespace {

Eigen::MatrixXcd to_eigen(const Matrix<Complex>& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

Matrix<Complex> from_eigen(const Eigen::MatrixXcd& e) {
  Matrix<Complex> m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
  for (int i = 0; i < e.rows(); ++i)
    for (int j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

}  // namespace

std::vector<double> singular_values(const Matrix<Complex>& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

namespace detail {

Matrix<Complex> kernel_basis_svd(const Matrix<Complex>& m, const Tolerance& tol) {
  if (m.cols() == 0) return Matrix<Complex>(0, 0);
  if (m.rows() == 0) return Matrix<Complex>::identity(m.cols());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int r = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv[k] > tol.rel * sv[0]) ++r;
  Eigen::MatrixXcd v = svd.matrixV();
  return from_eigen(v.rightCols(m.cols() - r));
}

Matrix<Complex> inverse_float(const Matrix<Complex>& m) {
  return from_eigen(to_eigen(m).partialPivLu().inverse());
}

// All complex eigenvalues of the companion matrix of
// c[0] + c[1] t + ... + c[n] t^n (c[n] != 0).
std::vector<Complex> companion_eigenvalues(const std::vector<Complex>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

}  // namespace detail
}  // namespace hadamard
