#include "picoqed/operators.hpp"

#include <cmath>

namespace picoqed::ops {

Matrix sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

Matrix sigma_plus() { return sigma_minus().adjoint(); }

Matrix sigma_z() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  return m;
}

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

Matrix annihilation(int n_max) {
  Matrix a = Matrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix embed_spin(const Matrix& op, int which, int sites, int mode_dim) {
  Matrix out = mode_dim > 0 ? identity(mode_dim) : Matrix::Identity(1, 1);
  for (int s = 0; s < sites; ++s)
    out = kron(out, s == which ? op : identity(2));
  return out;
}

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace picoqed::ops
