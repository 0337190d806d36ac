#ifndef PICOQED_OPERATORS_HPP
#define PICOQED_OPERATORS_HPP

#include <Eigen/Dense>

namespace picoqed::ops {

using Matrix = Eigen::MatrixXcd;

// Two-level basis: index 0 = ground, index 1 = excited.
Matrix sigma_minus();           // |g><e|
Matrix sigma_plus();            // |e><g|
Matrix sigma_z();               // |e><e| - |g><g|
Matrix identity(int dim);
Matrix annihilation(int n_max);  // truncated at photon number n_max

Matrix kron(const Matrix& a, const Matrix& b);

// Lifts a single-site operator to site `which` of `sites` two-level
// systems, optionally with a leading mode factor of dimension mode_dim
// (identity on the mode).
Matrix embed_spin(const Matrix& op, int which, int sites, int mode_dim = 0);

double hermiticity_defect(const Matrix& m);

}  // namespace picoqed::ops

#endif
