#include "picoqed/lindblad.hpp"

#include <cmath>
#include <stdexcept>

#include "picoqed/errors.hpp"
#include "picoqed/operators.hpp"

namespace picoqed::lindblad {

namespace {

using ops::kron;

// Pade coefficients for exp, Higham (2005).
constexpr double kPade3[] = {120.0, 60.0, 12.0, 1.0};
constexpr double kPade5[] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr double kPade7[] = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                             25200.0,    1512.0,    56.0,      1.0};
constexpr double kPade9[] = {17643225600.0, 8821612800.0, 2075673600.0,
                             302702400.0,   30270240.0,   2162160.0,
                             110880.0,      3960.0,       90.0,
                             1.0};
constexpr double kPade13[] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

double one_norm(const Matrix& a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

Matrix pade_solve(const Matrix& u, const Matrix& v) {
  // r = (v - u)^{-1} (v + u)
  return (v - u).partialPivLu().solve(v + u);
}

Matrix expm_low_degree(const Matrix& a, std::span<const double> b) {
  const Matrix a2 = a * a;
  const auto id = Matrix::Identity(a.rows(), a.cols());
  Matrix even = b[0] * id;
  Matrix odd = b[1] * id;
  Matrix power = a2;
  for (size_t k = 2; k < b.size(); k += 2) {
    even += b[k] * power;
    if (k + 1 < b.size()) odd += b[k + 1] * power;
    power = power * a2;
  }
  const Matrix u = a * odd;
  return pade_solve(u, even);
}

Matrix expm_degree13(const Matrix& a) {
  const auto& b = kPade13;
  const auto id = Matrix::Identity(a.rows(), a.cols());
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  const Matrix u =
      a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
           b[5] * a4 + b[3] * a2 + b[1] * id);
  const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                   b[4] * a4 + b[2] * a2 + b[0] * id;
  return pade_solve(u, v);
}

}  // namespace

Matrix matrix_exponential(const Matrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("matrix_exponential: non-square input");
  const double norm = one_norm(a);
  if (!std::isfinite(norm))
    throw std::invalid_argument("matrix_exponential: non-finite entries");
  if (norm <= kTheta3) return expm_low_degree(a, kPade3);
  if (norm <= kTheta5) return expm_low_degree(a, kPade5);
  if (norm <= kTheta7) return expm_low_degree(a, kPade7);
  if (norm <= kTheta9) return expm_low_degree(a, kPade9);
  int squarings = 0;
  Matrix scaled = a;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
    scaled = a / std::pow(2.0, squarings);
  }
  Matrix r = expm_degree13(scaled);
  for (int s = 0; s < squarings; ++s) r = r * r;
  return r;
}

LindbladProblem::LindbladProblem(Matrix hamiltonian,
                                 std::vector<CollapseChannel> collapse,
                                 Matrix emission_op)
    : hamiltonian_(std::move(hamiltonian)),
      collapse_(std::move(collapse)),
      emission_op_(std::move(emission_op)) {
  const int d = static_cast<int>(hamiltonian_.rows());
  if (hamiltonian_.cols() != d)
    throw std::invalid_argument("LindbladProblem: H must be square");
  const double scale = std::max(hamiltonian_.cwiseAbs().maxCoeff(), 1.0);
  if (ops::hermiticity_defect(hamiltonian_) > 1e-12 * scale)
    throw std::invalid_argument("LindbladProblem: H is not Hermitian");
  for (const auto& c : collapse_) {
    if (c.op.rows() != d || c.op.cols() != d)
      throw std::invalid_argument("LindbladProblem: collapse dim mismatch");
    if (c.rate_cm1 < 0.0)
      throw std::invalid_argument("LindbladProblem: negative rate");
  }
  if (emission_op_.rows() != d || emission_op_.cols() != d)
    throw std::invalid_argument("LindbladProblem: emission op dim mismatch");

  // L(rho) = -i[H, rho] + sum_k G_k (C rho C+ - {C+C, rho}/2), vectorized
  // with column stacking: vec(A X B) = (B^T kron A) vec(X).
  const auto id = Matrix::Identity(d, d);
  const std::complex<double> im(0.0, 1.0);
  liouvillian_ = -im * (kron(id, hamiltonian_) -
                        kron(hamiltonian_.transpose(), id));
  for (const auto& c : collapse_) {
    const Matrix cdc = c.op.adjoint() * c.op;
    liouvillian_ += c.rate_cm1 *
                    (kron(c.op.conjugate(), c.op) -
                     0.5 * kron(id, cdc) - 0.5 * kron(cdc.transpose(), id));
  }
}

LindbladProblem driven_tls_problem(double rabi_cm1, double detuning_cm1,
                                   double gamma_cm1) {
  if (gamma_cm1 <= 0.0)
    throw std::domain_error("driven_tls_problem: Gamma must be > 0");
  const Matrix sm = ops::sigma_minus();
  const Matrix sp = ops::sigma_plus();
  const Matrix h = -detuning_cm1 * (sp * sm) + 0.5 * rabi_cm1 * (sp + sm);
  return LindbladProblem(h, {{sm, gamma_cm1}}, sm);
}

LindbladProblem two_emitter_problem(double rabi_cm1, double detuning_cm1,
                                    double gamma_cm1, double dd_coupling_cm1,
                                    double cross_decay_cm1) {
  if (std::abs(cross_decay_cm1) > gamma_cm1)
    throw std::domain_error(
        "two_emitter_problem: |gamma12| > Gamma makes the dissipator "
        "non-positive");
  const Matrix sm1 = ops::embed_spin(ops::sigma_minus(), 0, 2);
  const Matrix sm2 = ops::embed_spin(ops::sigma_minus(), 1, 2);
  const Matrix sp1 = sm1.adjoint();
  const Matrix sp2 = sm2.adjoint();

  Matrix h = -detuning_cm1 * (sp1 * sm1 + sp2 * sm2) +
             0.5 * rabi_cm1 * (sp1 + sm1 + sp2 + sm2) +
             dd_coupling_cm1 * (sp1 * sm2 + sp2 * sm1);

  // Eigenmodes of the 2x2 decay matrix [[G, g12], [g12, G]]: symmetric and
  // antisymmetric jump operators with rates G +- g12.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<CollapseChannel> collapse;
  collapse.push_back({inv_sqrt2 * (sm1 + sm2), gamma_cm1 + cross_decay_cm1});
  collapse.push_back({inv_sqrt2 * (sm1 - sm2), gamma_cm1 - cross_decay_cm1});
  return LindbladProblem(std::move(h), std::move(collapse), sm1 + sm2);
}

double DensityMatrix::trace_defect() const {
  return std::abs(rho.trace() - std::complex<double>(1.0, 0.0));
}

double DensityMatrix::hermiticity_defect() const {
  return ops::hermiticity_defect(rho);
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(
      Matrix(0.5 * (rho + rho.adjoint())));
  return solver.eigenvalues().minCoeff();
}

DensityMatrix steady_state(const LindbladProblem& p) {
  const int d = p.dim();
  Eigen::BDCSVD<Matrix> svd(p.liouvillian(),
                            Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const Eigen::Index last = sv.size() - 1;
  const double sigma_max = sv(0);
  if (sigma_max <= 0.0)
    throw MultiplicityError("steady_state: zero Liouvillian");
  if (sv(last - 1) <= 1e-8 * sigma_max)
    throw MultiplicityError(
        "steady_state: degenerate null space (second singular value " +
        std::to_string(sv(last - 1)) + ")");

  Eigen::VectorXcd null_vec = svd.matrixV().col(last);
  Matrix rho = Eigen::Map<const Matrix>(null_vec.data(), d, d);
  rho = 0.5 * (rho + Matrix(rho.adjoint()));
  const std::complex<double> tr = rho.trace();
  if (std::abs(tr) < 1e-12)
    throw MultiplicityError("steady_state: traceless null vector");
  rho /= tr;
  return DensityMatrix{std::move(rho)};
}

std::complex<double> expectation(const Matrix& rho, const Matrix& op) {
  return (op * rho).trace();
}

std::vector<std::complex<double>> evolve_expectation(
    const LindbladProblem& p, const Matrix& initial, const Matrix& observable,
    std::span<const double> tau_grid) {
  const int d = p.dim();
  if (tau_grid.size() < 2)
    throw std::invalid_argument("evolve_expectation: grid too short");
  const double dt = tau_grid[1] - tau_grid[0];
  for (size_t k = 1; k < tau_grid.size(); ++k) {
    if (std::abs((tau_grid[k] - tau_grid[k - 1]) - dt) > 1e-9 * std::abs(dt))
      throw std::invalid_argument("evolve_expectation: grid must be uniform");
  }
  if (std::abs(tau_grid[0]) > 1e-12)
    throw std::invalid_argument("evolve_expectation: grid must start at 0");

  const Matrix step = matrix_exponential(p.liouvillian() * dt);
  // Tr[O M] = vec(O^T) . vec(M) in column stacking.
  const Matrix obs_t = observable.transpose();
  const Eigen::Map<const Eigen::VectorXcd> obs_vec(obs_t.data(), d * d);
  Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(initial.data(),
                                                          d * d);
  std::vector<std::complex<double>> out(tau_grid.size());
  for (size_t k = 0; k < tau_grid.size(); ++k) {
    out[k] = (obs_vec.transpose() * v)(0, 0);  // plain bilinear sum, no conj
    if (k + 1 < tau_grid.size()) v = step * v;
  }
  return out;
}

Correlation correlation_g1(const LindbladProblem& p,
                           std::span<const double> tau_grid) {
  const DensityMatrix ss = steady_state(p);
  const Matrix& a = p.emission_op();
  Correlation c;
  c.tau.assign(tau_grid.begin(), tau_grid.end());
  c.value = evolve_expectation(p, a * ss.rho, a.adjoint(), tau_grid);
  c.coherent_offset =
      expectation(ss.rho, a.adjoint()) * expectation(ss.rho, a);
  const double initial = std::abs(c.value.front());
  c.decayed = std::abs(c.value.back() - c.coherent_offset) <=
              1e-6 * std::max(initial, 1e-300);
  return c;
}

Correlation correlation_g2(const LindbladProblem& p,
                           std::span<const double> tau_grid) {
  const DensityMatrix ss = steady_state(p);
  const Matrix& a = p.emission_op();
  const Matrix number = a.adjoint() * a;
  const double population = expectation(ss.rho, number).real();
  if (population <= 0.0)
    throw std::domain_error("correlation_g2: no steady-state emission");
  Correlation c;
  c.tau.assign(tau_grid.begin(), tau_grid.end());
  c.value =
      evolve_expectation(p, a * ss.rho * a.adjoint(), number, tau_grid);
  for (auto& v : c.value) v /= population * population;
  c.coherent_offset = 1.0;
  c.decayed = std::abs(c.value.back() - 1.0) <= 1e-4;
  return c;
}

FrequencySpectrum spectrum_from_g1(const Correlation& g1,
                                   std::span<const double> omega_grid,
                                   bool subtract_coherent,
                                   kernels::Execution exec) {
  if (g1.value.size() < 2)
    throw std::invalid_argument("spectrum_from_g1: correlation too short");
  const double dt = g1.tau[1] - g1.tau[0];
  std::vector<std::complex<double>> inc(g1.value);
  if (subtract_coherent)
    for (auto& v : inc) v -= g1.coherent_offset;
  FrequencySpectrum s;
  s.omega_cm1.assign(omega_grid.begin(), omega_grid.end());
  s.value = kernels::halfline_fourier(inc, dt, omega_grid, exec);
  s.asymptotics_reliable = g1.decayed;
  return s;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2) throw std::invalid_argument("linear_grid: need >= 2 points");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = lo + (hi - lo) * i / (points - 1);
  return g;
}

}  // namespace picoqed::lindblad
