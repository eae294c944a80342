#include "latwig/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace latwig {

int PhaseExponent::twice_mod(LatticeDim n) const noexcept {
  const std::int64_t two_n = 2 * static_cast<std::int64_t>(n.n());
  std::int64_t twice = denominator == 1 ? 2 * (numerator % two_n) : numerator;
  twice %= two_n;
  if (twice < 0) twice += two_n;
  return static_cast<int>(twice);
}

Complex omega_pow(PhaseExponent x, LatticeDim n) {
  if (x.denominator != 1 && x.denominator != 2)
    throw std::invalid_argument("omega_pow: denominator must be 1 or 2");
  const int k = x.twice_mod(n);
  return std::polar(1.0, std::numbers::pi * k / n.n());
}

RootTable::RootTable(LatticeDim n) : two_n_(2 * n.n()), roots_(static_cast<std::size_t>(2 * n.n())) {
  for (int k = 0; k < two_n_; ++k) roots_[static_cast<std::size_t>(k)] = omega_pow(PhaseExponent::half(k), n);
}

Complex RootTable::half_pow(std::int64_t twice) const noexcept {
  std::int64_t k = twice % two_n_;
  if (k < 0) k += two_n_;
  return roots_[static_cast<std::size_t>(k)];
}

Complex RootTable::pow(std::int64_t k) const noexcept { return half_pow(2 * (k % two_n_)); }

Complex RootTable::operator()(PhaseExponent x) const noexcept {
  return x.denominator == 1 ? pow(x.numerator) : half_pow(x.numerator);
}

ComplexMatrix clock_matrix(LatticeDim n) {
  const RootTable w(n);
  ComplexMatrix P = ComplexMatrix::Zero(n.n(), n.n());
  for (int q = 0; q < n.n(); ++q) P(q, q) = w.pow(q);
  return P;
}

ComplexMatrix shift_matrix(LatticeDim n) {
  ComplexMatrix S = ComplexMatrix::Zero(n.n(), n.n());
  for (int q = 0; q < n.n(); ++q) S(q, (q + 1) % n.n()) = 1.0;
  return S;
}

ComplexVector momentum_vector(int p, LatticeDim n) {
  if (p < 0 || p >= n.n()) throw std::invalid_argument("momentum_vector: p out of range");
  const RootTable w(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n.n()));
  ComplexVector v(n.n());
  for (int q = 0; q < n.n(); ++q) v(q) = norm * w.pow(-static_cast<std::int64_t>(q) * p);
  return v;
}

ComplexVector position_vector(int q, LatticeDim n) {
  if (q < 0 || q >= n.n()) throw std::invalid_argument("position_vector: q out of range");
  ComplexVector v = ComplexVector::Zero(n.n());
  v(q) = 1.0;
  return v;
}

ComplexMatrix momentum_basis(LatticeDim n) {
  ComplexMatrix F(n.n(), n.n());
  for (int p = 0; p < n.n(); ++p) F.col(p) = momentum_vector(p, n);
  return F;
}

ComplexMatrix monomial(int n_exp, int m_exp, LatticeDim n) {
  // (S^a P^b)(r, r + a) = omega^(b (r + a)).
  const RootTable w(n);
  const int N = n.n();
  const int a = canonical_rep(n_exp, n);
  const int b = canonical_rep(m_exp, n);
  ComplexMatrix M = ComplexMatrix::Zero(N, N);
  for (int r = 0; r < N; ++r) {
    const int c = (r + a) % N;
    M(r, c) = w.pow(static_cast<std::int64_t>(b) * c);
  }
  return M;
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

DensityViolations density_violations(const ComplexMatrix& m) {
  DensityViolations v;
  v.hermiticity = max_abs(m - m.adjoint());
  v.trace = std::abs(m.trace() - Complex(1.0, 0.0));
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  v.min_eigenvalue = es.eigenvalues().minCoeff();
  return v;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tolerance) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) throw std::invalid_argument("density matrix must be square");
  const DensityViolations v = density_violations(m_);
  if (v.hermiticity > tolerance)
    throw std::invalid_argument("density matrix not hermitian (violation " + std::to_string(v.hermiticity) + ")");
  if (v.trace > tolerance)
    throw std::invalid_argument("density matrix trace differs from 1 by " + std::to_string(v.trace));
  if (v.min_eigenvalue < -tolerance)
    throw std::invalid_argument("density matrix has negative eigenvalue " + std::to_string(v.min_eigenvalue));
}

DensityMatrix DensityMatrix::maximally_mixed(LatticeDim n) {
  return DensityMatrix(ComplexMatrix::Identity(n.n(), n.n()) / static_cast<double>(n.n()));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const ComplexVector u = psi / psi.norm();
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::position_state(int q, LatticeDim n) { return pure(position_vector(q, n)); }

DensityMatrix DensityMatrix::momentum_state(int p, LatticeDim n) { return pure(momentum_vector(p, n)); }

namespace {

ComplexMatrix ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Column-major fill order is part of the seeded output contract.
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(r, c) = Complex(re, im);
    }
  return g;
}

}  // namespace

DensityMatrix random_density(LatticeDim n, std::mt19937_64& rng) {
  const ComplexMatrix g = ginibre(n.n(), n.n(), rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix(std::move(rho));
}

DensityMatrix random_pure(LatticeDim n, std::mt19937_64& rng) {
  const ComplexMatrix g = ginibre(n.n(), 1, rng);
  return DensityMatrix::pure(g.col(0));
}

}  // namespace latwig
