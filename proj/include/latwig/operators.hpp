#pragma once

// Dense N x N operators on C^N: clock and shift matrices, the momentum
// basis, and roots of unity evaluated from exact (half-)integer exponents.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "latwig/lattice.hpp"

namespace latwig {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kDefaultTolerance = 1e-10;

/// Exponent x = numerator / denominator with denominator 1 or 2.
struct PhaseExponent {
  std::int64_t numerator = 0;
  int denominator = 1;

  static PhaseExponent integer(std::int64_t x) noexcept { return {x, 1}; }
  static PhaseExponent half(std::int64_t twice) noexcept { return {twice, 2}; }

  /// 2x reduced into [0, 2N); omega^x depends on nothing else.
  int twice_mod(LatticeDim n) const noexcept;
  bool is_integer() const noexcept { return denominator == 1 || numerator % 2 == 0; }
};

/// omega^x = exp(2 pi i x / N).
Complex omega_pow(PhaseExponent x, LatticeDim n);

/// Precomputed exp(i pi k / N) for k in [0, 2N), i.e. omega^(k/2).
class RootTable {
 public:
  explicit RootTable(LatticeDim n);

  /// omega^k for integer k.
  Complex pow(std::int64_t k) const noexcept;
  /// omega^(twice/2).
  Complex half_pow(std::int64_t twice) const noexcept;
  Complex operator()(PhaseExponent x) const noexcept;

 private:
  int two_n_;
  std::vector<Complex> roots_;
};

/// P = diag(1, omega, ..., omega^(N-1)).
ComplexMatrix clock_matrix(LatticeDim n);
/// S with S(q, q+1 mod N) = 1.
ComplexMatrix shift_matrix(LatticeDim n);
/// |p> with components omega^(-qp) / sqrt(N).
ComplexVector momentum_vector(int p, LatticeDim n);
/// e_q.
ComplexVector position_vector(int q, LatticeDim n);
/// Columns are momentum_vector(0..N-1).
ComplexMatrix momentum_basis(LatticeDim n);
/// S^n_exp P^m_exp, built directly from its single nonzero per row.
ComplexMatrix monomial(int n_exp, int m_exp, LatticeDim n);

double max_abs(const ComplexMatrix& m);

/// Validated density operator: hermitian, unit trace, eigenvalues >= -tolerance.
class DensityMatrix {
 public:
  /// Throws std::invalid_argument if any invariant fails.
  explicit DensityMatrix(ComplexMatrix m, double tolerance = kDefaultTolerance);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  LatticeDim dim() const { return LatticeDim(static_cast<int>(m_.rows())); }

  static DensityMatrix maximally_mixed(LatticeDim n);
  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix position_state(int q, LatticeDim n);
  static DensityMatrix momentum_state(int p, LatticeDim n);

 private:
  ComplexMatrix m_;
};

struct DensityViolations {
  double hermiticity = 0.0;
  double trace = 0.0;
  double min_eigenvalue = 0.0;
};

DensityViolations density_violations(const ComplexMatrix& m);

/// Full-rank state G G^dagger / Tr, G with iid complex Gaussian entries.
DensityMatrix random_density(LatticeDim n, std::mt19937_64& rng);
/// Haar-random pure state.
DensityMatrix random_pure(LatticeDim n, std::mt19937_64& rng);

}  // namespace latwig
