#pragma once

#include <vector>

#include "latwig/fano.hpp"

namespace latwig {

/// W(q, p) on the N x N lattice. Stored complex so that the output of a
/// non-hermitian candidate Fano set stays representable.
class WignerGrid {
 public:
  explicit WignerGrid(LatticeDim n) : dim_(n), values_(n.sites(), Complex(0.0, 0.0)) {}
  WignerGrid(LatticeDim n, std::vector<Complex> values);

  LatticeDim dim() const noexcept { return dim_; }
  int n() const noexcept { return dim_.n(); }

  Complex& operator()(int q, int p) { return values_[index(q, p)]; }
  const Complex& operator()(int q, int p) const { return values_[index(q, p)]; }
  const std::vector<Complex>& values() const noexcept { return values_; }

  Complex total() const;
  double max_imag() const;
  double distance(const WignerGrid& other) const;

 private:
  std::size_t index(int q, int p) const {
    return static_cast<std::size_t>(canonical_rep(q, dim_)) * static_cast<std::size_t>(dim_.n()) +
           static_cast<std::size_t>(canonical_rep(p, dim_));
  }

  LatticeDim dim_;
  std::vector<Complex> values_;  // row-major in (q, p)
};

/// Weights indexed by the line label p0 = kappa p - lambda q (mod N).
struct MarginalDistribution {
  SL2Element g;
  std::vector<double> weights;
  /// Largest |Im| dropped when the line sums were taken.
  double max_imag = 0.0;
};

WignerGrid wigner_from_density(const DensityMatrix& rho, const FanoOperatorSet& f);
/// Same transform for an arbitrary operator (no density invariants enforced).
WignerGrid wigner_from_operator(const ComplexMatrix& rho, const FanoOperatorSet& f);

/// rho = N sum_{q,p} Delta(q,p)^dagger W(q,p). Throws std::invalid_argument
/// unless f passes site orthogonality at the given tolerance. The result is
/// not projected onto density matrices.
ComplexMatrix density_from_wigner(const WignerGrid& w, const FanoOperatorSet& f,
                                  double tolerance = kDefaultTolerance);

/// weight(p0) = sum_r W(kappa r + mu p0, lambda r + nu p0).
MarginalDistribution marginal_along_line(const WignerGrid& w, const SL2Element& g);

/// Position marginals <q|rho|q> (row sums) and momentum marginals <p|rho|p>
/// (column sums).
std::vector<double> position_marginals(const WignerGrid& w);
std::vector<double> momentum_marginals(const WignerGrid& w);

struct LineProjectorCheck {
  CheckResult result;  // name "line_projector"; witness (kappa, lambda, mu, nu, p0, property)
  ComplexMatrix projector;
  double hermiticity = 0.0;
  double idempotence = 0.0;
  double trace = 0.0;
  double eigen = 0.0;  // |V M - omega^(-p0) M|
  int multiplicity = 0;  // of omega^(-p0) in the spectrum of V
};

/// M = sum_r Delta(line point r). Verifies M hermitian, M^2 = M, Tr M = 1 and
/// V M = omega^(-p0) M with V = omega^((N-1) kappa lambda / 2) S^kappa P^lambda,
/// and that omega^(-p0) is a simple eigenvalue of V. Odd N only.
LineProjectorCheck line_projector_check(const FanoOperatorSet& f, const SL2Element& g, int p0,
                                        double tolerance = kDefaultTolerance);

/// Property codes used in the last witness slot of line_projector_check.
enum class ProjectorProperty : int { hermitian = 0, idempotent = 1, trace = 2, eigen = 3, multiplicity = 4 };

}  // namespace latwig
