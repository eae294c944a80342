#pragma once

// Fano operators Delta(q, p) expanded in clock/shift monomials,
//
//   Delta(q, p) = sum_{n,m} a(q, p; n, m) S^n P^m,
//   a(q, p; n, m) = sum_{s,t} omega^(-qs) omega^(pt) ta(s, t; n, m),
//
// together with the audits of the marginal, hermiticity, orthogonality and
// SL(2, Z_N) covariance conditions at both the operator and coefficient level.
//
// Coefficient-level violations are reported in operator units: the raw
// coefficient residual is scaled by the factor a single-coefficient defect
// picks up at the operator level (N for marginals, 1 for hermiticity, N for
// the site Gram matrix, N^2 for the index Gram matrix), so the two levels are
// directly comparable.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "latwig/lattice.hpp"
#include "latwig/operators.hpp"
#include "latwig/report.hpp"

namespace latwig {

/// Dense rank-4 complex table on Z_N^4, stored only on canonical indices.
template <class Tag>
class Rank4Table {
 public:
  explicit Rank4Table(LatticeDim n)
      : dim_(n), data_(static_cast<std::size_t>(n.n()) * n.n() * n.n() * n.n(), Complex(0.0, 0.0)) {}

  LatticeDim dim() const noexcept { return dim_; }
  int n() const noexcept { return dim_.n(); }

  /// Index arithmetic mod N; any integer arguments are reduced first.
  std::size_t index(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l) const noexcept {
    const std::size_t N = static_cast<std::size_t>(dim_.n());
    return ((static_cast<std::size_t>(canonical_rep(i, dim_)) * N + canonical_rep(j, dim_)) * N +
            canonical_rep(k, dim_)) *
               N +
           canonical_rep(l, dim_);
  }

  Complex& operator()(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l) noexcept {
    return data_[index(i, j, k, l)];
  }
  const Complex& operator()(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l) const noexcept {
    return data_[index(i, j, k, l)];
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  /// Max entrywise |this - other|.
  double distance(const Rank4Table& other) const;

 private:
  LatticeDim dim_;
  std::vector<Complex> data_;
};

struct FourierTag {};
struct PositionTag {};

/// ta(s, t; n, m), the Fourier-transformed expansion coefficients.
using FanoCoefficients = Rank4Table<FourierTag>;
/// a(q, p; n, m), the position-space expansion coefficients.
using PositionCoefficients = Rank4Table<PositionTag>;

class FanoOperatorSet {
 public:
  FanoOperatorSet(LatticeDim n, std::vector<ComplexMatrix> operators);

  LatticeDim dim() const noexcept { return dim_; }
  int n() const noexcept { return dim_.n(); }
  const ComplexMatrix& at(int q, int p) const;
  const std::vector<ComplexMatrix>& operators() const noexcept { return ops_; }

 private:
  LatticeDim dim_;
  std::vector<ComplexMatrix> ops_;  // row-major in (q, p)
};

// -- construction -----------------------------------------------------------

/// (1/N^2) omega^(-st(N+1)/2) delta_{s,m} delta_{t,n}. Odd N only.
FanoCoefficients coefficients_odd(LatticeDim n);
/// The even/odd-n case split form of the odd-N solution. Odd N only.
FanoCoefficients coefficients_parity_split(LatticeDim n);
/// The table forced by the line derivation, for any N; for even N the phase
/// exponent st(N+1)/2 may be a half-integer.
FanoCoefficients coefficients_candidate(LatticeDim n);

PositionCoefficients coefficients_to_position(const FanoCoefficients& c);
/// ta(s, t; n, m) = (1/N^2) sum_{q,p} omega^(qs) omega^(-pt) a(q, p; n, m).
FanoCoefficients position_to_coefficients(const PositionCoefficients& a);

FanoOperatorSet assemble(const FanoCoefficients& c);

// -- condition audits -------------------------------------------------------

/// marginal_q: sum_p Delta(q,p) = |q><q|;  marginal_p: sum_q Delta(q,p) = |p><p|.
std::vector<CheckResult> check_marginals(const FanoOperatorSet& f, double tolerance = kDefaultTolerance);
/// marginal_q_coefficients / marginal_p_coefficients: the t = 0 and s = 0 slices.
std::vector<CheckResult> check_marginals_coefficients(const FanoCoefficients& c,
                                                      double tolerance = kDefaultTolerance);
/// hermiticity (operators) and hermiticity_coefficients
/// (ta(s,t;n,m) = omega^(-nm) conj ta(-s,-t;-n,-m)).
std::vector<CheckResult> check_hermiticity(const FanoCoefficients& c, const FanoOperatorSet& f,
                                           double tolerance = kDefaultTolerance);
/// orthogonality_site, orthogonality_index and their _coefficients forms.
std::vector<CheckResult> check_orthogonality(const FanoCoefficients& c, const FanoOperatorSet& f,
                                             double tolerance = kDefaultTolerance);

/// phi'(n, m) = (1/2){nu lambda n(N-n) + mu kappa m(N-m)} + mu lambda n m on
/// canonical n, m and the element's integer lifts.
PhaseExponent phase_phi(const SL2Element& g, int n_idx, int m_idx, LatticeDim dim);

/// (T_g ta)(s,t;n,m) = omega^phi'(n,m) ta(kappa s - lambda t, nu t - mu s;
/// nu n - mu m, -lambda n + kappa m). Covariance under g means T_g ta = ta.
FanoCoefficients transform(const FanoCoefficients& c, const SL2Element& g);

/// covariance under a single element, over all (s,t,n,m).
/// Witness: (kappa, lambda, mu, nu, s, t, n, m).
CheckResult check_covariance(const FanoCoefficients& c, const SL2Element& g,
                             double tolerance = kDefaultTolerance);
/// covariance over every element, first witness in the order given.
CheckResult audit_covariance(const FanoCoefficients& c, std::span<const SL2Element> elements,
                             double tolerance = kDefaultTolerance);

// -- derivation from the marginal condition plus covariance --------------------

struct DerivedValue {
  GcdDecomposition decomposition;
  SL2Element element;
  int n = 0;  // support point of the slice ta(s, t; ., .)
  int m = 0;
  Complex value;
};

/// Value of ta(s, t; t, s) forced by mapping (s, t) onto the axis slice
/// (0, xi) with kappa = tau, lambda = sigma. Throws for (0, 0).
DerivedValue derive_via_line(LatticeDim dim, int s, int t);

/// The slice ta(s, t; ., .) (row n, column m) implied by g and the marginal
/// condition, or nullopt when g does not carry (s, t) onto an axis.
std::optional<ComplexMatrix> route_slice(const SL2Element& g, int s, int t, LatticeDim dim);

/// Table built from the marginal condition on the (0, 0) slice and derive_via_line
/// everywhere else.
FanoCoefficients derived_table(LatticeDim dim);

/// route_consistency across every element (two lifts each) reaching an axis,
/// then derived_* checks of the table from derived_table. Route witness:
/// (s, t, n, m, g1..., g2...).
ConditionReport uniqueness_audit(LatticeDim dim, double tolerance = kDefaultTolerance,
                                 int audit_bound = kAuditBound);

/// Everything: operator- and coefficient-level conditions, covariance over
/// the full group with two lifts, and the uniqueness audit. Uses
/// coefficients_odd for odd N and coefficients_candidate for even N.
ConditionReport full_audit(LatticeDim dim, double tolerance = kDefaultTolerance, int audit_bound = kAuditBound);

/// Same suite on an arbitrary table (no uniqueness audit).
ConditionReport audit_table(const FanoCoefficients& c, double tolerance = kDefaultTolerance,
                            int audit_bound = kAuditBound);

/// Checks whose failure witnesses non-existence for even N.
inline constexpr std::string_view kInfeasibilityChecks[] = {
    "hermiticity", "hermiticity_coefficients", "covariance", "route_consistency"};

}  // namespace latwig
