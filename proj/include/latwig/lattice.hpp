#pragma once

// Modular arithmetic on the N x N lattice phase space: residues, gcd
// decompositions, SL(2, Z_N) elements with exact integer lifts, and lines.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace latwig {

/// Lattice size N. The phase space has N^2 sites (q, p) with q, p in Z_N.
class LatticeDim {
 public:
  explicit LatticeDim(int n);

  int n() const noexcept { return n_; }
  bool odd() const noexcept { return (n_ % 2) != 0; }
  bool even() const noexcept { return !odd(); }
  std::size_t sites() const noexcept { return static_cast<std::size_t>(n_) * n_; }

  friend bool operator==(LatticeDim a, LatticeDim b) noexcept { return a.n_ == b.n_; }

 private:
  int n_;
};

/// Default upper bound on N for exhaustive audits.
inline constexpr int kAuditBound = 9;

/// Representative of x mod N in [0, N).
int canonical_rep(std::int64_t x, LatticeDim n) noexcept;

/// Greatest common divisor of |a| and |b|; gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;

bool is_prime(int n) noexcept;

/// Element [[kappa, mu], [lambda, nu]] of SL(2, Z), acting on a site column
/// (q, p) as (kappa*q + mu*p, lambda*q + nu*p). Entries are integer lifts, not
/// residues: the determinant is exactly 1 over the integers.
struct SL2Element {
  std::int64_t kappa = 1;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  std::int64_t nu = 1;

  std::int64_t determinant() const noexcept { return kappa * nu - mu * lambda; }

  /// Matrix product this * rhs.
  SL2Element operator*(const SL2Element& rhs) const noexcept;

  /// Same residue class mod N, different integer lift.
  SL2Element relift(LatticeDim n) const noexcept;

  std::vector<std::int64_t> entries() const { return {kappa, lambda, mu, nu}; }
  std::string str() const;

  friend bool operator==(const SL2Element&, const SL2Element&) = default;
};

inline constexpr SL2Element kIdentity{1, 0, 0, 1};

struct GcdDecomposition {
  int xi = 0;
  int sigma = 0;
  int tau = 0;
};

/// s = xi * sigma, t = xi * tau with gcd(sigma, tau) = 1. Throws
/// std::invalid_argument for (0, 0) or non-canonical input.
GcdDecomposition gcd_decompose(int s, int t, LatticeDim n);

/// Completes a coprime pair (kappa, lambda) to an element with determinant 1.
/// mu is the smallest nonnegative value below |kappa| that works; for
/// kappa = 0 it is -lambda with nu = 0. Throws on non-coprime input.
SL2Element sl2_complete(std::int64_t kappa, std::int64_t lambda);

/// One integer lift per residue class of SL(2, Z_N), in lexicographic order
/// of the residue quadruple (kappa, lambda, mu, nu).
std::vector<SL2Element> sl2_enumerate(LatticeDim n, int audit_bound = kAuditBound);

/// Each enumerated element followed by its relift().
std::vector<SL2Element> sl2_enumerate_with_lifts(LatticeDim n, int audit_bound = kAuditBound);

/// |SL(2, Z_N)| = N^3 * prod_{p | N} (1 - 1/p^2).
std::int64_t sl2_order(LatticeDim n) noexcept;

struct Site {
  int q = 0;
  int p = 0;
  friend bool operator==(const Site&, const Site&) = default;
};

/// The line kappa*p - lambda*q = p0 (mod N), traversed as
/// r -> (kappa*r + mu*p0, lambda*r + nu*p0).
struct LatticeLine {
  SL2Element g;
  int p0 = 0;
  std::vector<Site> points;
};

LatticeLine line_points(const SL2Element& g, int p0, LatticeDim n);

/// Label p0 of the line with direction (kappa, lambda) through a site.
int line_label(const SL2Element& g, Site site, LatticeDim n) noexcept;

}  // namespace latwig
