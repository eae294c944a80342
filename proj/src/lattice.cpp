#include "latwig/lattice.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

namespace latwig {

LatticeDim::LatticeDim(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("lattice size must be >= 1, got " + std::to_string(n));
}

int canonical_rep(std::int64_t x, LatticeDim n) noexcept {
  const std::int64_t m = n.n();
  std::int64_t r = x % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

SL2Element SL2Element::operator*(const SL2Element& rhs) const noexcept {
  // [[k, m], [l, n]] * [[k', m'], [l', n']]
  return SL2Element{kappa * rhs.kappa + mu * rhs.lambda,
                    lambda * rhs.kappa + nu * rhs.lambda,
                    kappa * rhs.mu + mu * rhs.nu,
                    lambda * rhs.mu + nu * rhs.nu};
}

SL2Element SL2Element::relift(LatticeDim n) const noexcept {
  // Right-multiply by [[1 + N^2, N], [N, 1]], which is the identity mod N and
  // has determinant 1, so every entry moves by a multiple of N.
  const std::int64_t N = n.n();
  return *this * SL2Element{1 + N * N, N, N, 1};
}

std::string SL2Element::str() const {
  return "(" + std::to_string(kappa) + "," + std::to_string(lambda) + "," + std::to_string(mu) + "," +
         std::to_string(nu) + ")";
}

GcdDecomposition gcd_decompose(int s, int t, LatticeDim n) {
  if (s < 0 || s >= n.n() || t < 0 || t >= n.n())
    throw std::invalid_argument("gcd_decompose: arguments must be canonical residues");
  if (s == 0 && t == 0) throw std::invalid_argument("gcd_decompose: (0,0) has no direction");
  const int xi = static_cast<int>(gcd(s, t));
  return GcdDecomposition{xi, s / xi, t / xi};
}

SL2Element sl2_complete(std::int64_t kappa, std::int64_t lambda) {
  if (gcd(kappa, lambda) != 1)
    throw std::invalid_argument("sl2_complete: (" + std::to_string(kappa) + "," + std::to_string(lambda) +
                                ") is not coprime");
  if (kappa == 0) {
    // -mu * lambda = 1 forces lambda = +-1.
    return SL2Element{0, lambda, -lambda, 0};
  }
  const std::int64_t ak = kappa < 0 ? -kappa : kappa;
  // Need kappa * nu = 1 + mu * lambda, i.e. mu * lambda = -1 (mod |kappa|).
  for (std::int64_t mu = 0; mu < ak; ++mu) {
    const std::int64_t num = 1 + mu * lambda;
    if (num % kappa == 0) return SL2Element{kappa, lambda, mu, num / kappa};
  }
  throw std::logic_error("sl2_complete: no completion found");  // unreachable for coprime input
}

std::int64_t sl2_order(LatticeDim n) noexcept {
  std::int64_t N = n.n();
  std::int64_t order = N * N * N;
  std::int64_t rest = N;
  for (std::int64_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    order = order / (p * p) * (p * p - 1);
  }
  return order;
}

namespace {

SL2Element lift_class(int a, int b, int c, int d, LatticeDim n) {
  const int N = n.n();
  // Coprime lift of the first column inside [0, 2N).
  constexpr std::array<std::pair<int, int>, 4> kShifts{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  std::int64_t kappa = -1;
  std::int64_t lambda = -1;
  for (auto [dk, dl] : kShifts) {
    if (gcd(a + dk * N, b + dl * N) == 1) {
      kappa = a + dk * N;
      lambda = b + dl * N;
      break;
    }
  }
  if (kappa < 0) {
    // Wider search; never reached for N <= 9 but kept total for larger N.
    for (int dk = 0; kappa < 0 && dk < 4 * N; ++dk)
      for (int dl = 0; dl < 4 * N; ++dl)
        if (gcd(a + dk * N, b + dl * N) == 1) {
          kappa = a + dk * N;
          lambda = b + dl * N;
          break;
        }
  }
  if (kappa < 0) throw std::logic_error("sl2_enumerate: no coprime lift");
  SL2Element g = sl2_complete(kappa, lambda);
  // All completions are (mu + j*kappa, nu + j*lambda); pick j landing on (c, d).
  for (int j = 0; j < N; ++j) {
    if (canonical_rep(g.mu + j * kappa, n) == c && canonical_rep(g.nu + j * lambda, n) == d) {
      g.mu += j * kappa;
      g.nu += j * lambda;
      return g;
    }
  }
  throw std::logic_error("sl2_enumerate: residue class not reachable");
}

}  // namespace

std::vector<SL2Element> sl2_enumerate(LatticeDim n, int audit_bound) {
  const int N = n.n();
  if (N > audit_bound)
    throw std::domain_error("sl2_enumerate: N=" + std::to_string(N) + " exceeds audit bound " +
                            std::to_string(audit_bound));
  std::vector<SL2Element> out;
  out.reserve(static_cast<std::size_t>(sl2_order(n)));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d)
          if (canonical_rep(static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(c) * b, n) ==
              canonical_rep(1, n))
            out.push_back(lift_class(a, b, c, d, n));
  return out;
}

std::vector<SL2Element> sl2_enumerate_with_lifts(LatticeDim n, int audit_bound) {
  std::vector<SL2Element> out;
  for (const auto& g : sl2_enumerate(n, audit_bound)) {
    out.push_back(g);
    out.push_back(g.relift(n));
  }
  return out;
}

LatticeLine line_points(const SL2Element& g, int p0, LatticeDim n) {
  if (gcd(g.kappa, g.lambda) != 1) throw std::invalid_argument("line_points: degenerate direction " + g.str());
  LatticeLine line{g, canonical_rep(p0, n), {}};
  line.points.reserve(static_cast<std::size_t>(n.n()));
  for (int r = 0; r < n.n(); ++r)
    line.points.push_back(
        Site{canonical_rep(g.kappa * r + g.mu * p0, n), canonical_rep(g.lambda * r + g.nu * p0, n)});
  return line;
}

int line_label(const SL2Element& g, Site site, LatticeDim n) noexcept {
  return canonical_rep(g.kappa * site.p - g.lambda * site.q, n);
}

}  // namespace latwig
