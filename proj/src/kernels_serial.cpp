#include <cmath>

#include "latwig/kernels.hpp"

namespace latwig::kernels {

double covariance_residual(const FanoCoefficients& c, const SL2Element& g, const RootTable& w, int s, int t, int n,
                           int m) {
  const Complex lhs = c(g.nu * s + g.lambda * t, g.mu * s + g.kappa * t, n, m);
  const Complex rhs = w(phase_phi(g, n, m, c.dim())) * c(s, t, g.nu * n - g.mu * m, -g.lambda * n + g.kappa * m);
  return std::abs(lhs - rhs);
}

namespace serial {

FanoOperatorSet assemble(const PositionCoefficients& a) {
  const LatticeDim dim = a.dim();
  const int N = dim.n();
  const ComplexMatrix S = shift_matrix(dim);
  const ComplexMatrix P = clock_matrix(dim);
  std::vector<ComplexMatrix> s_pow(static_cast<std::size_t>(N), ComplexMatrix::Identity(N, N));
  std::vector<ComplexMatrix> p_pow(static_cast<std::size_t>(N), ComplexMatrix::Identity(N, N));
  for (int k = 1; k < N; ++k) {
    s_pow[static_cast<std::size_t>(k)] = s_pow[static_cast<std::size_t>(k - 1)] * S;
    p_pow[static_cast<std::size_t>(k)] = p_pow[static_cast<std::size_t>(k - 1)] * P;
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(dim.sites());
  for (int q = 0; q < N; ++q)
    for (int p = 0; p < N; ++p) {
      ComplexMatrix d = ComplexMatrix::Zero(N, N);
      for (int n = 0; n < N; ++n)
        for (int m = 0; m < N; ++m)
          d += a(q, p, n, m) * (s_pow[static_cast<std::size_t>(n)] * p_pow[static_cast<std::size_t>(m)]);
      ops.push_back(std::move(d));
    }
  return FanoOperatorSet(dim, std::move(ops));
}

CheckResult orthogonality_site(const FanoOperatorSet& f, double tolerance) {
  const int N = f.n();
  const double invN = 1.0 / N;
  ViolationTracker tracker("orthogonality_site", tolerance);
  for (int q = 0; q < N; ++q)
    for (int p = 0; p < N; ++p)
      for (int q2 = 0; q2 < N; ++q2)
        for (int p2 = 0; p2 < N; ++p2) {
          const Complex tr = (f.at(q, p) * f.at(q2, p2).adjoint()).trace();
          const double expected = (q == q2 && p == p2) ? invN : 0.0;
          tracker.observe(std::abs(tr - expected), [&] { return Witness{q, p, q2, p2}; });
        }
  return tracker.result();
}

CheckResult covariance_audit(const FanoCoefficients& c, std::span<const SL2Element> elements, double tolerance) {
  // Compares T_g ta against ta; the tuple is in T_g's coordinates.
  const int N = c.n();
  ViolationTracker tracker("covariance", tolerance);
  for (const auto& g : elements) {
    const FanoCoefficients moved = transform(c, g);
    for (int s = 0; s < N; ++s)
      for (int t = 0; t < N; ++t)
        for (int n = 0; n < N; ++n)
          for (int m = 0; m < N; ++m)
            tracker.observe(std::abs(moved(s, t, n, m) - c(s, t, n, m)),
                            [&] { return Witness{g.kappa, g.lambda, g.mu, g.nu, s, t, n, m}; });
  }
  return tracker.result();
}

std::vector<Complex> wigner_values(const FanoOperatorSet& f, const ComplexMatrix& rho) {
  std::vector<Complex> out;
  out.reserve(f.operators().size());
  for (const auto& d : f.operators()) out.push_back((d * rho).trace());
  return out;
}

}  // namespace serial
}  // namespace latwig::kernels
