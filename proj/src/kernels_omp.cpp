#include <cmath>

#include "latwig/kernels.hpp"

namespace latwig::kernels::omp {

FanoOperatorSet assemble(const PositionCoefficients& a) {
  const LatticeDim dim = a.dim();
  const int N = dim.n();
  const RootTable w(dim);
  const int sites = N * N;
  std::vector<ComplexMatrix> ops(static_cast<std::size_t>(sites));
  // (S^n P^m)(r, r + n) = omega^(m (r + n)): one nonzero per row.
#pragma omp parallel for schedule(static)
  for (int site = 0; site < sites; ++site) {
    const int q = site / N;
    const int p = site % N;
    ComplexMatrix d = ComplexMatrix::Zero(N, N);
    for (int n = 0; n < N; ++n)
      for (int r = 0; r < N; ++r) {
        const int col = (r + n) % N;
        Complex acc(0.0, 0.0);
        for (int m = 0; m < N; ++m) acc += a(q, p, n, m) * w.pow(static_cast<std::int64_t>(m) * col);
        d(r, col) = acc;
      }
    ops[static_cast<std::size_t>(site)] = std::move(d);
  }
  return FanoOperatorSet(dim, std::move(ops));
}

CheckResult orthogonality_site(const FanoOperatorSet& f, double tolerance) {
  const int N = f.n();
  const int sites = N * N;
  const double invN = 1.0 / N;
  std::vector<CheckResult> rows(static_cast<std::size_t>(sites));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < sites; ++i) {
    ViolationTracker tracker("orthogonality_site", tolerance);
    const ComplexMatrix& a = f.operators()[static_cast<std::size_t>(i)];
    for (int j = 0; j < sites; ++j) {
      const ComplexMatrix& b = f.operators()[static_cast<std::size_t>(j)];
      // Tr[A B^dagger] = sum_rc A(r,c) conj(B(r,c))
      const Complex tr = (a.array() * b.array().conjugate()).sum();
      const double expected = i == j ? invN : 0.0;
      tracker.observe(std::abs(tr - expected), [&] { return Witness{i / N, i % N, j / N, j % N}; });
    }
    rows[static_cast<std::size_t>(i)] = tracker.result();
  }
  ViolationTracker merged("orthogonality_site", tolerance);
  for (const auto& r : rows) merged.merge(r);
  return merged.result();
}

CheckResult covariance_audit(const FanoCoefficients& c, std::span<const SL2Element> elements, double tolerance) {
  const int N = c.n();
  const RootTable w(c.dim());
  const int count = static_cast<int>(elements.size());
  std::vector<CheckResult> per(elements.size());
#pragma omp parallel for schedule(dynamic)
  for (int e = 0; e < count; ++e) {
    const SL2Element& g = elements[static_cast<std::size_t>(e)];
    ViolationTracker tracker("covariance", tolerance);
    for (int s = 0; s < N; ++s)
      for (int t = 0; t < N; ++t)
        for (int n = 0; n < N; ++n)
          for (int m = 0; m < N; ++m)
            tracker.observe(covariance_residual(c, g, w, s, t, n, m),
                            [&] { return Witness{g.kappa, g.lambda, g.mu, g.nu, s, t, n, m}; });
    per[static_cast<std::size_t>(e)] = tracker.result();
  }
  ViolationTracker merged("covariance", tolerance);
  for (const auto& r : per) merged.merge(r);
  return merged.result();
}

std::vector<Complex> wigner_values(const FanoOperatorSet& f, const ComplexMatrix& rho) {
  const int sites = static_cast<int>(f.operators().size());
  std::vector<Complex> out(static_cast<std::size_t>(sites));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < sites; ++i) {
    // Tr[D rho] = sum_rc D(r,c) rho(c,r)
    const ComplexMatrix& d = f.operators()[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = (d.array() * rho.transpose().array()).sum();
  }
  return out;
}

}  // namespace latwig::kernels::omp
