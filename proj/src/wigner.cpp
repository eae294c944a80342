#include "latwig/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "latwig/kernels.hpp"

namespace latwig {

WignerGrid::WignerGrid(LatticeDim n, std::vector<Complex> values) : dim_(n), values_(std::move(values)) {
  if (values_.size() != n.sites()) throw std::invalid_argument("WignerGrid: need N^2 values");
}

Complex WignerGrid::total() const {
  Complex acc(0.0, 0.0);
  for (const auto& v : values_) acc += v;
  return acc;
}

double WignerGrid::max_imag() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

double WignerGrid::distance(const WignerGrid& other) const {
  if (!(dim_ == other.dim_)) throw std::invalid_argument("WignerGrid::distance: dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) d = std::max(d, std::abs(values_[i] - other.values_[i]));
  return d;
}

WignerGrid wigner_from_operator(const ComplexMatrix& rho, const FanoOperatorSet& f) {
  if (rho.rows() != f.n() || rho.cols() != f.n())
    throw std::invalid_argument("wigner_from_density: operator is " + std::to_string(rho.rows()) + "x" +
                                std::to_string(rho.cols()) + " but the Fano set has N=" + std::to_string(f.n()));
  return WignerGrid(f.dim(), kernels::omp::wigner_values(f, rho));
}

WignerGrid wigner_from_density(const DensityMatrix& rho, const FanoOperatorSet& f) {
  return wigner_from_operator(rho.matrix(), f);
}

ComplexMatrix density_from_wigner(const WignerGrid& w, const FanoOperatorSet& f, double tolerance) {
  if (!(w.dim() == f.dim())) throw std::invalid_argument("density_from_wigner: dimension mismatch");
  const CheckResult ortho = kernels::omp::orthogonality_site(f, tolerance);
  if (!ortho.pass)
    throw std::invalid_argument("density_from_wigner: Fano set is not trace-orthogonal (violation " +
                                std::to_string(ortho.max_violation) + ")");
  const int N = f.n();
  ComplexMatrix rho = ComplexMatrix::Zero(N, N);
  for (int q = 0; q < N; ++q)
    for (int p = 0; p < N; ++p) rho += w(q, p) * f.at(q, p).adjoint();
  return static_cast<double>(N) * rho;
}

MarginalDistribution marginal_along_line(const WignerGrid& w, const SL2Element& g) {
  const LatticeDim dim = w.dim();
  MarginalDistribution out{g, std::vector<double>(static_cast<std::size_t>(dim.n()), 0.0), 0.0};
  for (int p0 = 0; p0 < dim.n(); ++p0) {
    const LatticeLine line = line_points(g, p0, dim);
    Complex acc(0.0, 0.0);
    for (const Site& site : line.points) acc += w(site.q, site.p);
    out.weights[static_cast<std::size_t>(p0)] = acc.real();
    out.max_imag = std::max(out.max_imag, std::abs(acc.imag()));
  }
  return out;
}

std::vector<double> position_marginals(const WignerGrid& w) {
  std::vector<double> out(static_cast<std::size_t>(w.n()), 0.0);
  for (int q = 0; q < w.n(); ++q)
    for (int p = 0; p < w.n(); ++p) out[static_cast<std::size_t>(q)] += w(q, p).real();
  return out;
}

std::vector<double> momentum_marginals(const WignerGrid& w) {
  std::vector<double> out(static_cast<std::size_t>(w.n()), 0.0);
  for (int p = 0; p < w.n(); ++p)
    for (int q = 0; q < w.n(); ++q) out[static_cast<std::size_t>(p)] += w(q, p).real();
  return out;
}

LineProjectorCheck line_projector_check(const FanoOperatorSet& f, const SL2Element& g, int p0_in, double tolerance) {
  const LatticeDim dim = f.dim();
  const int N = dim.n();
  if (dim.even())
    throw std::invalid_argument("line_projector_check: no Fano operator satisfies all conditions for even N=" +
                                std::to_string(N));
  const int p0 = canonical_rep(p0_in, dim);
  const LatticeLine line = line_points(g, p0, dim);

  LineProjectorCheck out;
  out.projector = ComplexMatrix::Zero(N, N);
  for (const Site& site : line.points) out.projector += f.at(site.q, site.p);
  const ComplexMatrix& M = out.projector;

  const RootTable w(dim);
  const std::int64_t two_n = 2 * static_cast<std::int64_t>(N);
  const auto r2 = [two_n](std::int64_t x) { return ((x % two_n) + two_n) % two_n; };
  const Complex a_s = w.half_pow(r2(static_cast<std::int64_t>(N - 1) * r2(r2(g.kappa) * r2(g.lambda))));
  const ComplexMatrix V = a_s * monomial(canonical_rep(g.kappa, dim), canonical_rep(g.lambda, dim), dim);
  const Complex eigenvalue = w.pow(-p0);

  out.hermiticity = max_abs(M - M.adjoint());
  out.idempotence = max_abs(M * M - M);
  out.trace = std::abs(M.trace() - Complex(1.0, 0.0));
  out.eigen = max_abs(V * M - eigenvalue * M);

  Eigen::ComplexEigenSolver<ComplexMatrix> es(V, false);
  // Eigenvalues of V are N-th roots of unity, at least 2 sin(pi/N) apart.
  const double window = N > 1 ? std::sin(std::numbers::pi / N) : 0.5;
  for (int i = 0; i < N; ++i)
    if (std::abs(es.eigenvalues()(i) - eigenvalue) < window) ++out.multiplicity;

  ViolationTracker tracker("line_projector", tolerance);
  const auto witness = [&](ProjectorProperty prop) {
    return [&g, p0, prop] { return Witness{g.kappa, g.lambda, g.mu, g.nu, p0, static_cast<int>(prop)}; };
  };
  tracker.observe(out.hermiticity, witness(ProjectorProperty::hermitian));
  tracker.observe(out.idempotence, witness(ProjectorProperty::idempotent));
  tracker.observe(out.trace, witness(ProjectorProperty::trace));
  tracker.observe(out.eigen, witness(ProjectorProperty::eigen));
  out.result = tracker.result();
  if (out.multiplicity != 1) {
    out.result.pass = false;
    if (!out.result.witness) out.result.witness = witness(ProjectorProperty::multiplicity)();
  }
  return out;
}

}  // namespace latwig
