#pragma once

// Hot loops in two builds: `omp` splits independent work items (sites, site
// pairs, group elements) across OpenMP threads and merges results in a fixed
// order; `serial` is the plain dense-matrix formulation kept as the reference
// the parallel kernels are tested and benchmarked against.

#include <span>
#include <vector>

#include "latwig/fano.hpp"

namespace latwig::kernels {

namespace serial {

FanoOperatorSet assemble(const PositionCoefficients& a);
CheckResult orthogonality_site(const FanoOperatorSet& f, double tolerance);
CheckResult covariance_audit(const FanoCoefficients& c, std::span<const SL2Element> elements, double tolerance);
/// W(q, p) = Tr[Delta(q, p) rho], row-major in (q, p).
std::vector<Complex> wigner_values(const FanoOperatorSet& f, const ComplexMatrix& rho);

}  // namespace serial

namespace omp {

FanoOperatorSet assemble(const PositionCoefficients& a);
CheckResult orthogonality_site(const FanoOperatorSet& f, double tolerance);
CheckResult covariance_audit(const FanoCoefficients& c, std::span<const SL2Element> elements, double tolerance);
std::vector<Complex> wigner_values(const FanoOperatorSet& f, const ComplexMatrix& rho);

}  // namespace omp

/// Violation of covariance at one index tuple; shared by both builds.
double covariance_residual(const FanoCoefficients& c, const SL2Element& g, const RootTable& w, int s, int t, int n,
                           int m);

}  // namespace latwig::kernels
