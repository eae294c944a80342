#pragma once

// Prime-N state tomography from the N + 1 parallel-line families: simulate
// line marginals (exact or multinomial), invert the discrete Radon transform
// and map back to a density operator.

#include <cstdint>
#include <vector>

#include "latwig/wigner.hpp"

namespace latwig {

struct MarginalDataset {
  int n = 0;
  std::uint64_t shots = 0;  // 0 for exact probabilities
  std::uint64_t seed = 0;
  std::vector<MarginalDistribution> families;
};

struct ReconstructionResult {
  WignerGrid wigner;
  /// Hermitized and, for sampled data, trace-renormalized; not projected
  /// onto the positive cone.
  ComplexMatrix rho;
  /// Max entrywise |rho - rho_true|; negative when no ground truth was given.
  double fidelity_error = -1.0;
};

/// (1, lambda, 0, 1) for lambda = 0..N-1, then (0, 1, -1, 0). Prime N only.
std::vector<SL2Element> mub_line_families(LatticeDim n);

/// shots = 0: exact line sums of the Wigner function. shots > 0: an
/// independent multinomial draw per family from a substream of `seed`.
MarginalDataset simulate_marginals(const DensityMatrix& rho, const FanoOperatorSet& f, std::uint64_t shots,
                                   std::uint64_t seed, double tolerance = kDefaultTolerance);

/// W(q, p) = (sum_f m_f(line of f through (q, p)) - 1) / N.
WignerGrid reconstruct_wigner(const MarginalDataset& d);

ReconstructionResult reconstruct_density(const MarginalDataset& d, const FanoOperatorSet& f,
                                         const DensityMatrix* truth = nullptr,
                                         double tolerance = kDefaultTolerance);

/// Multinomial counts for one family, normalized to frequencies.
std::vector<double> sample_frequencies(const std::vector<double>& probabilities, std::uint64_t shots,
                                       std::uint64_t seed, std::uint64_t stream);

}  // namespace latwig
