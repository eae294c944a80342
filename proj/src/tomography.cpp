#include "latwig/tomography.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "latwig/kernels.hpp"

namespace latwig {

std::vector<SL2Element> mub_line_families(LatticeDim n) {
  if (!is_prime(n.n()))
    throw std::invalid_argument("mub_line_families: N=" + std::to_string(n.n()) + " is not prime");
  std::vector<SL2Element> out;
  out.reserve(static_cast<std::size_t>(n.n()) + 1);
  for (int lambda = 0; lambda < n.n(); ++lambda) out.push_back(SL2Element{1, lambda, 0, 1});
  out.push_back(SL2Element{0, 1, -1, 0});
  return out;
}

std::vector<double> sample_frequencies(const std::vector<double>& probabilities, std::uint64_t shots,
                                       std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  // Sequential conditional binomials.
  std::vector<double> out(probabilities.size(), 0.0);
  std::uint64_t remaining = shots;
  double mass = 1.0;
  for (std::size_t i = 0; i < probabilities.size() && remaining > 0; ++i) {
    const double p = std::clamp(probabilities[i], 0.0, 1.0);
    std::uint64_t k = remaining;
    if (i + 1 < probabilities.size()) {
      const double cond = mass > 0.0 ? std::clamp(p / mass, 0.0, 1.0) : 0.0;
      std::binomial_distribution<std::uint64_t> binom(remaining, cond);
      k = binom(rng);
    }
    out[i] = static_cast<double>(k) / static_cast<double>(shots);
    remaining -= k;
    mass -= p;
  }
  return out;
}

namespace {

void require_valid_fano_set(const FanoOperatorSet& f, double tolerance, const char* who) {
  for (const auto& c : check_marginals(f, tolerance))
    if (!c.pass) throw std::invalid_argument(std::string(who) + ": Fano set fails " + c.name);
  double herm = 0.0;
  for (const auto& op : f.operators()) herm = std::max(herm, max_abs(op - op.adjoint()));
  if (herm > tolerance) throw std::invalid_argument(std::string(who) + ": Fano set is not hermitian");
  if (!kernels::omp::orthogonality_site(f, tolerance).pass)
    throw std::invalid_argument(std::string(who) + ": Fano set is not trace-orthogonal");
}

void require_complete(const MarginalDataset& d, LatticeDim dim) {
  const std::vector<SL2Element> expected = mub_line_families(dim);
  if (d.families.size() != expected.size())
    throw std::invalid_argument("reconstruct: expected " + std::to_string(expected.size()) + " families, got " +
                                std::to_string(d.families.size()));
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& fam = d.families[i];
    if (canonical_rep(fam.g.kappa, dim) != canonical_rep(expected[i].kappa, dim) ||
        canonical_rep(fam.g.lambda, dim) != canonical_rep(expected[i].lambda, dim))
      throw std::invalid_argument("reconstruct: family " + std::to_string(i) + " has direction " + fam.g.str());
    if (fam.weights.size() != static_cast<std::size_t>(dim.n()))
      throw std::invalid_argument("reconstruct: family " + std::to_string(i) + " needs N weights");
  }
}

}  // namespace

MarginalDataset simulate_marginals(const DensityMatrix& rho, const FanoOperatorSet& f, std::uint64_t shots,
                                   std::uint64_t seed, double tolerance) {
  const LatticeDim dim = f.dim();
  if (dim.even()) throw std::invalid_argument("simulate_marginals: N must be odd");
  const std::vector<SL2Element> families = mub_line_families(dim);
  require_valid_fano_set(f, tolerance, "simulate_marginals");

  const WignerGrid w = wigner_from_density(rho, f);
  MarginalDataset d{dim.n(), shots, seed, {}};
  // Family i draws from substream i + 1 so results do not depend on order.
  std::uint64_t stream = 0;
  for (const auto& g : families) {
    MarginalDistribution m = marginal_along_line(w, g);
    ++stream;
    if (shots > 0) m.weights = sample_frequencies(m.weights, shots, seed, stream);
    d.families.push_back(std::move(m));
  }
  return d;
}

WignerGrid reconstruct_wigner(const MarginalDataset& d) {
  const LatticeDim dim(d.n);
  require_complete(d, dim);
  const int N = dim.n();
  WignerGrid w(dim);
  for (int q = 0; q < N; ++q)
    for (int p = 0; p < N; ++p) {
      double acc = 0.0;
      for (const auto& fam : d.families)
        acc += fam.weights[static_cast<std::size_t>(line_label(fam.g, Site{q, p}, dim))];
      w(q, p) = (acc - 1.0) / N;
    }
  return w;
}

ReconstructionResult reconstruct_density(const MarginalDataset& d, const FanoOperatorSet& f,
                                         const DensityMatrix* truth, double tolerance) {
  if (d.n != f.n()) throw std::invalid_argument("reconstruct_density: dimension mismatch");
  WignerGrid w = reconstruct_wigner(d);
  ComplexMatrix rho = density_from_wigner(w, f, tolerance);
  rho = 0.5 * (rho + rho.adjoint());
  if (d.shots > 0) {
    const double tr = rho.trace().real();
    if (tr != 0.0) rho /= tr;
  }
  ReconstructionResult out{std::move(w), std::move(rho), -1.0};
  if (truth) out.fidelity_error = max_abs(out.rho - truth->matrix());
  return out;
}

}  // namespace latwig
