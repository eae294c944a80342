#include "latwig/fano.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "latwig/kernels.hpp"

namespace latwig {

template <class Tag>
double Rank4Table<Tag>::distance(const Rank4Table& other) const {
  if (!(dim_ == other.dim_)) throw std::invalid_argument("Rank4Table::distance: dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) d = std::max(d, std::abs(data_[i] - other.data_[i]));
  return d;
}

template class Rank4Table<FourierTag>;
template class Rank4Table<PositionTag>;

FanoOperatorSet::FanoOperatorSet(LatticeDim n, std::vector<ComplexMatrix> operators)
    : dim_(n), ops_(std::move(operators)) {
  if (ops_.size() != n.sites()) throw std::invalid_argument("FanoOperatorSet: need exactly N^2 operators");
  for (const auto& op : ops_)
    if (op.rows() != n.n() || op.cols() != n.n())
      throw std::invalid_argument("FanoOperatorSet: operators must be N x N");
}

const ComplexMatrix& FanoOperatorSet::at(int q, int p) const {
  return ops_[static_cast<std::size_t>(canonical_rep(q, dim_)) * static_cast<std::size_t>(n()) +
              static_cast<std::size_t>(canonical_rep(p, dim_))];
}

namespace {

void require_odd(LatticeDim n, const char* who) {
  if (n.even())
    throw std::invalid_argument(std::string(who) + ": N=" + std::to_string(n.n()) +
                                " is even; use coefficients_candidate");
}

double n2(LatticeDim n) { return static_cast<double>(n.n()) * n.n(); }

}  // namespace

FanoCoefficients coefficients_odd(LatticeDim n) {
  require_odd(n, "coefficients_odd");
  const RootTable w(n);
  const std::int64_t half_np1 = (n.n() + 1) / 2;
  FanoCoefficients c(n);
  for (int s = 0; s < n.n(); ++s)
    for (int t = 0; t < n.n(); ++t) c(s, t, t, s) = w.pow(-static_cast<std::int64_t>(s) * t * half_np1) / n2(n);
  return c;
}

FanoCoefficients coefficients_parity_split(LatticeDim n) {
  require_odd(n, "coefficients_parity_split");
  const RootTable w(n);
  FanoCoefficients c(n);
  for (int nn = 0; nn < n.n(); ++nn)
    for (int m = 0; m < n.n(); ++m) {
      const std::int64_t exponent = (nn % 2 == 0) ? -(nn / 2) * static_cast<std::int64_t>(m)
                                                  : -((nn + n.n()) / 2) * static_cast<std::int64_t>(m);
      c(m, nn, nn, m) = w.pow(exponent) / n2(n);
    }
  return c;
}

FanoCoefficients coefficients_candidate(LatticeDim n) {
  const RootTable w(n);
  FanoCoefficients c(n);
  for (int s = 0; s < n.n(); ++s)
    for (int t = 0; t < n.n(); ++t)
      c(s, t, t, s) = w.half_pow(-static_cast<std::int64_t>(s) * t * (n.n() + 1)) / n2(n);
  return c;
}

PositionCoefficients coefficients_to_position(const FanoCoefficients& c) {
  const LatticeDim dim = c.dim();
  const int N = dim.n();
  const RootTable w(dim);
  PositionCoefficients a(dim);
  for (int q = 0; q < N; ++q)
    for (int p = 0; p < N; ++p)
      for (int n = 0; n < N; ++n)
        for (int m = 0; m < N; ++m) {
          Complex acc(0.0, 0.0);
          for (int s = 0; s < N; ++s)
            for (int t = 0; t < N; ++t)
              acc += w.pow(-static_cast<std::int64_t>(q) * s + static_cast<std::int64_t>(p) * t) * c(s, t, n, m);
          a(q, p, n, m) = acc;
        }
  return a;
}

FanoCoefficients position_to_coefficients(const PositionCoefficients& a) {
  const LatticeDim dim = a.dim();
  const int N = dim.n();
  const RootTable w(dim);
  FanoCoefficients c(dim);
  for (int s = 0; s < N; ++s)
    for (int t = 0; t < N; ++t)
      for (int n = 0; n < N; ++n)
        for (int m = 0; m < N; ++m) {
          Complex acc(0.0, 0.0);
          for (int q = 0; q < N; ++q)
            for (int p = 0; p < N; ++p)
              acc += w.pow(static_cast<std::int64_t>(q) * s - static_cast<std::int64_t>(p) * t) * a(q, p, n, m);
          c(s, t, n, m) = acc / n2(dim);
        }
  return c;
}

FanoOperatorSet assemble(const FanoCoefficients& c) { return kernels::omp::assemble(coefficients_to_position(c)); }

// -- audits -----------------------------------------------------------------

std::vector<CheckResult> check_marginals(const FanoOperatorSet& f, double tolerance) {
  const LatticeDim dim = f.dim();
  const int N = dim.n();
  ViolationTracker mq("marginal_q", tolerance);
  ViolationTracker mp("marginal_p", tolerance);
  for (int q = 0; q < N; ++q) {
    ComplexMatrix sum = ComplexMatrix::Zero(N, N);
    for (int p = 0; p < N; ++p) sum += f.at(q, p);
    const ComplexVector e = position_vector(q, dim);
    sum -= e * e.adjoint();
    for (int r = 0; r < N; ++r)
      for (int k = 0; k < N; ++k) mq.observe(std::abs(sum(r, k)), [&] { return Witness{q, r, k}; });
  }
  for (int p = 0; p < N; ++p) {
    ComplexMatrix sum = ComplexMatrix::Zero(N, N);
    for (int q = 0; q < N; ++q) sum += f.at(q, p);
    const ComplexVector v = momentum_vector(p, dim);
    sum -= v * v.adjoint();
    for (int r = 0; r < N; ++r)
      for (int k = 0; k < N; ++k) mp.observe(std::abs(sum(r, k)), [&] { return Witness{p, r, k}; });
  }
  return {mq.result(), mp.result()};
}

std::vector<CheckResult> check_marginals_coefficients(const FanoCoefficients& c, double tolerance) {
  const int N = c.n();
  const double inv = 1.0 / n2(c.dim());
  ViolationTracker mq("marginal_q_coefficients", tolerance);
  ViolationTracker mp("marginal_p_coefficients", tolerance);
  for (int s = 0; s < N; ++s)
    for (int n = 0; n < N; ++n)
      for (int m = 0; m < N; ++m) {
        const double expected = (n == 0 && m == s) ? inv : 0.0;
        mq.observe(N * std::abs(c(s, 0, n, m) - expected), [&] { return Witness{s, 0, n, m}; });
      }
  for (int t = 0; t < N; ++t)
    for (int n = 0; n < N; ++n)
      for (int m = 0; m < N; ++m) {
        const double expected = (m == 0 && n == t) ? inv : 0.0;
        mp.observe(N * std::abs(c(0, t, n, m) - expected), [&] { return Witness{0, t, n, m}; });
      }
  return {mq.result(), mp.result()};
}

std::vector<CheckResult> check_hermiticity(const FanoCoefficients& c, const FanoOperatorSet& f, double tolerance) {
  const LatticeDim dim = c.dim();
  const int N = dim.n();
  if (!(f.dim() == dim)) throw std::invalid_argument("check_hermiticity: dimension mismatch");
  const RootTable w(dim);

  ViolationTracker op("hermiticity", tolerance);
  for (int q = 0; q < N; ++q)
    for (int p = 0; p < N; ++p) {
      const ComplexMatrix& d = f.at(q, p);
      for (int r = 0; r < N; ++r)
        for (int k = 0; k < N; ++k)
          op.observe(std::abs(d(r, k) - std::conj(d(k, r))), [&] { return Witness{q, p, r, k}; });
    }

  ViolationTracker co("hermiticity_coefficients", tolerance);
  for (int s = 0; s < N; ++s)
    for (int t = 0; t < N; ++t)
      for (int n = 0; n < N; ++n)
        for (int m = 0; m < N; ++m) {
          const Complex rhs = w.pow(-static_cast<std::int64_t>(n) * m) * std::conj(c(-s, -t, -n, -m));
          co.observe(std::abs(c(s, t, n, m) - rhs), [&] { return Witness{s, t, n, m}; });
        }
  return {op.result(), co.result()};
}

std::vector<CheckResult> check_orthogonality(const FanoCoefficients& c, const FanoOperatorSet& f, double tolerance) {
  const LatticeDim dim = c.dim();
  const int N = dim.n();
  if (!(f.dim() == dim)) throw std::invalid_argument("check_orthogonality: dimension mismatch");
  const double invN = 1.0 / N;
  const double invN4 = 1.0 / (n2(dim) * n2(dim));

  CheckResult site = kernels::omp::orthogonality_site(f, tolerance);

  // sum_{q,p} <q1|Delta^dagger|q2> <q1'|Delta|q2'> = delta_{q1,q2'} delta_{q2,q1'} / N
  ViolationTracker index("orthogonality_index", tolerance);
  for (int q1 = 0; q1 < N; ++q1)
    for (int q2 = 0; q2 < N; ++q2)
      for (int r1 = 0; r1 < N; ++r1)
        for (int r2 = 0; r2 < N; ++r2) {
          Complex acc(0.0, 0.0);
          for (const auto& d : f.operators()) acc += std::conj(d(q2, q1)) * d(r1, r2);
          const double expected = (q1 == r2 && q2 == r1) ? invN : 0.0;
          index.observe(std::abs(acc - expected), [&] { return Witness{q1, q2, r1, r2}; });
        }

  ViolationTracker site_c("orthogonality_site_coefficients", tolerance);
  for (int s = 0; s < N; ++s)
    for (int t = 0; t < N; ++t)
      for (int s2 = 0; s2 < N; ++s2)
        for (int t2 = 0; t2 < N; ++t2) {
          Complex acc(0.0, 0.0);
          for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l) acc += std::conj(c(s, t, k, l)) * c(s2, t2, k, l);
          const double expected = (s == s2 && t == t2) ? invN4 : 0.0;
          site_c.observe(N * std::abs(acc - expected), [&] { return Witness{s, t, s2, t2}; });
        }

  ViolationTracker index_c("orthogonality_index_coefficients", tolerance);
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          Complex acc(0.0, 0.0);
          for (int s = 0; s < N; ++s)
            for (int t = 0; t < N; ++t) acc += std::conj(c(s, t, n, m)) * c(s, t, k, l);
          const double expected = (n == k && m == l) ? invN4 : 0.0;
          index_c.observe(n2(dim) * std::abs(acc - expected), [&] { return Witness{n, m, k, l}; });
        }

  return {site, index.result(), site_c.result(), index_c.result()};
}

PhaseExponent phase_phi(const SL2Element& g, int n_idx, int m_idx, LatticeDim dim) {
  const std::int64_t N = dim.n();
  const std::int64_t two_n = 2 * N;
  const auto r = [two_n](std::int64_t x) {
    x %= two_n;
    return x < 0 ? x + two_n : x;
  };
  const std::int64_t n = canonical_rep(n_idx, dim);
  const std::int64_t m = canonical_rep(m_idx, dim);
  // 2 phi' = nu lambda n(N-n) + mu kappa m(N-m) + 2 mu lambda n m, kept mod 2N.
  const std::int64_t a = r(r(g.nu) * r(g.lambda)) * r(n * (N - n));
  const std::int64_t b = r(r(g.mu) * r(g.kappa)) * r(m * (N - m));
  const std::int64_t c = 2 * r(r(g.mu) * r(g.lambda)) * r(n * m);
  return PhaseExponent::half(r(r(a) + r(b) + r(c)));
}

FanoCoefficients transform(const FanoCoefficients& c, const SL2Element& g) {
  const LatticeDim dim = c.dim();
  const int N = dim.n();
  const RootTable w(dim);
  const std::int64_t k = canonical_rep(g.kappa, dim), l = canonical_rep(g.lambda, dim);
  const std::int64_t mu = canonical_rep(g.mu, dim), nu = canonical_rep(g.nu, dim);
  FanoCoefficients out(dim);
  for (int s = 0; s < N; ++s)
    for (int t = 0; t < N; ++t)
      for (int n = 0; n < N; ++n)
        for (int m = 0; m < N; ++m)
          out(s, t, n, m) =
              w(phase_phi(g, n, m, dim)) * c(k * s - l * t, nu * t - mu * s, nu * n - mu * m, -l * n + k * m);
  return out;
}

CheckResult check_covariance(const FanoCoefficients& c, const SL2Element& g, double tolerance) {
  return kernels::serial::covariance_audit(c, std::span<const SL2Element>(&g, 1), tolerance);
}

CheckResult audit_covariance(const FanoCoefficients& c, std::span<const SL2Element> elements, double tolerance) {
  return kernels::omp::covariance_audit(c, elements, tolerance);
}

// -- derivation ---------------------------------------------------------------

DerivedValue derive_via_line(LatticeDim dim, int s_in, int t_in) {
  const int s = canonical_rep(s_in, dim);
  const int t = canonical_rep(t_in, dim);
  const GcdDecomposition gd = gcd_decompose(s, t, dim);
  // kappa s - lambda t = 0 with kappa = tau, lambda = sigma.
  const SL2Element g = sl2_complete(gd.tau, gd.sigma);
  const int s_axis = canonical_rep(g.kappa * s - g.lambda * t, dim);
  const int t_axis = canonical_rep(g.nu * t - g.mu * s, dim);
  if (s_axis != 0 || t_axis != canonical_rep(gd.xi, dim))
    throw std::logic_error("derive_via_line: line does not reach the (0, xi) slice");
  // ta(0, xi; n'', m'') is supported at (n'', m'') = (xi, 0); invert
  // (n'', m'') = (nu n - mu m, -lambda n + kappa m).
  const int n = canonical_rep(g.kappa * gd.xi, dim);
  const int m = canonical_rep(g.lambda * gd.xi, dim);
  const RootTable w(dim);
  return DerivedValue{gd, g, n, m, w(phase_phi(g, n, m, dim)) / n2(dim)};
}

std::optional<ComplexMatrix> route_slice(const SL2Element& g, int s_in, int t_in, LatticeDim dim) {
  const int N = dim.n();
  const int s = canonical_rep(s_in, dim);
  const int t = canonical_rep(t_in, dim);
  const int s_axis = canonical_rep(g.kappa * s - g.lambda * t, dim);
  const int t_axis = canonical_rep(g.nu * t - g.mu * s, dim);
  if (s_axis != 0 && t_axis != 0) return std::nullopt;
  const RootTable w(dim);
  const double inv = 1.0 / n2(dim);
  ComplexMatrix slice = ComplexMatrix::Zero(N, N);
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) {
      const int n2_ = canonical_rep(g.nu * n - g.mu * m, dim);
      const int m2_ = canonical_rep(-g.lambda * n + g.kappa * m, dim);
      const bool on_support = s_axis == 0 ? (m2_ == 0 && n2_ == t_axis) : (n2_ == 0 && m2_ == s_axis);
      if (on_support) slice(n, m) = w(phase_phi(g, n, m, dim)) * inv;
    }
  return slice;
}

FanoCoefficients derived_table(LatticeDim dim) {
  FanoCoefficients c(dim);
  c(0, 0, 0, 0) = 1.0 / n2(dim);
  for (int s = 0; s < dim.n(); ++s)
    for (int t = 0; t < dim.n(); ++t) {
      if (s == 0 && t == 0) continue;
      const DerivedValue d = derive_via_line(dim, s, t);
      c(s, t, d.n, d.m) = d.value;
    }
  return c;
}

namespace {

std::vector<CheckResult> prefixed(std::vector<CheckResult> checks, const std::string& prefix) {
  for (auto& c : checks) c.name = prefix + c.name;
  return checks;
}

Witness concat(Witness w, const SL2Element& a, const SL2Element& b) {
  for (auto x : a.entries()) w.push_back(x);
  for (auto x : b.entries()) w.push_back(x);
  return w;
}

}  // namespace

ConditionReport uniqueness_audit(LatticeDim dim, double tolerance, int audit_bound) {
  const int N = dim.n();
  const std::vector<SL2Element> elements = sl2_enumerate_with_lifts(dim, audit_bound);
  ConditionReport report{N, tolerance, {}};

  ViolationTracker routes("route_consistency", tolerance);
  for (int s = 0; s < N; ++s)
    for (int t = 0; t < N; ++t) {
      if (s == 0 && t == 0) continue;
      const SL2Element ref_g = derive_via_line(dim, s, t).element;
      const ComplexMatrix ref = *route_slice(ref_g, s, t, dim);
      for (const auto& g : elements) {
        const auto slice = route_slice(g, s, t, dim);
        if (!slice) continue;
        for (int n = 0; n < N; ++n)
          for (int m = 0; m < N; ++m)
            routes.observe(std::abs((*slice)(n, m) - ref(n, m)),
                           [&] { return concat(Witness{s, t, n, m}, ref_g, g); });
      }
    }
  report.add(routes.result());

  const FanoCoefficients derived = derived_table(dim);
  const FanoCoefficients closed = coefficients_candidate(dim);
  ViolationTracker match("derived_matches_closed_form", tolerance);
  for (int s = 0; s < N; ++s)
    for (int t = 0; t < N; ++t)
      for (int n = 0; n < N; ++n)
        for (int m = 0; m < N; ++m)
          match.observe(std::abs(derived(s, t, n, m) - closed(s, t, n, m)), [&] { return Witness{s, t, n, m}; });
  report.add(match.result());

  const FanoOperatorSet f = assemble(derived);
  report.add(prefixed(check_marginals(f, tolerance), "derived_"));
  report.add(prefixed(check_marginals_coefficients(derived, tolerance), "derived_"));
  report.add(prefixed(check_hermiticity(derived, f, tolerance), "derived_"));
  report.add(prefixed(check_orthogonality(derived, f, tolerance), "derived_"));
  return report;
}

ConditionReport audit_table(const FanoCoefficients& c, double tolerance, int audit_bound) {
  ConditionReport report{c.n(), tolerance, {}};
  const FanoOperatorSet f = assemble(c);
  report.add(check_marginals(f, tolerance));
  report.add(check_marginals_coefficients(c, tolerance));
  report.add(check_hermiticity(c, f, tolerance));
  report.add(check_orthogonality(c, f, tolerance));
  const std::vector<SL2Element> elements = sl2_enumerate_with_lifts(c.dim(), audit_bound);
  report.add(audit_covariance(c, elements, tolerance));
  return report;
}

ConditionReport full_audit(LatticeDim dim, double tolerance, int audit_bound) {
  if (dim.n() > audit_bound)
    throw std::domain_error("full_audit: N=" + std::to_string(dim.n()) + " exceeds audit bound " +
                            std::to_string(audit_bound));
  const FanoCoefficients c = dim.odd() ? coefficients_odd(dim) : coefficients_candidate(dim);
  ConditionReport report = audit_table(c, tolerance, audit_bound);
  report.add(uniqueness_audit(dim, tolerance, audit_bound).checks);
  return report;
}

}  // namespace latwig
