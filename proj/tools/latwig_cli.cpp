#include <cstdint>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "latwig/io.hpp"

using namespace latwig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 0;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  std::string out;
  std::string format = "json";
  std::string state = "mixed";
  std::int64_t kappa = 1;
  std::int64_t lambda = 0;
};

std::string output_path(const RunConfig& cfg, const std::string& cmd) {
  if (!cfg.out.empty()) return cfg.out;
  return cmd + "-n" + std::to_string(cfg.n) + "." + cfg.format;
}

void emit(const RunConfig& cfg, const std::string& cmd, const std::string& contents) {
  const std::string path = output_path(cfg, cmd);
  io::write_atomic(path, contents);
  std::cout << "wrote " << path << "\n";
}

void require_odd(LatticeDim dim, const char* cmd) {
  if (dim.even())
    throw UsageError(std::string(cmd) + ": no Fano operator set satisfies all conditions for even N=" +
                     std::to_string(dim.n()) + " (run `check` for the witness)");
}

DensityMatrix parse_state(const RunConfig& cfg, LatticeDim dim) {
  const std::string& s = cfg.state;
  const auto index_after = [&](std::size_t prefix) {
    const std::string rest = s.substr(prefix);
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (rest.empty() || used != rest.size()) throw UsageError("bad state index in '" + s + "'");
    return k;
  };
  if (s == "mixed") return DensityMatrix::maximally_mixed(dim);
  if (s == "random") {
    std::mt19937_64 rng(cfg.seed);
    return random_density(dim, rng);
  }
  if (s.rfind("basis:", 0) == 0) return DensityMatrix::position_state(canonical_rep(index_after(6), dim), dim);
  if (s.rfind("momentum:", 0) == 0) return DensityMatrix::momentum_state(canonical_rep(index_after(9), dim), dim);
  throw UsageError("unknown state '" + s + "' (expected basis:q, momentum:p, mixed or random)");
}

io::Json operators_json(const FanoOperatorSet& f) {
  io::Json ops = io::Json::array();
  for (int q = 0; q < f.n(); ++q)
    for (int p = 0; p < f.n(); ++p) {
      io::Json j;
      j["q"] = q;
      j["p"] = p;
      const io::Json m = io::matrix_to_json(f.at(q, p));
      j["re"] = m.at("re");
      j["im"] = m.at("im");
      ops.push_back(std::move(j));
    }
  return ops;
}

int cmd_fano(const RunConfig& cfg) {
  const LatticeDim dim(cfg.n);
  const FanoCoefficients c = dim.odd() ? coefficients_odd(dim) : coefficients_candidate(dim);
  const FanoOperatorSet f = assemble(c);
  io::Json j;
  j["n"] = dim.n();
  j["candidate"] = dim.even();
  j["phase_convention"] = io::kPhaseConvention;
  j["coefficients"] = io::coefficients_to_json(c, true);
  j["operators"] = operators_json(f);
  emit(cfg, "fano", io::dump(j));
  std::cout << "N=" << dim.n() << ": " << dim.sites() * dim.sites() << " coefficients, " << dim.sites()
            << " operators" << (dim.even() ? " (even N candidate, not a valid Fano set)" : "") << "\n";
  return kExitOk;
}

int cmd_check(const RunConfig& cfg) {
  const LatticeDim dim(cfg.n);
  if (dim.n() > kAuditBound)
    throw UsageError("check: N=" + std::to_string(dim.n()) + " exceeds the audit bound " +
                     std::to_string(kAuditBound));
  const ConditionReport report = full_audit(dim, cfg.tolerance);

  bool matches = false;
  std::string infeasible_by;
  if (dim.odd()) {
    matches = report.all_pass();
  } else {
    for (auto name : kInfeasibilityChecks)
      if (const CheckResult* c = report.find(name); c && !c->pass) {
        matches = true;
        if (infeasible_by.empty()) infeasible_by = std::string(name);
      }
  }

  io::Json j = io::to_json(report);
  j["prediction"] = dim.odd() ? "all_pass" : "infeasible";
  j["matches_prediction"] = matches;
  j["failed_checks"] = report.failed();
  emit(cfg, "check", io::dump(j));

  std::cout << "N=" << dim.n() << " tolerance=" << cfg.tolerance << "\n";
  for (const auto& c : report.checks) std::cout << "  " << (c.pass ? "pass " : "FAIL ") << c.name << "\n";
  if (dim.odd())
    std::cout << (matches ? "odd N: all conditions hold\n" : "odd N: conditions violated\n");
  else if (matches)
    std::cout << "even N: infeasibility witnessed by " << infeasible_by << "\n";
  else
    std::cout << "even N: no infeasibility witness found\n";
  return matches ? kExitOk : kExitViolation;
}

int cmd_wigner(const RunConfig& cfg) {
  const LatticeDim dim(cfg.n);
  require_odd(dim, "wigner");
  const DensityMatrix rho = parse_state(cfg, dim);
  const FanoOperatorSet f = assemble(coefficients_odd(dim));
  const WignerGrid w = wigner_from_density(rho, f);

  if (cfg.format == "csv") {
    emit(cfg, "wigner", io::grid_csv_real(w));
    if (w.max_imag() > cfg.tolerance) {
      RunConfig imag = cfg;
      imag.out = output_path(cfg, "wigner") + ".imag.csv";
      emit(imag, "wigner", io::grid_csv_imag(w));
    }
  } else {
    io::Json j = io::to_json(w, cfg.tolerance);
    j["state"] = cfg.state;
    j["position_marginals"] = position_marginals(w);
    j["momentum_marginals"] = momentum_marginals(w);
    emit(cfg, "wigner", io::dump(j));
  }
  const double norm_err = std::abs(w.total() - rho.matrix().trace());
  std::cout << "N=" << dim.n() << " state=" << cfg.state << " sum=" << w.total().real()
            << " max|Im|=" << w.max_imag() << "\n";
  return norm_err <= cfg.tolerance && w.max_imag() <= cfg.tolerance ? kExitOk : kExitViolation;
}

int cmd_marginal(const RunConfig& cfg) {
  const LatticeDim dim(cfg.n);
  require_odd(dim, "marginal");
  if (gcd(cfg.kappa, cfg.lambda) != 1)
    throw UsageError("marginal: direction (" + std::to_string(cfg.kappa) + "," + std::to_string(cfg.lambda) +
                     ") is not coprime");
  const SL2Element g = sl2_complete(cfg.kappa, cfg.lambda);
  const DensityMatrix rho = parse_state(cfg, dim);
  const FanoOperatorSet f = assemble(coefficients_odd(dim));
  const MarginalDistribution m = marginal_along_line(wigner_from_density(rho, f), g);

  ViolationTracker tracker("line_projector", cfg.tolerance);
  int min_multiplicity = dim.n();
  int max_multiplicity = 0;
  for (int p0 = 0; p0 < dim.n(); ++p0) {
    const LineProjectorCheck pc = line_projector_check(f, g, p0, cfg.tolerance);
    tracker.merge(pc.result);
    min_multiplicity = std::min(min_multiplicity, pc.multiplicity);
    max_multiplicity = std::max(max_multiplicity, pc.multiplicity);
  }
  CheckResult projector = tracker.result();
  if (min_multiplicity != 1 || max_multiplicity != 1) projector.pass = false;

  if (cfg.format == "csv") {
    emit(cfg, "marginal", io::marginal_csv(m));
  } else {
    io::Json j;
    j["n"] = dim.n();
    j["state"] = cfg.state;
    j["direction"] = io::to_json(g);
    j["weights"] = m.weights;
    j["max_imag"] = m.max_imag;
    j["projector_check"] = io::to_json(projector);
    emit(cfg, "marginal", io::dump(j));
  }
  std::cout << "N=" << dim.n() << " direction " << g.str() << " weights:";
  for (double x : m.weights) std::cout << " " << x;
  std::cout << "\nprojector check: " << (projector.pass ? "pass" : "FAIL") << "\n";
  return projector.pass && m.max_imag <= cfg.tolerance ? kExitOk : kExitViolation;
}

int cmd_tomo(const RunConfig& cfg) {
  const LatticeDim dim(cfg.n);
  if (dim.even() || !is_prime(dim.n()))
    throw UsageError("tomo: N=" + std::to_string(dim.n()) + " must be an odd prime");
  std::mt19937_64 rng(cfg.seed);
  const DensityMatrix rho = random_density(dim, rng);
  const FanoOperatorSet f = assemble(coefficients_odd(dim));
  const MarginalDataset d = simulate_marginals(rho, f, cfg.shots, cfg.seed, cfg.tolerance);
  const ReconstructionResult r = reconstruct_density(d, f, &rho, cfg.tolerance);

  io::Json j;
  j["n"] = dim.n();
  j["shots"] = cfg.shots;
  j["seed"] = cfg.seed;
  j["fidelity_error"] = r.fidelity_error;
  j["dataset"] = io::to_json(d);
  j["wigner"] = io::to_json(r.wigner, cfg.tolerance);
  j["rho"] = io::matrix_to_json(r.rho);
  j["rho_true"] = io::matrix_to_json(rho.matrix());
  emit(cfg, "tomo", io::dump(j));
  std::cout << "N=" << dim.n() << " shots=" << cfg.shots << " seed=" << cfg.seed
            << " fidelity_error=" << r.fidelity_error << "\n";
  // Exact data must reproduce the state to tolerance; sampled data is reported as is.
  return cfg.shots == 0 && r.fidelity_error > cfg.tolerance ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Wigner functions on the N x N lattice"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&cfg](CLI::App* sub, bool csv) {
    sub->add_option("--n", cfg.n, "lattice size N")->required()->check(CLI::PositiveNumber);
    sub->add_option("--tolerance", cfg.tolerance, "violation tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output file (default <command>-n<N>.<format>)");
    if (csv) sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  const auto state = [&cfg](CLI::App* sub) {
    sub->add_option("--state", cfg.state, "basis:q, momentum:p, mixed or random");
    sub->add_option("--seed", cfg.seed, "seed for --state random");
  };

  CLI::App* fano = app.add_subcommand("fano", "coefficient table and assembled operators");
  common(fano, false);
  CLI::App* check = app.add_subcommand("check", "full condition audit");
  common(check, false);
  CLI::App* wigner = app.add_subcommand("wigner", "Wigner function of a state");
  common(wigner, true);
  state(wigner);
  CLI::App* marginal = app.add_subcommand("marginal", "line marginals and projector check");
  common(marginal, true);
  state(marginal);
  marginal->add_option("--kappa", cfg.kappa, "direction kappa")->required();
  marginal->add_option("--lambda", cfg.lambda, "direction lambda")->required();
  CLI::App* tomo = app.add_subcommand("tomo", "simulate and reconstruct a random state");
  common(tomo, false);
  tomo->add_option("--shots", cfg.shots, "shots per family (0 = exact)");
  tomo->add_option("--seed", cfg.seed, "seed for the state and the sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*fano) return cmd_fano(cfg);
    if (*check) return cmd_check(cfg);
    if (*wigner) return cmd_wigner(cfg);
    if (*marginal) return cmd_marginal(cfg);
    if (*tomo) return cmd_tomo(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
