#pragma once

// JSON and CSV encodings used by the command-line tool. JSON objects keep
// insertion order; doubles are written with 17 significant digits.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "latwig/tomography.hpp"

namespace latwig::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kPhaseConvention = "exp(2*pi*i*x/N)";

Json to_json(const CheckResult& c);
/// {"n", "tolerance", "checks": {name: {...}}, "phase_convention"}
Json to_json(const ConditionReport& r);

/// {"re": [[...]], "im": [[...]]}
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// {"n", "re": [[...]], "im": [[...]] | null}; im is null when every
/// |Im W| <= tolerance.
Json to_json(const WignerGrid& w, double tolerance = kDefaultTolerance);
WignerGrid wigner_from_json(const Json& j);

/// N rows of N comma-separated values, row index q.
std::string grid_csv_real(const WignerGrid& w);
std::string grid_csv_imag(const WignerGrid& w);

/// "p0,weight" header then one row per label.
std::string marginal_csv(const MarginalDistribution& m);

Json to_json(const SL2Element& g);
/// {"n", "shots", "seed", "families": [{"kappa", "lambda", "mu", "nu", "weights"}]}
Json to_json(const MarginalDataset& d);
MarginalDataset dataset_from_json(const Json& j);

/// Nonzero entries only: [{"s", "t", "n", "m", "re", "im"}], or every entry
/// when `dense` is set.
Json coefficients_to_json(const FanoCoefficients& c, bool dense);

std::string dump(const Json& j);

/// Writes via a sibling temporary file and rename.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace latwig::io
