#include "latwig/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace latwig::io {

Json to_json(const CheckResult& c) {
  Json j;
  j["pass"] = c.pass;
  j["max_violation"] = c.max_violation;
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  return j;
}

Json to_json(const ConditionReport& r) {
  Json j;
  j["n"] = r.n;
  j["tolerance"] = r.tolerance;
  Json checks = Json::object();
  for (const auto& c : r.checks) checks[c.name] = to_json(c);
  j["checks"] = std::move(checks);
  j["phase_convention"] = kPhaseConvention;
  return j;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json rr = Json::array();
    Json ii = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ii.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  Json j;
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const auto rows = static_cast<Eigen::Index>(re.size());
  ComplexMatrix m(rows, rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (re[static_cast<std::size_t>(r)].size() != static_cast<std::size_t>(rows))
      throw std::invalid_argument("matrix_from_json: matrix must be square");
    for (Eigen::Index c = 0; c < rows; ++c) {
      const double imag = im.is_null() ? 0.0 : im[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>();
      m(r, c) = Complex(re[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>(), imag);
    }
  }
  return m;
}

Json to_json(const WignerGrid& w, double tolerance) {
  Json re = Json::array();
  Json im = Json::array();
  for (int q = 0; q < w.n(); ++q) {
    Json rr = Json::array();
    Json ii = Json::array();
    for (int p = 0; p < w.n(); ++p) {
      rr.push_back(w(q, p).real());
      ii.push_back(w(q, p).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  Json j;
  j["n"] = w.n();
  j["re"] = std::move(re);
  j["im"] = w.max_imag() > tolerance ? std::move(im) : Json(nullptr);
  return j;
}

WignerGrid wigner_from_json(const Json& j) {
  const LatticeDim dim(j.at("n").get<int>());
  const auto& re = j.at("re");
  const Json im = j.contains("im") ? j.at("im") : Json(nullptr);
  if (re.size() != static_cast<std::size_t>(dim.n())) throw std::invalid_argument("wigner_from_json: need N rows");
  WignerGrid w(dim);
  for (int q = 0; q < dim.n(); ++q) {
    const auto& row = re[static_cast<std::size_t>(q)];
    if (row.size() != static_cast<std::size_t>(dim.n()))
      throw std::invalid_argument("wigner_from_json: need N columns");
    for (int p = 0; p < dim.n(); ++p) {
      const double imag =
          im.is_null() ? 0.0 : im[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)].get<double>();
      w(q, p) = Complex(row[static_cast<std::size_t>(p)].get<double>(), imag);
    }
  }
  return w;
}

namespace {

std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_json(const Json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        write_json(value, depth + 1, out);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        write_json(j[i], depth + 1, out);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      // JSON has no literal for non-finite values.
      out += std::isfinite(x) ? format_double(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

template <class Part>
std::string grid_csv(const WignerGrid& w, Part part) {
  std::string out;
  for (int q = 0; q < w.n(); ++q) {
    for (int p = 0; p < w.n(); ++p) {
      if (p > 0) out += ',';
      out += format_double(part(w(q, p)));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string grid_csv_real(const WignerGrid& w) {
  return grid_csv(w, [](const Complex& z) { return z.real(); });
}

std::string grid_csv_imag(const WignerGrid& w) {
  return grid_csv(w, [](const Complex& z) { return z.imag(); });
}

std::string marginal_csv(const MarginalDistribution& m) {
  std::string out = "p0,weight\n";
  for (std::size_t p0 = 0; p0 < m.weights.size(); ++p0)
    out += std::to_string(p0) + "," + format_double(m.weights[p0]) + "\n";
  return out;
}

Json to_json(const SL2Element& g) {
  Json j;
  j["kappa"] = g.kappa;
  j["lambda"] = g.lambda;
  j["mu"] = g.mu;
  j["nu"] = g.nu;
  return j;
}

Json to_json(const MarginalDataset& d) {
  Json j;
  j["n"] = d.n;
  j["shots"] = d.shots;
  j["seed"] = d.seed;
  Json families = Json::array();
  for (const auto& f : d.families) {
    Json fj = to_json(f.g);
    fj["weights"] = f.weights;
    families.push_back(std::move(fj));
  }
  j["families"] = std::move(families);
  return j;
}

MarginalDataset dataset_from_json(const Json& j) {
  MarginalDataset d;
  d.n = j.at("n").get<int>();
  d.shots = j.at("shots").get<std::uint64_t>();
  d.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& fj : j.at("families")) {
    MarginalDistribution m;
    m.g = SL2Element{fj.at("kappa").get<std::int64_t>(), fj.at("lambda").get<std::int64_t>(),
                     fj.at("mu").get<std::int64_t>(), fj.at("nu").get<std::int64_t>()};
    if (m.g.determinant() != 1) throw std::invalid_argument("dataset_from_json: family element must have det 1");
    m.weights = fj.at("weights").get<std::vector<double>>();
    d.families.push_back(std::move(m));
  }
  return d;
}

Json coefficients_to_json(const FanoCoefficients& c, bool dense) {
  Json entries = Json::array();
  const int N = c.n();
  for (int s = 0; s < N; ++s)
    for (int t = 0; t < N; ++t)
      for (int n = 0; n < N; ++n)
        for (int m = 0; m < N; ++m) {
          const Complex v = c(s, t, n, m);
          if (!dense && v == Complex(0.0, 0.0)) continue;
          Json e;
          e["s"] = s;
          e["t"] = t;
          e["n"] = n;
          e["m"] = m;
          e["re"] = v.real();
          e["im"] = v.imag();
          entries.push_back(std::move(e));
        }
  return entries;
}

std::string dump(const Json& j) {
  std::string out;
  write_json(j, 0, out);
  out += '\n';
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace latwig::io
