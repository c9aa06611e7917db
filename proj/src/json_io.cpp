#include "mtc/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <functional>

#include "mtc/errors.hpp"

namespace mtc {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<Complex> complex_tensor_from_json(const Json& j, size_t want,
                                              const char* what) {
  std::vector<Complex> flat;
  flat.reserve(want);
  const std::function<void(const Json&)> walk = [&](const Json& node) {
    if (node.is_array()) {
      for (const auto& c : node) walk(c);
    } else {
      flat.push_back(complex_from_json(node));
    }
  };
  walk(j);
  if (flat.size() != want)
    throw ShapeMismatch(std::string(what) + ": wrong number of entries");
  return flat;
}

Json complex_rank3_to_json(const std::vector<Complex>& t, int n) {
  Json out = Json::array();
  for (int i = 0; i < n; ++i) {
    Json plane = Json::array();
    for (int j = 0; j < n; ++j) {
      Json row = Json::array();
      for (int k = 0; k < n; ++k)
        row.push_back(to_json(t[(static_cast<size_t>(i) * n + j) * n + k]));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

}  // namespace

Json to_json(const PhaseQ& p) { return Json{{"num", p.num}, {"den", p.den}}; }

Json to_json(const Complex& z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json to_json(const ModularDatum& md) {
  Json s = Json::array();
  for (int i = 0; i < md.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < md.size(); ++j) row.push_back(to_json(md.S.at(i, j)));
    s.push_back(std::move(row));
  }
  Json theta = Json::array();
  for (const auto& t : md.theta) theta.push_back(to_json(t));
  return Json{{"labels", md.labels}, {"S", s}, {"theta", theta},
              {"unit", md.unit}};
}

Json to_json(const FusionRing& fr) {
  Json n3 = Json::array();
  for (int i = 0; i < fr.n; ++i) {
    Json plane = Json::array();
    for (int j = 0; j < fr.n; ++j) {
      Json row = Json::array();
      for (int k = 0; k < fr.n; ++k) row.push_back(fr.coeff(i, j, k));
      plane.push_back(std::move(row));
    }
    n3.push_back(std::move(plane));
  }
  return Json{{"n", fr.n}, {"unit", fr.unit}, {"dual", fr.dual}, {"N", n3}};
}

Json to_json(const AlgebraPresentation& ap) {
  Json eta = Json::array(), eps = Json::array();
  for (const auto& v : ap.eta) eta.push_back(to_json(v));
  for (const auto& v : ap.eps) eps.push_back(to_json(v));
  Json out{{"dim", ap.dim},
           {"m", complex_rank3_to_json(ap.m, ap.dim)},
           {"eta", eta},
           {"delta", complex_rank3_to_json(ap.delta, ap.dim)},
           {"eps", eps}};
  if (ap.grading) out["grading"] = *ap.grading;
  if (ap.swap_xi) {
    Json sw = Json::array();
    for (int i = 0; i < ap.dim; ++i) {
      Json row = Json::array();
      for (int j = 0; j < ap.dim; ++j)
        row.push_back(to_json((*ap.swap_xi)[static_cast<size_t>(i) * ap.dim + j]));
      sw.push_back(std::move(row));
    }
    out["swap"] = std::move(sw);
  }
  return out;
}

Json to_json(const AbelianGroup& g) { return Json{{"orders", g.orders}}; }

Json to_json(const Cocycle2& psi) {
  Json out = Json::array();
  for (int a = 0; a < psi.n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < psi.n; ++b) row.push_back(to_json(psi.at(a, b)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const NimRep& nim) {
  Json r = Json::object();
  for (int i = 0; i < nim.ring.n; ++i) {
    Json mat = Json::array();
    for (int a = 0; a < nim.R[i].rows; ++a) {
      Json row = Json::array();
      for (int b = 0; b < nim.R[i].cols; ++b) row.push_back(nim.R[i].at(a, b));
      mat.push_back(std::move(row));
    }
    r[std::to_string(i)] = std::move(mat);
  }
  return Json{{"ring", to_json(nim.ring)}, {"boundaries", nim.boundaries},
              {"R", r}};
}

Json to_json(const ValidationReport& vr) {
  Json checks = Json::array();
  for (const auto& c : vr.checks) {
    Json e{{"name", c.name}, {"passed", c.passed}};
    if (c.deviation != 0.0) e["deviation"] = c.deviation;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return Json{{"passed", vr.passed()}, {"checks", checks}};
}

Json to_json(const AxiomReport& ar) {
  Json out = to_json(ar.report);
  Json derived = Json::object();
  for (const auto& [k, v] : ar.derived) derived[k] = to_json(Complex(v));
  out["derived"] = std::move(derived);
  return out;
}

PhaseQ phase_from_json(const Json& j) {
  return PhaseQ(need(j, "num").get<std::int64_t>(),
                need(j, "den").get<std::int64_t>());
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  return Complex(need(j, "re").get<double>(), need(j, "im").get<double>());
}

ModularDatum modular_datum_from_json(const Json& j) {
  ModularDatum md;
  md.labels = need(j, "labels").get<std::vector<std::string>>();
  const int n = static_cast<int>(md.labels.size());
  const Json& s = need(j, "S");
  if (!s.is_array() || s.size() != static_cast<size_t>(n))
    throw DimensionMismatch("datum: S row count != labels");
  md.S = CMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    if (!s[i].is_array() || s[i].size() != static_cast<size_t>(n))
      throw DimensionMismatch("datum: S is not square");
    for (int k = 0; k < n; ++k) md.S.at(i, k) = complex_from_json(s[i][k]);
  }
  for (const auto& t : need(j, "theta")) md.theta.push_back(phase_from_json(t));
  if (md.theta.size() != static_cast<size_t>(n))
    throw DimensionMismatch("datum: theta length != labels");
  md.unit = need(j, "unit").get<int>();
  if (md.unit < 0 || md.unit >= n)
    throw DimensionMismatch("datum: unit out of range");
  return md;
}

FusionRing fusion_ring_from_json(const Json& j) {
  const int n = need(j, "n").get<int>();
  const int unit = need(j, "unit").get<int>();
  const auto dual = need(j, "dual").get<std::vector<int>>();
  const Json& nj = need(j, "N");
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(static_cast<size_t>(n) * n * n);
  for (const auto& plane : nj)
    for (const auto& row : plane)
      for (const auto& v : row) coeffs.push_back(v.get<std::int64_t>());
  return FusionRing(n, unit, dual, std::move(coeffs));
}

AlgebraPresentation algebra_from_json(const Json& j) {
  AlgebraPresentation ap;
  ap.dim = need(j, "dim").get<int>();
  if (ap.dim < 1) throw ShapeMismatch("presentation: dim must be >= 1");
  const size_t n = static_cast<size_t>(ap.dim);
  ap.m = complex_tensor_from_json(need(j, "m"), n * n * n, "m");
  ap.delta = complex_tensor_from_json(need(j, "delta"), n * n * n, "delta");
  ap.eta = complex_tensor_from_json(need(j, "eta"), n, "eta");
  ap.eps = complex_tensor_from_json(need(j, "eps"), n, "eps");
  if (j.contains("grading")) ap.grading = j.at("grading").get<std::vector<int>>();
  if (j.contains("swap"))
    ap.swap_xi = complex_tensor_from_json(j.at("swap"), n * n, "swap");
  return ap;
}

AbelianGroup abelian_group_from_json(const Json& j) {
  return AbelianGroup(need(j, "orders").get<std::vector<int>>());
}

Cocycle2 cocycle_from_json(const Json& j, int group_size) {
  std::vector<PhaseQ> table;
  table.reserve(static_cast<size_t>(group_size) * group_size);
  for (const auto& row : j)
    for (const auto& v : row) table.push_back(phase_from_json(v));
  return Cocycle2(group_size, std::move(table));
}

NimRep nimrep_from_json(const Json& j, const std::string& base_dir) {
  NimRep nim;
  const Json& ring = need(j, "ring");
  if (ring.is_string()) {
    std::filesystem::path p(ring.get<std::string>());
    if (p.is_relative() && !base_dir.empty())
      p = std::filesystem::path(base_dir) / p;
    nim.ring = fusion_ring_from_json(load_json_file(p.string()));
  } else {
    nim.ring = fusion_ring_from_json(ring);
  }
  nim.boundaries = need(j, "boundaries").get<std::vector<std::string>>();
  const int b = static_cast<int>(nim.boundaries.size());
  const Json& r = need(j, "R");
  for (int i = 0; i < nim.ring.n; ++i) {
    const std::string key = std::to_string(i);
    if (!r.contains(key))
      throw ShapeMismatch("nimrep: missing matrix for label " + key);
    const Json& mat = r.at(key);
    IMatrix m(b, b);
    if (mat.size() != static_cast<size_t>(b))
      throw ShapeMismatch("nimrep: matrix row count != boundaries");
    for (int a = 0; a < b; ++a) {
      if (mat[a].size() != static_cast<size_t>(b))
        throw ShapeMismatch("nimrep: matrix is not boundaries x boundaries");
      for (int c = 0; c < b; ++c) m.at(a, c) = mat[a][c].get<std::int64_t>();
    }
    nim.R.push_back(std::move(m));
  }
  return nim;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

ModularDatum load_modular_datum(const std::string& path, bool force) {
  const ModularDatum md = modular_datum_from_json(load_json_file(path));
  if (!force) {
    const auto rep = validate(md);
    if (!rep.passed())
      throw InputError("datum in " + path +
                       " fails validation (use --force to load anyway):\n" +
                       rep.to_text());
  }
  return md;
}

}  // namespace mtc
