#include "homanti/io.hpp"

#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace homanti {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& member(const json& j, const char* key, const char* where) {
  if (!j.is_object()) throw InputError(std::string(where) + " must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end())
    throw InputError(std::string(where) + " is missing the \"" + key + "\" member");
  return *it;
}

int int_member(const json& j, const char* key, const char* where) {
  const json& v = member(j, key, where);
  if (!v.is_number_integer())
    throw InputError(std::string(where) + "." + key + " must be an integer");
  return v.get<int>();
}

Rational rational_value(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + " must be a rational string");
  return Rational::parse(v.get<std::string>());
}

Matrix matrix_from_json(const json& v, int rows, int cols, const std::string& name) {
  if (!v.is_array()) throw InputError(name + " must be a dense row-major string array");
  if (static_cast<long>(v.size()) != static_cast<long>(rows) * cols)
    throw InputError(name + " must hold exactly " + std::to_string(rows) + "*" +
                     std::to_string(cols) + " entries");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = rational_value(v[static_cast<size_t>(i) * cols + j], name + " entry");
  return m;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j).str());
  return out;
}

Tensor3 tensor_from_json(const json& v, int d1, int d2, int d3, const std::string& name) {
  if (!v.is_array()) throw InputError(name + " must be an array of sparse entries");
  Tensor3 t(d1, d2, d3);
  std::set<std::tuple<int, int, int>> seen;
  for (const json& entry : v) {
    if (!entry.is_object()) throw InputError(name + " entries must be objects");
    for (const auto& item : entry.items())
      if (item.key() != "i" && item.key() != "j" && item.key() != "k" && item.key() != "c")
        throw InputError(name + " entry has an unexpected key \"" + item.key() + "\"");
    const int i = int_member(entry, "i", name.c_str());
    const int j = int_member(entry, "j", name.c_str());
    const int k = int_member(entry, "k", name.c_str());
    if (i < 0 || i >= d1 || j < 0 || j >= d2 || k < 0 || k >= d3)
      throw InputError(name + " entry (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                       std::to_string(k) + ") is out of bounds");
    if (!seen.insert({i, j, k}).second)
      throw InputError(name + " has a duplicate entry at (" + std::to_string(i) + ", " +
                       std::to_string(j) + ", " + std::to_string(k) + ")");
    t.at(i, j, k) = rational_value(member(entry, "c", name.c_str()), name + " coefficient");
  }
  return t;
}

ordered_json tensor_to_json(const Tensor3& t) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < t.dim1(); ++i)
    for (int j = 0; j < t.dim2(); ++j)
      for (int k = 0; k < t.dim3(); ++k) {
        if (t.at(i, j, k).is_zero()) continue;
        ordered_json entry;
        entry["i"] = i;
        entry["j"] = j;
        entry["k"] = k;
        entry["c"] = t.at(i, j, k).str();
        out.push_back(std::move(entry));
      }
  return out;
}

std::vector<Matrix> matrix_list_from_json(const json& v, int count, int rows, int cols,
                                          const std::string& name) {
  if (!v.is_array()) throw InputError(name + " must be an array of matrices");
  if (static_cast<int>(v.size()) != count)
    throw InputError(name + " must hold one matrix per algebra basis element");
  std::vector<Matrix> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    out.push_back(matrix_from_json(v[static_cast<size_t>(i)], rows, cols,
                                   name + "[" + std::to_string(i) + "]"));
  return out;
}

ordered_json matrix_list_to_json(int count, const Matrix& (Representation::*get)(int) const,
                                 const Representation& rho) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < count; ++i) out.push_back(matrix_to_json((rho.*get)(i)));
  return out;
}

}  // namespace

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

HomLieAntialgebra algebra_from_json(const json& j) {
  const int p = int_member(j, "even_dim", "algebra file");
  const int q = int_member(j, "odd_dim", "algebra file");
  if (p < 0 || q < 0) throw InputError("algebra dimensions must be nonnegative");
  Tensor3 mu = tensor_from_json(member(j, "mu", "algebra file"), p, p, p, "mu");
  Tensor3 nu = tensor_from_json(member(j, "nu", "algebra file"), p, q, q, "nu");
  Tensor3 br = tensor_from_json(member(j, "br", "algebra file"), q, q, p, "br");
  Matrix alpha = matrix_from_json(member(j, "alpha", "algebra file"), p, p, "alpha");
  Matrix beta = matrix_from_json(member(j, "beta", "algebra file"), q, q, "beta");
  return HomLieAntialgebra(p, q, std::move(mu), std::move(nu), std::move(br), std::move(alpha),
                           std::move(beta));
}

ordered_json algebra_to_json(const HomLieAntialgebra& a) {
  ordered_json out;
  out["even_dim"] = a.even_dim();
  out["odd_dim"] = a.odd_dim();
  out["mu"] = tensor_to_json(a.mu());
  out["nu"] = tensor_to_json(a.nu());
  out["br"] = tensor_to_json(a.br());
  out["alpha"] = matrix_to_json(a.alpha());
  out["beta"] = matrix_to_json(a.beta());
  return out;
}

Representation representation_from_json(const json& j, const HomLieAntialgebra& a) {
  const json& mod = member(j, "module", "representation file");
  const int r = int_member(mod, "even_dim", "module");
  const int s = int_member(mod, "odd_dim", "module");
  if (r < 0 || s < 0) throw InputError("module dimensions must be nonnegative");
  HomModule module{r, s, matrix_from_json(member(mod, "alphaV", "module"), r, r, "alphaV"),
                   matrix_from_json(member(mod, "betaV", "module"), s, s, "betaV")};
  const int p = a.even_dim(), q = a.odd_dim();
  return Representation(
      std::move(module),
      matrix_list_from_json(member(j, "rho0_even", "representation file"), p, r, r, "rho0_even"),
      matrix_list_from_json(member(j, "rho0_odd", "representation file"), p, s, s, "rho0_odd"),
      matrix_list_from_json(member(j, "rho1_up", "representation file"), q, s, r, "rho1_up"),
      matrix_list_from_json(member(j, "rho1_down", "representation file"), q, r, s, "rho1_down"));
}

ordered_json representation_to_json(const Representation& rho) {
  ordered_json out;
  ordered_json mod;
  mod["even_dim"] = rho.module().even_dim;
  mod["odd_dim"] = rho.module().odd_dim;
  mod["alphaV"] = matrix_to_json(rho.module().alphaV);
  mod["betaV"] = matrix_to_json(rho.module().betaV);
  out["module"] = std::move(mod);
  const int p = rho.algebra_even_dim(), q = rho.algebra_odd_dim();
  out["rho0_even"] = matrix_list_to_json(p, &Representation::rho0_even, rho);
  out["rho0_odd"] = matrix_list_to_json(p, &Representation::rho0_odd, rho);
  out["rho1_up"] = matrix_list_to_json(q, &Representation::rho1_up, rho);
  out["rho1_down"] = matrix_list_to_json(q, &Representation::rho1_down, rho);
  return out;
}

OmegaTriple omega_from_json(const json& j, const HomLieAntialgebra& a, const HomModule& module) {
  const int p = a.even_dim(), q = a.odd_dim();
  const int r = module.even_dim, s = module.odd_dim;
  return OmegaTriple{tensor_from_json(member(j, "omega0", "omega file"), p, p, r, "omega0"),
                     tensor_from_json(member(j, "omega1", "omega file"), p, q, s, "omega1"),
                     tensor_from_json(member(j, "omega2", "omega file"), q, q, r, "omega2")};
}

ordered_json omega_to_json(const OmegaTriple& omega) {
  ordered_json out;
  out["omega0"] = tensor_to_json(omega.omega0);
  out["omega1"] = tensor_to_json(omega.omega1);
  out["omega2"] = tensor_to_json(omega.omega2);
  return out;
}

NijenhuisCandidate phi_from_json(const json& j, const HomLieAntialgebra& a) {
  return NijenhuisCandidate{
      matrix_from_json(member(j, "phi0", "operator file"), a.even_dim(), a.even_dim(), "phi0"),
      matrix_from_json(member(j, "phi1", "operator file"), a.odd_dim(), a.odd_dim(), "phi1")};
}

ordered_json phi_to_json(const NijenhuisCandidate& phi) {
  ordered_json out;
  out["phi0"] = matrix_to_json(phi.phi0);
  out["phi1"] = matrix_to_json(phi.phi1);
  return out;
}

ordered_json report_to_json(const IdentityReport& report) {
  ordered_json out;
  out["verdict"] = report.ok() ? "pass" : "fail";
  ordered_json identities = ordered_json::array();
  for (const std::string& name : report.identities()) {
    ordered_json item;
    item["name"] = name;
    item["verdict"] = report.passes(name) ? "pass" : "fail";
    identities.push_back(std::move(item));
  }
  out["identities"] = std::move(identities);
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations()) {
    ordered_json item;
    item["identity"] = v.identity;
    item["tuple"] = v.tuple;
    ordered_json residual = ordered_json::array();
    for (const Rational& c : v.residual) residual.push_back(c.str());
    item["residual"] = std::move(residual);
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  return out;
}

ordered_json cohomology_to_json(const CohomologyReport& report) {
  ordered_json out;
  out["degree"] = report.k;
  out["admissible_dim"] = report.admissible_dim;
  out["rank_prev"] = report.rank_prev;
  out["kernel_dim"] = report.kernel_dim;
  out["h_dim"] = report.h_dim;
  ordered_json modular = ordered_json::array();
  for (const ModularCheck& mc : report.modular) {
    ordered_json item;
    item["prime"] = mc.prime;
    item["rank_prev"] = mc.rank_prev ? ordered_json(*mc.rank_prev) : ordered_json(nullptr);
    item["rank_k"] = mc.rank_k ? ordered_json(*mc.rank_k) : ordered_json(nullptr);
    item["agrees"] = mc.agrees;
    modular.push_back(std::move(item));
  }
  out["modular"] = std::move(modular);
  return out;
}

std::string canonical_dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace homanti
