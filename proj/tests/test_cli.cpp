// End-to-end tests for the homanti binary: exit codes, report stability,
// and agreement between CLI output and the library. Fixture files are
// produced with the canonical serializers into a scratch directory.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "homanti/cohomology.hpp"
#include "homanti/examples.hpp"
#include "homanti/io.hpp"

using namespace homanti;
using nlohmann::ordered_json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the binary through the shell with stderr discarded; arguments with
// shell metacharacters must arrive pre-quoted. The prefix slot takes
// environment assignments.
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd =
      env_prefix + std::string(HOMANTI_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

const std::filesystem::path& scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "homanti-cli-fixtures";
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_fixture(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream f(path);
  REQUIRE(f.good());
  f << text;
  f.close();
  return path.string();
}

std::string write_algebra(const std::string& name, const HomLieAntialgebra& a) {
  return write_fixture(name, canonical_dump(algebra_to_json(a)));
}

std::string write_omega(const std::string& name, const OmegaTriple& omega) {
  return write_fixture(name, canonical_dump(omega_to_json(omega)));
}

// A degree-1 cochain assembled from fiber maps f0: V0 <- a0, f1: V1 <- a1.
CochainSum one_cochain(const HomLieAntialgebra& a, const Representation& rho, const Matrix& f0,
                       const Matrix& f1) {
  CochainSum sum(1);
  Cochain h10(CochainSignature{1, 0}, a.even_dim(), a.odd_dim(), rho.module().even_dim);
  for (int i = 0; i < a.even_dim(); ++i)
    for (int k = 0; k < rho.module().even_dim; ++k) h10.coeff(i, 0, k) = f0.at(k, i);
  if (h10.flat_dim() > 0) sum.add(h10);
  Cochain h01(CochainSignature{0, 1}, a.even_dim(), a.odd_dim(), rho.module().odd_dim);
  for (int j = 0; j < a.odd_dim(); ++j)
    for (int k = 0; k < rho.module().odd_dim; ++k) h01.coeff(0, j, k) = f1.at(k, j);
  if (h01.flat_dim() > 0) sum.add(h01);
  return sum;
}

}  // namespace

TEST_CASE("check accepts an algebra file and reports identities") {
  const std::string path = write_algebra("k1.json", k1());
  const CliResult res = run_cli("check " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("axioms: pass") != std::string::npos);
  CHECK(res.out.find("hanti04") != std::string::npos);
}

TEST_CASE("check --json output is byte-stable and canonical") {
  const CliResult first = run_cli("check k1 --json");
  const CliResult second = run_cli("check k1 --json");
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  const auto doc = nlohmann::json::parse(first.out);
  CHECK(doc.at("command") == "check");
  CHECK(doc.at("sampled") == false);
  CHECK(doc.at("axioms").at("verdict") == "pass");
}

TEST_CASE("check flags a broken product table with the violating tuple") {
  Tensor3 nu(1, 2, 2);
  nu.at(0, 0, 0) = Rational(1);  // breaks the mixed identity; the other slot stays 1/2
  nu.at(0, 1, 1) = Rational(1, 2);
  const HomLieAntialgebra base = k1();
  const HomLieAntialgebra broken(1, 2, base.mu(), nu, base.br(), base.alpha(), base.beta());
  const std::string path = write_algebra("broken-k1.json", broken);

  const CliResult res = run_cli("check " + path);
  CHECK(res.exit_code == 1);
  CHECK(res.out.find("hanti02 fails at (0, 0, 0)") != std::string::npos);
}

TEST_CASE("malformed input exits with code 2") {
  const std::string garbled = write_fixture("garbled.json", "{not json");
  CHECK(run_cli("check " + garbled).exit_code == 2);

  // Structurally valid JSON with a wrong-sized twist matrix.
  auto doc = nlohmann::json::parse(canonical_dump(algebra_to_json(k1())));
  doc["alpha"] = nlohmann::json::array({"1", "0"});
  const std::string misshapen = write_fixture("misshapen.json", doc.dump());
  CHECK(run_cli("check " + misshapen).exit_code == 2);

  CHECK(run_cli("check no-such-entry").exit_code == 2);
  CHECK(run_cli("check 'k1-twisted?mu=0'").exit_code == 2);
  CHECK(run_cli("frobnicate k1").exit_code == 2);
}

TEST_CASE("catalog entries resolve with parameters") {
  CHECK(run_cli("check k1").exit_code == 0);
  CHECK(run_cli("check 'k1-twisted?mu=3/1' --multiplicative").exit_code == 0);
  CHECK(run_cli("check 'k1-twisted?mu=-1'").exit_code == 0);
}

TEST_CASE("conformal spot checks are deterministic and fail as expected") {
  const CliResult first = run_cli("check 'conformal?r=2' --multiplicative");
  const CliResult second = run_cli("check 'conformal?r=2' --multiplicative");
  CHECK(first.exit_code == 1);
  CHECK(first.out == second.out);
  CHECK(first.out.find("hanti01: pass") != std::string::npos);
  CHECK(first.out.find("hanti02: fail") != std::string::npos);
  CHECK(first.out.find("mult-ee: pass") != std::string::npos);
  CHECK(first.out.find("mult-eo: fail") != std::string::npos);

  // Only spot checks are available: no finite table, so no complex.
  CHECK(run_cli("cohomology 'conformal?r=2' --degree 2").exit_code == 2);
}

TEST_CASE("cohomology reports the frozen dimensions for the adjoint module") {
  const CliResult res = run_cli("cohomology k1 --rep adjoint --degree 2 --json");
  REQUIRE(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  const auto& rep = doc.at("report");
  CHECK(rep.at("degree") == 2);
  CHECK(rep.at("admissible_dim") == 6);
  CHECK(rep.at("rank_prev") == 2);
  CHECK(rep.at("kernel_dim") == 2);
  CHECK(rep.at("h_dim") == 0);
  CHECK(rep.at("h_dim").get<long>() ==
        rep.at("kernel_dim").get<long>() - rep.at("rank_prev").get<long>());
  REQUIRE(rep.at("modular").size() == 2);
  for (const auto& mc : rep.at("modular")) CHECK(mc.at("agrees") == true);
}

TEST_CASE("cohomology supports the trivial module and representation files") {
  const CliResult trivial = run_cli("cohomology k1 --rep trivial --degree 2 --json");
  REQUIRE(trivial.exit_code == 0);
  const auto doc = nlohmann::json::parse(trivial.out);
  CHECK(doc.at("report").at("admissible_dim") == 4);
  CHECK(doc.at("report").at("rank_prev") == 3);
  CHECK(doc.at("report").at("h_dim") == 0);

  const std::string rep_path = write_fixture(
      "adjoint.json", canonical_dump(representation_to_json(adjoint_representation(k1()))));
  const CliResult from_file = run_cli("cohomology k1 --rep " + rep_path + " --degree 2 --json");
  REQUIRE(from_file.exit_code == 0);
  const auto doc2 = nlohmann::json::parse(from_file.out);
  CHECK(doc2.at("report").at("admissible_dim") == 6);
  CHECK(doc2.at("report").at("h_dim") == 0);
}

TEST_CASE("on an abelian algebra with trivial coefficients d vanishes") {
  const HomLieAntialgebra flat(1, 2, Tensor3(1, 1, 1), Tensor3(1, 2, 2), Tensor3(2, 2, 1),
                               Matrix::identity(1), Matrix::identity(2));
  const std::string path = write_algebra("abelian.json", flat);
  const CliResult res = run_cli("cohomology " + path + " --rep trivial --degree 2 --json");
  REQUIRE(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("report").at("admissible_dim") == 4);
  CHECK(doc.at("report").at("rank_prev") == 0);
  CHECK(doc.at("report").at("h_dim") == doc.at("report").at("admissible_dim"));
}

TEST_CASE("cohomology degree cap defaults to 4 and honours the environment") {
  const std::string base = "cohomology k1 --rep trivial";
  CHECK(run_cli(base + " --degree 9", "env -u HOMANTI_MAX_DEGREE ").exit_code == 2);
  CHECK(run_cli(base + " --degree 0").exit_code == 2);
  // Raising the cap makes degree 5 legal; shrinking it blocks degree 2.
  CHECK(run_cli(base + " --degree 5", "HOMANTI_MAX_DEGREE=5 ").exit_code == 0);
  CHECK(run_cli(base + " --degree 2", "HOMANTI_MAX_DEGREE=1 ").exit_code == 2);
  CHECK(run_cli(base + " --degree 2", "HOMANTI_MAX_DEGREE=bogus ").exit_code == 2);
}

TEST_CASE("cohomology refuses an algebra that fails the gate checks") {
  // Axioms hold but the even twist is not multiplicative.
  Tensor3 mu(2, 2, 2);
  mu.at(0, 0, 1) = Rational(1);
  Matrix alpha = Matrix::identity(2);
  alpha.at(1, 1) = Rational(0);
  const HomLieAntialgebra gate(2, 0, mu, Tensor3(2, 0, 0), Tensor3(0, 0, 2), alpha,
                               Matrix::identity(0));
  const std::string path = write_algebra("gate.json", gate);

  const CliResult res = run_cli("cohomology " + path + " --degree 1");
  CHECK(res.exit_code == 1);
  CHECK(res.out.find("refused") != std::string::npos);
  CHECK(res.out.find("mult-ee") != std::string::npos);

  const CliResult as_json = run_cli("cohomology " + path + " --degree 1 --json");
  CHECK(as_json.exit_code == 1);
  CHECK(nlohmann::json::parse(as_json.out).contains("refused"));
}

TEST_CASE("extend builds the extension of a coboundary and accepts it") {
  const HomLieAntialgebra a = k1();
  const Representation rho = adjoint_representation(a);
  Matrix f0(1, 1), f1(2, 2);
  f0.at(0, 0) = Rational(3);
  f1.at(0, 1) = Rational(1);
  f1.at(1, 0) = Rational(-2);
  const CochainSum df = apply_d(a, rho, one_cochain(a, rho, f0, f1));
  const std::string path = write_omega("coboundary.json", omega_from_cochain(a, rho, df));

  const CliResult res =
      run_cli("extend k1 --rep adjoint --cocycle " + path + " --emit-algebra --json");
  REQUIRE(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("axioms").at("verdict") == "pass");
  CHECK(doc.at("algebra").at("even_dim") == 2);
  CHECK(doc.at("algebra").at("odd_dim") == 4);

  // The emitted table parses back into an algebra that passes the axioms.
  const HomLieAntialgebra ext = algebra_from_json(doc.at("algebra"));
  CHECK(check_axioms(ext).ok());
}

TEST_CASE("extend rejects non-cocycles through the extension's own axioms") {
  const HomLieAntialgebra a = k1();
  const Representation rho = adjoint_representation(a);
  // Deterministic pick: the first admissible degree-2 basis direction that
  // fails the cocycle condition.
  CochainSum bad(2);
  bool found = false;
  for (const CochainSignature& sig : degree_signatures(a, rho, 2)) {
    for (const Cochain& b : admissible_basis(a, rho, sig)) {
      CochainSum candidate(2);
      candidate.add(b);
      if (!is_cocycle(a, rho, candidate)) {
        bad = candidate;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  REQUIRE(found);
  const std::string path = write_omega("noncocycle.json", omega_from_cochain(a, rho, bad));

  const CliResult res = run_cli("extend k1 --rep adjoint --cocycle " + path);
  CHECK(res.exit_code == 1);
  CHECK(res.out.find("fail") != std::string::npos);

  // An inadmissible direction is an input error, not a mathematical verdict.
  OmegaTriple skew{Tensor3(1, 1, 1), Tensor3(1, 2, 2), Tensor3(2, 2, 1)};
  skew.omega1.at(0, 0, 1) = Rational(1);
  const std::string inadmissible = write_omega("inadmissible.json", skew);
  const CliResult refused =
      run_cli("extend 'k1-twisted?mu=3/1' --rep adjoint --cocycle " + inadmissible);
  CHECK(refused.exit_code == 2);
}

TEST_CASE("deform at t = 0 reproduces the canonical table") {
  const HomLieAntialgebra a = k1();
  const OmegaTriple direction{a.mu(), a.nu(), a.br()};
  const std::string path = write_omega("structure.json", direction);

  const CliResult res = run_cli("deform k1 --omega " + path + " --t 0 --json");
  REQUIRE(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("axioms").at("verdict") == "pass");
  CHECK(doc.at("algebra") == nlohmann::json::parse(canonical_dump(algebra_to_json(a))));

  // Scaling the whole table is a symmetry, so t = 1 still passes.
  CHECK(run_cli("deform k1 --omega " + path + " --t 1").exit_code == 0);
  CHECK(run_cli("deform k1 --omega " + path + " --t 1/3 --json").exit_code == 0);
}

TEST_CASE("nijenhuis derives the structure direction from the identity operator") {
  const CliResult res = run_cli("nijenhuis k1 --phi id --json");
  REQUIRE(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("verdict") == "nijenhuis");
  const HomLieAntialgebra a = k1();
  const ordered_json expected = omega_to_json(OmegaTriple{a.mu(), a.nu(), a.br()});
  CHECK(doc.at("omega") == nlohmann::json::parse(canonical_dump(expected)));
  REQUIRE(doc.at("triviality").size() == 4);
  for (const auto& item : doc.at("triviality")) CHECK(item.at("morphism").at("verdict") == "pass");

  CHECK(run_cli("nijenhuis k1 --phi zero").exit_code == 0);
  CHECK(run_cli("nijenhuis 'k1-twisted?mu=1/5' --phi id").exit_code == 0);
}

TEST_CASE("nijenhuis reports the failing identity for a non-operator") {
  NijenhuisCandidate phi{Matrix::identity(1), Matrix::identity(2).scaled(Rational(2))};
  const std::string path =
      write_fixture("phi-id-2id.json", canonical_dump(phi_to_json(phi)));
  const CliResult res = run_cli("nijenhuis k1 --phi " + path);
  CHECK(res.exit_code == 1);
  CHECK(res.out.find("nij03: fail") != std::string::npos);
  CHECK(res.out.find("nij01: pass") != std::string::npos);
}

TEST_CASE("--out writes the same bytes the command prints") {
  const auto out_path = (scratch_dir() / "report.json").string();
  const CliResult direct = run_cli("check k1 --json");
  const CliResult redirected = run_cli("check k1 --json --out " + out_path);
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.out.empty());
  std::ifstream f(out_path);
  REQUIRE(f.good());
  std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(content == direct.out);
}
