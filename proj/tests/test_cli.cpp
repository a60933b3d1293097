#include "optomech/cli/commands.hpp"
#include "optomech/cubic.hpp"
#include "optomech/quantum.hpp"
#include "optomech/steady_state.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace optomech;
using namespace optomech::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json bistable_config() {
  return json::parse(R"({
    "command": "bistability",
    "params": {"omega_m": 1.0, "kappa": 0.15, "gamma": 0.005, "g0": 0.005, "A_l": 5.0},
    "grids": {"Delta0": {"start": -2.0, "stop": 1.0, "count": 601}},
    "output_dir": "out/bistability"
  })");
}

std::string error_of(const json& doc) {
  try {
    parse_config(doc);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("optomech_test_cli_" + tag);
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Parses CSV text back into columns, as a downstream consumer would.
std::vector<std::vector<double>> parse_csv(const std::string& text, std::vector<std::string>& header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  header.clear();
  std::istringstream h(line);
  for (std::string cell; std::getline(h, cell, ',');) header.push_back(cell);
  std::vector<std::vector<double>> cols(header.size());
  while (std::getline(in, line)) {
    std::istringstream r(line);
    std::size_t j = 0;
    for (std::string cell; std::getline(r, cell, ','); ++j) cols.at(j).push_back(std::stod(cell));
  }
  return cols;
}

} // namespace

TEST_CASE("bistability config parses") {
  const RunSpec spec = parse_config(bistable_config());
  CHECK(spec.command == Command::bistability);
  CHECK(spec.params.kappa == 0.15);
  CHECK(spec.params.gamma == 0.005);
  CHECK(spec.params.A_l == 5.0);
  CHECK(spec.params.omega_m == 1.0);
  CHECK(spec.grid("Delta0").count == 601);
  CHECK(spec.grid("Delta0").values().front() == -2.0);
  CHECK(spec.grid("Delta0").values().back() == 1.0);
  CHECK(spec.seed == 0);
}

TEST_CASE("grid invariants are enforced") {
  auto doc = bistable_config();
  doc["grids"]["Delta0"]["count"] = 1;
  CHECK(error_of(doc).find("count >= 2") != std::string::npos);

  doc = bistable_config();
  doc["grids"]["Delta0"]["stop"] = -3.0;
  CHECK(error_of(doc).find("stop > start") != std::string::npos);

  doc = bistable_config();
  doc["grids"].erase("Delta0");
  CHECK(error_of(doc).find("Delta0") != std::string::npos);
}

TEST_CASE("unknown keys are rejected with a suggestion") {
  auto doc = bistable_config();
  doc["params"]["gamma_m"] = 0.005;
  const std::string message = error_of(doc);
  CHECK(message.find("gamma_m") != std::string::npos);
  CHECK(message.find("\"gamma\"") != std::string::npos);

  doc = bistable_config();
  doc["outptu_dir"] = "x";
  CHECK(error_of(doc).find("output_dir") != std::string::npos);

  doc = bistable_config();
  doc["command"] = "bistabilty";
  CHECK(error_of(doc).find("\"bistability\"") != std::string::npos);
}

TEST_CASE("invalid parameters name the field") {
  auto doc = bistable_config();
  doc["params"]["kappa"] = -1.0;
  CHECK(error_of(doc).find("kappa") != std::string::npos);
  doc = bistable_config();
  doc["params"].erase("gamma");
  CHECK(error_of(doc).find("gamma") != std::string::npos);
}

TEST_CASE("load_config reports file problems") {
  TempDir dir("load");
  CHECK_THROWS_AS(load_config(dir.path / "missing.json"), IoError);

  const fs::path bad = dir.path / "bad.json";
  std::ofstream(bad) << "{\n  \"command\": \"steady\",\n  \"params\": {\"kappa\": 0.1,,}\n}\n";
  try {
    load_config(bad);
    FAIL("malformed JSON was accepted");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("bad.json:3:") != std::string::npos);
  }
}

TEST_CASE("metadata round-trips the run spec") {
  RunSpec spec = parse_config(bistable_config());
  spec.seed = 42;
  CHECK(parse_config(to_json(spec)) == spec);

  TempDir dir("roundtrip");
  const auto tables = run_command(spec);
  write_results(tables, dir.path);
  const fs::path sidecar = dir.path / "bistability.json";
  REQUIRE(fs::exists(sidecar));
  CHECK(load_config(sidecar) == spec);

  auto cov = json::parse(R"({"command": "covariance",
    "params": {"kappa": 0.15, "gamma": 0.005, "g0": 0.005, "A_l": 5.0, "Delta0": -0.5, "n_th": 3.0},
    "options": {"t_end": 10.0, "dt": 0.01, "stride": 100}})");
  const RunSpec c = parse_config(cov);
  CHECK(parse_config(to_json(c)) == c);
}

TEST_CASE("CSV layout") {
  ResultTable empty("empty", {"a", "b"});
  CHECK(to_csv(empty) == "a,b\n");

  ResultTable t("small", {"x", "y"});
  t.add_row({0.1, -2.0});
  t.add_row({1e-300, 3.0});
  const std::string text = to_csv(t);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  CHECK(text.find('\r') == std::string::npos);
  std::vector<std::string> header;
  const auto cols = parse_csv(text, header);
  CHECK(cols[0][0] == 0.1); // lossless through 17 digits
  CHECK(cols[0][1] == 1e-300);
  CHECK(format_number(0.1) == "0.10000000000000001");

  CHECK_THROWS(t.add_row({1.0}));
  CHECK_THROWS(t.column("z"));

  TempDir dir("csv");
  emit_csv(empty, dir.path / "empty.csv");
  CHECK(slurp(dir.path / "empty.csv") == "a,b\n");
  CHECK(fs::exists(dir.path / "empty.json"));
  CHECK_THROWS_AS(emit_csv(t, dir.path / "no" / "such" / "dir.csv"), IoError);
}

TEST_CASE("identical specs give byte-identical files") {
  auto doc = bistable_config();
  doc["grids"]["Delta0"]["count"] = 151;
  const RunSpec spec = parse_config(doc);
  TempDir a("det_a");
  TempDir b("det_b");
  const auto first = write_results(run_command(spec), a.path);
  const auto second = write_results(run_command(spec), b.path);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(slurp(first[i]) == slurp(second[i]));
    CHECK(slurp(fs::path(first[i]).replace_extension(".json")) ==
          slurp(fs::path(second[i]).replace_extension(".json")));
  }
}

TEST_CASE("damping curve shape") {
  const RunSpec spec = parse_config(json::parse(R"({"command": "damping",
    "params": {"kappa": 0.1, "gamma": 0.005},
    "grids": {"Delta": {"start": -2.0, "stop": 2.0, "count": 401}},
    "options": {"g_s": 0.05}})"));
  const auto tables = run_command(spec);
  REQUIRE(tables.size() == 1);
  const auto& t = tables[0];
  REQUIRE(t.rows() == 401);
  const auto& Delta = t.column("Delta");
  const auto& g = t.column("gamma_om");
  CHECK(Delta[200] == 0.0);
  CHECK(g[200] == 0.0);
  const auto max_at = std::max_element(g.begin(), g.end()) - g.begin();
  const auto min_at = std::min_element(g.begin(), g.end()) - g.begin();
  CHECK(std::abs(Delta[static_cast<std::size_t>(max_at)] + 1.0) <= 0.05);
  CHECK(std::abs(Delta[static_cast<std::size_t>(min_at)] - 1.0) <= 0.05);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    CHECK(t.column("total_damping")[i] == doctest::Approx(0.005 + g[i]).epsilon(1e-14));
  }
}

TEST_CASE("steady command without coupling is the linear cavity") {
  const RunSpec spec = parse_config(json::parse(R"({"command": "steady",
    "params": {"kappa": 0.15, "gamma": 0.005, "A_l": 5.0, "Delta0": 0.3}})"));
  const auto t = run_command(spec).at(0);
  REQUIRE(t.rows() == 1);
  const std::complex<double> alpha = 5.0 / std::complex<double>(0.075, -0.3);
  CHECK(t.column("N_o")[0] == doctest::Approx(std::norm(alpha)).epsilon(1e-12));
  CHECK(t.column("alpha_re")[0] == doctest::Approx(alpha.real()).epsilon(1e-12));
  CHECK(t.column("alpha_im")[0] == doctest::Approx(alpha.imag()).epsilon(1e-12));
  CHECK(t.column("beta_re")[0] == 0.0);
  CHECK(t.column("beta_im")[0] == 0.0);
  CHECK(t.column("Delta_eff")[0] == 0.3);
  CHECK(t.column("a_out_re")[0] == doctest::Approx(-std::sqrt(0.15) * alpha.real()).epsilon(1e-12));
}

TEST_CASE("covariance run settles on the steady covariance") {
  const RunSpec spec = parse_config(json::parse(R"({"command": "covariance",
    "params": {"kappa": 0.15, "gamma": 0.005, "g0": 0.005, "A_l": 5.0, "Delta0": -0.5, "n_th": 2.0},
    "options": {"t_end": 8000.0, "dt": 0.05, "stride": 1000}})"));
  const auto tables = run_command(spec);
  REQUIRE(tables.size() == 2);
  const auto& series = tables[0];
  const auto& steady = tables[1];
  CHECK(series.column("t").back() == doctest::Approx(8000.0));
  for (std::size_t j = 1; j < series.cols(); ++j) {
    const auto& name = series.column_names()[j];
    CHECK(std::abs(series.column(j).back() - steady.column(name)[0]) <= 1e-6);
  }
  CHECK(steady.column("lyapunov_residual")[0] <= 1e-8 * 0.075);
  CHECK(steady.column("min_uncertainty_eigenvalue")[0] >= -1e-9);

  auto bad = to_json(spec);
  bad["options"]["branch"] = 2;
  CHECK_THROWS_AS(run_command(parse_config(bad)), ConfigError);
}

TEST_CASE("step bound violations are config errors") {
  const RunSpec spec = parse_config(json::parse(R"({"command": "mean-field",
    "params": {"kappa": 0.15, "gamma": 0.005, "g0": 0.005, "A_l": 5.0},
    "options": {"t_end": 10.0, "dt": 1.0}})"));
  CHECK_THROWS_AS(run_command(spec), ConfigError);
}

TEST_CASE("emitted tables pass module invariants") {
  TempDir dir("invariants");

  // Steady occupancies are roots of the cubic, re-read from text.
  auto doc = json::parse(R"({"command": "steady",
    "params": {"kappa": 0.15, "gamma": 0.005, "g0": 0.005, "A_l": 5.0, "Delta0": -0.2}})");
  RunSpec spec = parse_config(doc);
  write_results(run_command(spec), dir.path);
  std::vector<std::string> header;
  auto cols = parse_csv(slurp(dir.path / "steady.csv"), header);
  const auto N_col = std::find(header.begin(), header.end(), "N_o") - header.begin();
  const auto& N = cols[static_cast<std::size_t>(N_col)];
  CHECK(N.size() == 3);
  const CubicProblem cubic = intracavity_cubic(spec.params);
  for (double n : N) CHECK(std::abs(cubic(n)) <= cubic.residual_tolerance());

  // Damping and spring are odd in the detuning.
  doc = json::parse(R"({"command": "spring",
    "params": {"kappa": 0.1, "gamma": 0.005},
    "grids": {"Delta": {"start": -2.0, "stop": 2.0, "count": 1001}},
    "options": {"g_s": 0.05}})");
  write_results(run_command(parse_config(doc)), dir.path);
  cols = parse_csv(slurp(dir.path / "spring.csv"), header);
  for (std::size_t i = 0; i < cols[1].size(); ++i) {
    CHECK(std::abs(cols[1][i] + cols[1][cols[1].size() - 1 - i]) <= 1e-12);
  }

  // Steady covariance satisfies the Lyapunov equation from its printed digits.
  doc = json::parse(R"({"command": "covariance",
    "params": {"kappa": 0.15, "gamma": 0.005, "n_th": 1.0},
    "options": {"t_end": 1.0, "dt": 0.05, "Delta": -1.0, "g_s": 0.05}})");
  spec = parse_config(doc);
  write_results(run_command(spec), dir.path);
  cols = parse_csv(slurp(dir.path / "covariance_steady.csv"), header);
  Matrix4 V;
  std::size_t k = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) V(i, j) = V(j, i) = cols[k++][0];
  }
  const auto A = drift_matrix(FluctuationCoefficients{0.15, 0.005, 1.0, -1.0, 0.05});
  const auto D = diffusion_matrix(0.15, 0.005, 1.0);
  CHECK(lyapunov_residual(A, CovarianceMatrix{V}, D) <= 1e-8 * D.entries.cwiseAbs().maxCoeff());
}
