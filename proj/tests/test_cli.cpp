// test_cli.cpp -- end-to-end contract of the bo2d binary: exit codes, CSV
// and JSON shapes, the help-text column lists against the emitted headers,
// config-file handling, and byte-for-byte determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Run the binary with the given arguments; stderr is folded into the
// captured stream only when merge_stderr is set.
RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(BO2D_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

int count_data_rows(const std::string& csv) {
  int n = 0;
  bool first = true;
  for (const std::string& line : lines_of(csv)) {
    if (first) {
      first = false;  // header
      continue;
    }
    if (!line.empty() && line[0] != '#') ++n;
  }
  return n;
}

std::string scratch_path(const std::string& stem) {
  return "/tmp/bo2d_cli_test_" + std::to_string(getpid()) + "_" + stem;
}

}  // namespace

TEST_CASE("help exits 0 and names all six subcommands") {
  const RunResult r = run("--help");
  CHECK(r.exit_code == 0);
  for (const char* sub :
       {"binding", "effpot", "spectrum", "radial", "corrections", "verify"})
    CHECK(r.out.find(sub) != std::string::npos);
}

TEST_CASE("usage and config errors exit 1") {
  CHECK(run("").exit_code == 1);                        // no subcommand
  CHECK(run("binding --no-such-flag").exit_code == 1);  // unknown option
  CHECK(run("binding --umin -1").exit_code == 1);       // invalid range
  CHECK(run("binding --umin 2 --umax 1").exit_code == 1);
  CHECK(run("binding --ucount 1").exit_code == 1);
  CHECK(run("radial --beta2 bogus").exit_code == 1);    // unparsable beta2
  CHECK(run("binding --format yaml").exit_code == 1);
}

TEST_CASE("binding CSV: header equals the documented column list") {
  const std::string columns =
      "u,w,w2,dw,d2w,w2_asymptotic_0,w2_asymptotic_1,residual,status";
  const RunResult r = run("binding --ucount 5");
  REQUIRE(r.exit_code == 0);
  const auto ls = lines_of(r.out);
  REQUIRE(!ls.empty());
  CHECK(ls[0] == columns);
  CHECK(count_data_rows(r.out) == 5);
  // the same list is printed by --help, keeping the contract visible
  const RunResult h = run("binding --help");
  CHECK(h.out.find(columns) != std::string::npos);
}

TEST_CASE("every subcommand's help repeats its emitted header") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"effpot --ucount 4",
       "u,t1b,t1c,t1d,t2,t3a,t3b,total,cross_coeff,v_eff,status"},
      {"spectrum --levels 1",
       "n,K_analytic,K_shooting,discrepancy,energy_ratio,E_n,z_mean,"
       "z_mean_over_zeta0,status"},
      {"radial --ucount 4", "r,z,R,status"},
      {"corrections", "label,closed_form,quadrature,difference,order_tag,"
                      "scale_c,status"},
      {"verify", "name,pass,measured,threshold,detail,status"},
  };
  for (const auto& [args, header] : cases) {
    const RunResult r = run(args);
    INFO("command: ", args);
    REQUIRE(r.exit_code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(!ls.empty());
    CHECK(ls[0] == header);
    const std::string sub = args.substr(0, args.find(' '));
    const RunResult h = run(sub + " --help");
    CHECK(h.out.find(header) != std::string::npos);
  }
}

TEST_CASE("JSON output carries config, rows, summary, findings") {
  const RunResult r = run("binding --ucount 4 --umin 0.01 --umax 2 --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc.contains("config"));
  REQUIRE(doc.contains("rows"));
  REQUIRE(doc.contains("summary"));
  REQUIRE(doc.contains("findings"));
  CHECK(doc["config"]["umin"].get<double>() == 0.01);
  CHECK(doc["config"]["umax"].get<double>() == 2.0);
  CHECK(doc["rows"].size() == 4);
  for (const json& row : doc["rows"]) {
    CHECK(row["status"].get<std::string>() == "ok");
    CHECK(row["w"].is_number());
    CHECK(std::isfinite(row["w"].get<double>()));
  }
}

TEST_CASE("identical configs produce byte-identical output") {
  const RunResult a = run("binding --ucount 20");
  const RunResult b = run("binding --ucount 20");
  CHECK(a.out == b.out);
  const RunResult v1 = run("verify --format json");
  const RunResult v2 = run("verify --format json");
  CHECK(v1.exit_code == 0);
  CHECK(v1.out == v2.out);
}

TEST_CASE("--out writes exactly what stdout would carry") {
  const std::string path = scratch_path("out.csv");
  const RunResult to_file = run("binding --ucount 6 --out " + path);
  REQUIRE(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream file_content;
  file_content << in.rdbuf();
  const RunResult to_stdout = run("binding --ucount 6");
  CHECK(file_content.str() == to_stdout.out);
  std::remove(path.c_str());
}

TEST_CASE("config file is honored and command-line flags override it") {
  const std::string path = scratch_path("cfg.ini");
  {
    std::ofstream cfg(path);
    cfg << "ucount=7\numin=0.01\numax=5\n";
  }
  const RunResult base = run("binding --config " + path);
  REQUIRE(base.exit_code == 0);
  CHECK(count_data_rows(base.out) == 7);
  const RunResult override_run = run("binding --config " + path + " --ucount 3");
  REQUIRE(override_run.exit_code == 0);
  CHECK(count_data_rows(override_run.out) == 3);
  CHECK(run("binding --config /no/such/file.ini").exit_code == 1);
  std::remove(path.c_str());
}

TEST_CASE("spectrum rows close the shooting loop and carry the corrections") {
  const RunResult r = run("spectrum --levels 2 --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["rows"].size() == 2);
  for (const json& row : doc["rows"]) {
    CHECK(row["discrepancy"].get<double>() <= 1e-6);
    CHECK(row["E_n"].get<double>() < 0.0);
  }
  for (const char* key : {"corr_binding_log", "corr_a1", "corr_b", "corr_c",
                          "corr_mixed1", "corr_mixed2"})
    CHECK(doc["summary"].contains(key));
  // the factor-4 note accompanies the stated beta2 choice
  bool found = false;
  for (const json& f : doc["findings"])
    found |= f["name"].get<std::string>() == "ground-state-energy-factor";
  CHECK(found);
}

TEST_CASE("spectrum solver failure exits 2 and names the level") {
  const RunResult r = run("spectrum --levels 1 --beta2 1e6", true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("level") != std::string::npos);
  CHECK(r.out.find("0") != std::string::npos);
}

TEST_CASE("effpot summary reports the fits and the adjudication finding") {
  const RunResult r = run("effpot --ucount 4 --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  const json& s = doc["summary"];
  CHECK(std::fabs(s["coeff_1c"].get<double>() - 0.25) <= 1e-3);
  CHECK(std::fabs(s["coeff_2"].get<double>() + 0.25) <= 1e-3);
  CHECK(std::fabs(s["coeff_3a"].get<double>() - 0.5) <= 1e-3);
  CHECK(std::fabs(s["coeff_1d"].get<double>() + 5.0 / 12.0) <= 1e-3);
  CHECK(std::fabs(s["beta2_extracted"].get<double>() - 1.0 / 12.0) <= 1e-3);
  CHECK(s["beta2_stable"].get<bool>());
  bool found = false;
  for (const json& f : doc["findings"])
    found |= f["name"].get<std::string>() == "centrifugal-coefficient";
  CHECK(found);
}

TEST_CASE("a fit window with no stable extraction exits 3") {
  const RunResult r =
      run("effpot --ucount 4 --fit-window-lo 0.07 --fit-window-hi 0.1", true);
  CHECK(r.exit_code == 3);
}

TEST_CASE("radial emits the level metadata and samples") {
  const RunResult r = run("radial --n 1 --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["summary"]["nodes"].get<int>() == 1);
  CHECK(doc["summary"]["normalization_C"].get<double>() > 0.0);
  REQUIRE(doc["rows"].size() >= 100);
  const json& row = doc["rows"][50];
  const double scale = doc["summary"]["z_scale"].get<double>();
  CHECK(std::fabs(row["z"].get<double>() - scale * row["r"].get<double>()) <=
        1e-15 * std::max(1.0, row["z"].get<double>()));
}

TEST_CASE("corrections lists the six reports in order") {
  const RunResult r = run("corrections --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["rows"].size() == 6);
  const char* want[] = {"binding_log", "a1", "b", "c", "mixed1", "mixed2"};
  for (int i = 0; i < 6; ++i) {
    CHECK(doc["rows"][i]["label"].get<std::string>() == want[i]);
    CHECK(std::fabs(doc["rows"][i]["difference"].get<double>()) <= 1e-9);
  }
}

TEST_CASE("verify passes clean and fails corrupted with exit 4") {
  const RunResult ok = run("verify --format json");
  REQUIRE(ok.exit_code == 0);
  const json doc = json::parse(ok.out);
  CHECK(doc["summary"]["all_pass"].get<bool>());
  int checks = 0;
  for (const json& row : doc["rows"]) {
    CHECK(row["pass"].get<bool>());
    ++checks;
  }
  CHECK(checks >= 30);
  // both adjudication findings present
  bool centrifugal = false, energy_factor = false;
  for (const json& f : doc["findings"]) {
    const std::string name = f["name"].get<std::string>();
    centrifugal |= name == "centrifugal-coefficient";
    energy_factor |= name == "ground-state-energy-factor";
  }
  CHECK(centrifugal);
  CHECK(energy_factor);

  const RunResult bad = run("verify --selftest-corrupt", true);
  CHECK(bad.exit_code == 4);
  CHECK(bad.out.find("binding-residual") != std::string::npos);
}

TEST_CASE("CSV cells containing commas are quoted") {
  const RunResult r = run("verify");
  REQUIRE(r.exit_code == 0);
  // detail cells embed commas; RFC-4180 quoting keeps the column count fixed
  const auto ls = lines_of(r.out);
  bool saw_quoted = false;
  for (const std::string& line : ls)
    if (line.find("\"") != std::string::npos) saw_quoted = true;
  CHECK(saw_quoted);
}
