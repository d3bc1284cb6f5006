// End-to-end checks of the installed command-line surface. The binary path
// and fixture directory arrive via NETOCC_BIN / NETOCC_DATA.

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() {
  const char* p = std::getenv("NETOCC_BIN");
  REQUIRE(p != nullptr);
  return p;
}

std::string data(const std::string& name) {
  const char* p = std::getenv("NETOCC_DATA");
  REQUIRE(p != nullptr);
  return std::string(p) + "/" + name;
}

int run(const std::string& args) {
  std::string cmd = bin() + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

int count_of(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("centrality on the toy network") {
  std::string out = "/tmp/netocc_cli_centrality";
  int code = run("centrality --network " + data("p3.json") +
                 " --weights " + data("weights.json") + " --total 500 --out " +
                 out);
  CHECK(code == 0);
  std::string csv = slurp(out + "/centrality.csv");
  CHECK(csv == "node,centrality\nV1,100\nV2,300\nV3,100\n");
  std::string js = slurp(out + "/centrality.json");
  CHECK(contains(js, "\"V2\": \"300\""));

  SUBCASE("output is byte deterministic across runs") {
    std::string out2 = "/tmp/netocc_cli_centrality2";
    CHECK(run("centrality --network " + data("p3.json") + " --weights " +
              data("weights.json") + " --total 500 --out " + out2) == 0);
    CHECK(slurp(out2 + "/centrality.csv") == csv);
    CHECK(slurp(out2 + "/centrality.json") == js);
  }
}

TEST_CASE("solve-shifted on the toy model") {
  std::string out = "/tmp/netocc_cli_shifted";
  int code = run("solve-shifted --network " + data("p3.json") + " --weights " +
                 data("weights.json") + " --forced " + data("forced_one.csv") +
                 " --total 450 --out " + out);
  CHECK(code == 0);
  std::string csv = slurp(out + "/occupancy.csv");
  CHECK(csv == "node,occupancy\nV1,50\nV2,250\nV3,150\n");
  std::string js = slurp(out + "/occupancy.json");
  CHECK(contains(js, "\"mu\": \"0.6\""));
  CHECK(contains(js, "conservation_defect"));
}

TEST_CASE("fit with known forced terms") {
  std::string out = "/tmp/netocc_cli_fit";
  int code = run("fit --network " + data("p3.json") + " --snapshots " +
                 data("snapshots.csv") + " --forced " + data("forced.csv") +
                 " --out " + out);
  CHECK(code == 0);
  std::string js = slurp(out + "/fit.json");
  CHECK(contains(js, "\"mode\": \"known-f\""));
  CHECK(contains(js, "0.0454406433049"));
  CHECK(contains(js, "0.177064874649"));
  std::string csv = slurp(out + "/weights.csv");
  CHECK(contains(csv, "node,weight"));
}

TEST_CASE("sensitivity emits tables and plots") {
  std::string out = "/tmp/netocc_cli_sens";
  int code = run("sensitivity --network " + data("p3.json") + " --weights " +
                 data("weights.json") + " --total 500 --param w:1 --param w:2 "
                 "--param w:3 --format csv,json,svg --out " + out);
  CHECK(code == 0);
  std::string der = slurp(out + "/derivatives.csv");
  CHECK(contains(der, ",w:1,w:2,w:3"));
  CHECK(contains(der, "V2,20,-180,20"));
  std::string ela = slurp(out + "/elasticities.csv");
  CHECK(contains(ela, "V2,0.133333333333,-0.2,0.0666666666667"));

  std::string heat = slurp(out + "/elasticity_heatmap.svg");
  CHECK(count_of(heat, "<rect") >= 9);  // one cell per (node, parameter)
  std::string bars = slurp(out + "/elasticity_bars.svg");
  CHECK(count_of(bars, "<rect") >= 9);
  CHECK(contains(heat, "</svg>"));
}

TEST_CASE("inverse from a matrix CSV") {
  std::string out = "/tmp/netocc_cli_inverse";
  int code = run("inverse --matrix " + data("inverse_fixture.csv") +
                 " --lambda 1 --out " + out);
  CHECK(code == 0);
  std::string js = slurp(out + "/inverse.json");
  CHECK(contains(js, "0.541196100146"));
  CHECK(contains(js, "0.76536686473"));
}

TEST_CASE("exit codes distinguish failure families") {
  // Usage / ingestion errors -> 1.
  CHECK(run("centrality --network /tmp/netocc_missing_net.json") == 1);
  CHECK(run("unknown-subcommand") == 1);
  CHECK(run("centrality --network " + data("p3.json") + " --weights " +
            data("weights.json") + " --unit") == 1);
  // Model infeasibility -> 2 (f = 0 belongs to the eigenvector case).
  CHECK(run("solve-shifted --network " + data("p3.json") + " --weights " +
            data("weights.json") + " --forced " + data("forced_zero.csv") +
            " --total 450 --out /tmp/netocc_cli_zero") == 2);
  // Estimation failure -> 3 (identical snapshots make the joint fit
  // degenerate).
  CHECK(run("fit --network " + data("p3.json") + " --snapshots " +
            data("snapshots_identical.csv") +
            " --out /tmp/netocc_cli_badfit") == 3);
}
