#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "netocc/io.hpp"

using namespace netocc;
namespace nt = netocc::testing;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/netocc_io_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kP3Json = R"({
  "nodes": [{"id": "V1"}, {"id": "V2", "label": "hub"}, {"id": "V3"}],
  "edges": [["V1", "V2"], ["V2", "V3"]],
  "lengths": {"V1-V2": 2.0, "V2-V3": 3.0}
})";

}  // namespace

TEST_CASE("format_number is deterministic and locale independent") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-250.0) == "-250");
  CHECK(format_number(1.0 / 3.0) == format_number(1.0 / 3.0));
  // Round trip through text loses at most the 13th digit.
  double v = 0.04544064330490892;
  CHECK(std::stod(format_number(v)) == doctest::Approx(v).epsilon(1e-11));
}

TEST_CASE("network JSON round trip") {
  TempFile file("p3.json", kP3Json);
  UrbanNetwork net = read_network_json(file.path);
  CHECK(net.size() == 3);
  CHECK(net.nodes()[1].label == "hub");
  CHECK(net.edges().size() == 2);
  DistanceMatrix d = shortest_path_distances(net, /*metric=*/true);
  CHECK(d.d(0, 2) == doctest::Approx(5.0));
}

TEST_CASE("network JSON errors name the offender") {
  SUBCASE("unknown edge endpoint") {
    TempFile file("bad_edge.json", R"({
      "nodes": [{"id": "A"}, {"id": "B"}],
      "edges": [["A", "C"]]
    })");
    CHECK_THROWS_WITH_AS(read_network_json(file.path),
                         doctest::Contains("C"), IngestError);
  }
  SUBCASE("missing length entry") {
    TempFile file("bad_len.json", R"({
      "nodes": [{"id": "A"}, {"id": "B"}],
      "edges": [["A", "B"]],
      "lengths": {"A-Z": 1.0}
    })");
    CHECK_THROWS_AS(read_network_json(file.path), IngestError);
  }
  SUBCASE("malformed JSON") {
    TempFile file("broken.json", "{ nodes: ");
    CHECK_THROWS_AS(read_network_json(file.path), IngestError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_network_json("/tmp/netocc_does_not_exist.json"),
                    IngestError);
  }
}

TEST_CASE("snapshot CSV ingestion") {
  TempFile netfile("p3b.json", kP3Json);
  UrbanNetwork net = read_network_json(netfile.path);

  SUBCASE("valid file") {
    TempFile file("snap.csv", "V1,V2,V3\n105,297,98\n99,303,98\n97,289,113\n");
    auto snaps = read_snapshot_csv(file.path, net);
    CHECK(snaps.size() == 3);
    CHECK(snaps[0](1) == doctest::Approx(297.0));
    CHECK(snaps[2](2) == doctest::Approx(113.0));
  }
  SUBCASE("header out of order is rejected") {
    TempFile file("snap_bad.csv", "V2,V1,V3\n1,2,3\n");
    CHECK_THROWS_WITH_AS(read_snapshot_csv(file.path, net),
                         doctest::Contains("V2"), IngestError);
  }
  SUBCASE("ragged row is rejected") {
    TempFile file("snap_ragged.csv", "V1,V2,V3\n1,2\n");
    CHECK_THROWS_AS(read_snapshot_csv(file.path, net), IngestError);
  }
  SUBCASE("non-numeric cell names its position") {
    TempFile file("snap_text.csv", "V1,V2,V3\n1,abc,3\n");
    CHECK_THROWS_AS(read_snapshot_csv(file.path, net), IngestError);
  }
}

TEST_CASE("node vector JSON requires every node") {
  TempFile netfile("p3c.json", kP3Json);
  UrbanNetwork net = read_network_json(netfile.path);
  SUBCASE("valid") {
    TempFile file("vec.json", R"({"V1": 2.0, "V2": 0.3333, "V3": 1.0})");
    Eigen::VectorXd w = read_node_vector_json(file.path, net);
    CHECK(w(0) == doctest::Approx(2.0));
  }
  SUBCASE("missing node named") {
    TempFile file("vec_missing.json", R"({"V1": 2.0, "V3": 1.0})");
    CHECK_THROWS_WITH_AS(read_node_vector_json(file.path, net),
                         doctest::Contains("V2"), IngestError);
  }
}

TEST_CASE("matrix CSV reader") {
  TempFile file("mat.csv", "2,1\n1,1\n");
  Eigen::MatrixXd m = read_matrix_csv(file.path);
  CHECK(m.rows() == 2);
  CHECK(m(0, 0) == doctest::Approx(2.0));
  TempFile ragged("mat_ragged.csv", "2,1\n1\n");
  CHECK_THROWS_AS(read_matrix_csv(ragged.path), IngestError);
}

TEST_CASE("writers are byte deterministic") {
  TempFile netfile("p3d.json", kP3Json);
  UrbanNetwork net = read_network_json(netfile.path);
  Eigen::VectorXd x(3);
  x << 100, 300, 100;
  std::string a = vector_table_csv(net, x, "centrality");
  std::string b = vector_table_csv(net, x, "centrality");
  CHECK(a == b);
  CHECK(a == "node,centrality\nV1,100\nV2,300\nV3,100\n");

  Eigen::MatrixXd m(2, 2);
  m << 0.5, -0.25, 1, 0;
  std::string csv = matrix_csv(m, {"r1", "r2"}, {"c1", "c2"});
  CHECK(csv == ",c1,c2\nr1,0.5,-0.25\nr2,1,0\n");
}
