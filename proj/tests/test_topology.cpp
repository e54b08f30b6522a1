#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "resbench/topology.hpp"

using namespace resbench;

namespace {

HardwareTopology path3_topology() {
  HardwareTopology t;
  t.name = "path3";
  t.n_qubits = 3;
  t.couplers = {{0, 1}, {1, 2}};
  t.readout_err = {{0, 0}, {0, 0}, {0, 0}};
  t.cnot_err = {};
  return t;
}

}  // namespace

TEST_SUITE("topology") {
  TEST_CASE("induced subgraph restricts edges and records the map") {
    const HardwareTopology t = path3_topology();
    auto [g, map] = induced_subgraph(t, {0, 1});
    CHECK(g.size() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(map == std::vector<int>{0, 1});
  }

  TEST_CASE("disconnected restriction is rejected") {
    CHECK_THROWS_AS(induced_subgraph(path3_topology(), {0, 2}), DisconnectedSubgraph);
  }

  TEST_CASE("tee-shaped map induces a path on the arm") {
    HardwareTopology t;
    t.name = "tee";
    t.n_qubits = 5;
    t.couplers = {{0, 1}, {1, 2}, {1, 3}, {3, 4}};
    t.readout_err.assign(5, {0, 0});
    // Brute-force oracle: restrict couplers to {1,3,4} by hand.
    // pairs: (1,3) -> local (0,1); (3,4) -> local (1,2); (1,4) absent.
    auto [g, map] = induced_subgraph(t, {1, 3, 4});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(map == std::vector<int>{1, 3, 4});
  }

  TEST_CASE("subset validation") {
    const HardwareTopology t = path3_topology();
    CHECK_THROWS_AS(induced_subgraph(t, {0, 0}), ConfigError);
    CHECK_THROWS_AS(induced_subgraph(t, {0, 7}), VertexOutOfRange);
  }

  TEST_CASE("validate rejects malformed maps") {
    HardwareTopology t = path3_topology();
    t.couplers.push_back({0, 0});
    CHECK_THROWS_AS(t.validate(), ConfigError);

    t = path3_topology();
    t.readout_err.pop_back();
    CHECK_THROWS_AS(t.validate(), ConfigError);

    t = path3_topology();
    t.readout_err[0] = {1.5, 0.0};
    CHECK_THROWS_AS(t.validate(), ConfigError);

    t = path3_topology();
    t.cnot_err = {{0, 2, 0.1}};  // not a coupler
    CHECK_THROWS_AS(t.validate(), ConfigError);

    t = path3_topology();
    t.n_qubits = 4;
    t.readout_err.push_back({0, 0});
    t.couplers = {{0, 1}, {2, 3}};  // disconnected
    CHECK_THROWS_AS(t.validate(), ConfigError);
  }

  TEST_CASE("bundled fixtures load, validate and round-trip") {
    const std::string dir = std::string(RESBENCH_DATA_DIR) + "/topologies/";
    const std::vector<std::pair<std::string, std::pair<int, int>>> expected = {
        {"heavy-hex-5", {5, 4}},
        {"heavy-hex-7", {7, 6}},
        {"heavy-hex-16", {16, 16}},
        {"heavy-hex-27", {27, 28}},
    };
    for (const auto& [name, shape] : expected) {
      const HardwareTopology t = HardwareTopology::load(dir + name + ".json");
      CHECK(t.name == name);
      CHECK(t.n_qubits == shape.first);
      CHECK(static_cast<int>(t.couplers.size()) == shape.second);
      CHECK(t.coupling_graph().connected());
      const HardwareTopology again = HardwareTopology::parse(t.to_json());
      CHECK(again.couplers == t.couplers);
      CHECK(again.readout_err == t.readout_err);
    }
  }

  TEST_CASE("missing file raises IoError") {
    CHECK_THROWS_AS(HardwareTopology::load("/nonexistent/nope.json"), IoError);
  }

  TEST_CASE("reference score fixture parses with the published 5-qubit row") {
    const std::string path = std::string(RESBENCH_DATA_DIR) + "/reference/hardware_res.json";
    std::ifstream in(path);
    REQUIRE(in);
    nlohmann::json j;
    in >> j;
    bool found = false;
    for (const auto& entry : j.at("entries")) {
      if (entry.at("qubits").get<int>() == 5) {
        found = true;
        CHECK(entry.at("res_naive").get<int>() == 3);
        CHECK(entry.at("res_unitary").get<int>() == 6);
        CHECK(entry.at("res_unitary_mitigated").get<int>() == 12);
      }
    }
    CHECK(found);
    CHECK(j.at("entries").size() == 4);
  }
}
