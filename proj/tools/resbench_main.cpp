#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "resbench/builder.hpp"
#include "resbench/report.hpp"
#include "resbench/runner.hpp"
#include "resbench/treewidth.hpp"

namespace {

using namespace resbench;

int cmd_topology_validate(const std::string& path) {
  const HardwareTopology topo = HardwareTopology::load(path);  // validates
  std::cout << "ok: " << topo.name << " (" << topo.n_qubits << " qubits, "
            << topo.couplers.size() << " couplers)\n";
  return 0;
}

int cmd_orbit_sample(const std::string& topology_path, const std::vector<int>& qubits,
                     uint64_t seed, int count, int enumerate_limit) {
  const HardwareTopology topo = HardwareTopology::load(topology_path);
  auto [base, map] = induced_subgraph(topo, qubits);
  const int n = base.size();

  nlohmann::json head;
  head["qubits"] = map;
  head["width"] = n;
  auto& base_edges = head["induced_edges"] = nlohmann::json::array();
  for (auto [a, b] : base.edges()) {
    base_edges.push_back({a, b});
  }
  std::cout << head.dump() << "\n";

  if (enumerate_limit > 0) {
    const OrbitResult orbit = enumerate_orbit(base, enumerate_limit);
    for (const Graph& g : orbit.graphs) {
      nlohmann::json j;
      auto& edges = j["edges"] = nlohmann::json::array();
      for (auto [a, b] : g.edges()) {
        edges.push_back({a, b});
      }
      j["treewidth"] = treewidth(g);
      std::cout << j.dump() << "\n";
    }
    if (orbit.truncated) {
      std::cerr << "orbit truncated at " << enumerate_limit << " graphs\n";
    }
    return 0;
  }

  const int samples = count > 0 ? count : (1 << (n + 1));
  for (const LcSequence& seq : sample_lc_sequences(n, samples, seed)) {
    const Graph g = apply_lc_sequence(base, seq);
    nlohmann::json j;
    j["seq"] = seq.ops;
    auto& edges = j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges()) {
      edges.push_back({a, b});
    }
    j["treewidth"] = treewidth(g);
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int cmd_score(const std::string& path, bool mitigated) {
  const ResultSet rs = ResultSet::load_jsonl(path);
  if (mitigated && !rs.has_mitigated()) {
    throw ConfigError("result set carries no mitigated expectations");
  }
  for (const std::string method : {"naive", "unitary"}) {
    const ResScore s = res_score(median_heatmap(rs, method, WitnessKind::Genuine, mitigated));
    const std::string label = method == "naive" ? "RES-Naive" : "RES-Unitary";
    std::cout << label << ": " << s.score << " (max-n " << s.max_width << ", max-tw "
              << s.max_treewidth << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-state entanglement volumetric benchmark"};
  app.require_subcommand(1);

  // topology validate <file>
  auto* topology = app.add_subcommand("topology", "Topology file utilities");
  topology->require_subcommand(1);
  auto* validate = topology->add_subcommand("validate", "Check a topology file");
  std::string topo_path;
  validate->add_option("file", topo_path, "topology JSON")->required();

  // orbit sample --topology F --qubits 0,1,2 --seed S
  auto* orbit = app.add_subcommand("orbit", "LC orbit utilities");
  orbit->require_subcommand(1);
  auto* sample = orbit->add_subcommand("sample", "Sample LC sequences for an induced subgraph");
  std::string orbit_topology;
  std::vector<int> orbit_qubits;
  uint64_t orbit_seed = 0;
  int orbit_count = 0;
  int orbit_enumerate = 0;
  sample->add_option("--topology", orbit_topology, "topology JSON")->required();
  sample->add_option("--qubits", orbit_qubits, "comma-separated hardware qubits")
      ->required()
      ->delimiter(',');
  sample->add_option("--seed", orbit_seed, "sampling seed");
  sample->add_option("--count", orbit_count, "number of sequences (default 2^(n+1))");
  sample->add_option("--enumerate", orbit_enumerate,
                     "enumerate the labeled orbit up to this many graphs instead of sampling");

  // run --config F [--seed S] [--mitigate] [--method ...]
  auto* run = app.add_subcommand("run", "Execute the benchmark");
  std::string config_path;
  run->add_option("--config", config_path, "run config JSON")->required();
  uint64_t run_seed = 0;
  bool seed_set = false;
  run->add_option("--seed", run_seed, "override master seed")
      ->each([&](const std::string&) { seed_set = true; });
  bool mitigate_flag = false;
  run->add_flag("--mitigate", mitigate_flag, "enable tensored readout mitigation");
  std::string method_override;
  run->add_option("--method", method_override, "naive | unitary | both");
  long long shots_override = 0;
  run->add_option("--shots", shots_override, "override shot count");
  std::string output_override;
  run->add_option("--output", output_override, "override output path prefix");

  // score <resultset> [--mitigated]
  auto* score = app.add_subcommand("score", "Print RES scores for a result set");
  std::string score_path;
  bool score_mitigated = false;
  score->add_option("resultset", score_path, "result .jsonl file")->required();
  score->add_flag("--mitigated", score_mitigated, "score mitigated witness values");

  // report <resultset> --out DIR --emit kinds
  auto* report = app.add_subcommand("report", "Export tables and figures");
  std::string report_path;
  std::string report_out;
  std::vector<std::string> report_emit;
  report->add_option("resultset", report_path, "result .jsonl file")->required();
  report->add_option("--out", report_out, "output directory")->required();
  report->add_option("--emit", report_emit, "comma-separated artifact kinds")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate) {
      return cmd_topology_validate(topo_path);
    }
    if (*sample) {
      return cmd_orbit_sample(orbit_topology, orbit_qubits, orbit_seed, orbit_count,
                              orbit_enumerate);
    }
    if (*run) {
      RunConfig cfg = RunConfig::load(config_path);
      if (seed_set) {
        cfg.seed = run_seed;
      }
      if (mitigate_flag) {
        cfg.mitigate = true;
      }
      if (!method_override.empty()) {
        cfg.method = method_override;
      }
      if (shots_override > 0) {
        cfg.shots = shots_override;
      }
      if (!output_override.empty()) {
        cfg.output = output_override;
      }
      const ResultSet rs = run_benchmark(cfg);
      long long failed = 0;
      for (const StabRecord& r : rs.records) {
        if (!r.ok()) {
          ++failed;
        }
      }
      std::cout << rs.records.size() << " records";
      if (failed > 0) {
        std::cout << " (" << failed << " failed)";
      }
      if (!cfg.output.empty()) {
        std::cout << " -> " << cfg.output << ".jsonl";
      }
      std::cout << "\n";
      return 0;
    }
    if (*score) {
      return cmd_score(score_path, score_mitigated);
    }
    if (*report) {
      const ResultSet rs = ResultSet::load_jsonl(report_path);
      for (const std::string& kind : report_emit) {
        for (const std::string& path : export_artifact(rs, parse_export_kind(kind), report_out)) {
          std::cout << path << "\n";
        }
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const VertexOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DisconnectedSubgraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
