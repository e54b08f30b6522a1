#include "resbench/resultset.hpp"

#include <fstream>
#include <map>

#include "json.hpp"
#include "resbench/graph.hpp"
#include "resbench/mitigation.hpp"
#include "resbench/witness.hpp"

namespace resbench {

namespace {

nlohmann::json record_to_json(const StabRecord& r) {
  nlohmann::json j;
  j["type"] = "record";
  j["id"] = r.id;
  j["subset_index"] = r.subset_index;
  j["subset"] = r.subset;
  j["method"] = r.method;
  j["seq_index"] = r.seq_index;
  j["lc_seq"] = r.lc_seq;
  auto& edges = j["graph_edges"] = nlohmann::json::array();
  for (auto [a, b] : r.graph_edges) {
    edges.push_back({a, b});
  }
  j["width"] = r.width;
  j["treewidth"] = r.treewidth;
  j["cnot_count"] = r.cnot_count;
  j["stab_index"] = r.stab_index;
  j["stabilizer"] = r.stabilizer;
  j["weight"] = r.weight;
  auto& counts = j["counts"] = nlohmann::json::object();
  for (const auto& [k, v] : r.counts) {
    counts[k] = v;
  }
  j["raw_expectation"] = r.raw_expectation;
  if (r.mitigated_expectation) {
    j["mitigated_expectation"] = *r.mitigated_expectation;
  } else {
    j["mitigated_expectation"] = nullptr;
  }
  j["seed"] = r.seed;
  j["batch"] = r.batch;
  if (r.error.empty()) {
    j["error"] = nullptr;
  } else {
    j["error"] = r.error;
  }
  return j;
}

StabRecord record_from_json(const nlohmann::json& j) {
  StabRecord r;
  r.id = j.at("id").get<std::string>();
  r.subset_index = j.at("subset_index").get<int>();
  r.subset = j.at("subset").get<std::vector<int>>();
  r.method = j.at("method").get<std::string>();
  r.seq_index = j.at("seq_index").get<int>();
  r.lc_seq = j.at("lc_seq").get<std::vector<int>>();
  for (const auto& e : j.at("graph_edges")) {
    r.graph_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  r.width = j.at("width").get<int>();
  r.treewidth = j.at("treewidth").get<int>();
  r.cnot_count = j.at("cnot_count").get<int>();
  r.stab_index = j.at("stab_index").get<int>();
  r.stabilizer = j.at("stabilizer").get<std::string>();
  r.weight = j.at("weight").get<int>();
  for (const auto& [k, v] : j.at("counts").items()) {
    r.counts[k] = v.get<long long>();
  }
  r.raw_expectation = j.at("raw_expectation").get<double>();
  if (!j.at("mitigated_expectation").is_null()) {
    r.mitigated_expectation = j.at("mitigated_expectation").get<double>();
  }
  r.seed = j.at("seed").get<uint64_t>();
  r.batch = j.at("batch").get<int>();
  if (!j.at("error").is_null()) {
    r.error = j.at("error").get<std::string>();
  }
  return r;
}

}  // namespace

bool ResultSet::has_mitigated() const {
  for (const StabRecord& r : records) {
    if (r.mitigated_expectation) {
      return true;
    }
  }
  return false;
}

std::vector<WitnessRow> ResultSet::witness_rows() const {
  // Group by (subset, method, sequence), keeping first-seen order.
  std::map<std::tuple<int, std::string, int>, std::vector<const StabRecord*>> groups;
  std::vector<std::tuple<int, std::string, int>> order;
  for (const StabRecord& r : records) {
    auto key = std::make_tuple(r.subset_index, r.method, r.seq_index);
    auto [it, fresh] = groups.try_emplace(key);
    if (fresh) {
      order.push_back(key);
    }
    it->second.push_back(&r);
  }

  std::vector<WitnessRow> rows;
  for (const auto& key : order) {
    const auto& recs = groups.at(key);
    const int n = recs.front()->width;
    std::vector<const StabRecord*> gens(n, nullptr);
    bool usable = true;
    for (const StabRecord* r : recs) {
      if (r->stab_index < n) {
        if (!r->ok()) {
          usable = false;
          break;
        }
        gens[r->stab_index] = r;
      }
    }
    if (!usable) {
      continue;
    }
    for (const StabRecord* g : gens) {
      if (g == nullptr) {
        usable = false;
        break;
      }
    }
    if (!usable) {
      continue;
    }

    WitnessRow row;
    row.subset_index = std::get<0>(key);
    row.method = std::get<1>(key);
    row.seq_index = std::get<2>(key);
    row.width = n;
    row.treewidth = gens[0]->treewidth;

    std::vector<double> raw(n);
    for (int k = 0; k < n; ++k) {
      raw[k] = gens[k]->raw_expectation;
    }
    row.genuine_raw = genuine_witness(raw, n);

    const bool mitigated = gens[0]->mitigated_expectation.has_value();
    std::vector<double> mit(n);
    if (mitigated) {
      for (int k = 0; k < n; ++k) {
        mit[k] = clamp_expectation(gens[k]->mitigated_expectation.value());
      }
      row.genuine_mitigated = genuine_witness(mit, n);
      row.biseparable_mitigated.emplace();
    }

    Graph g = Graph::from_edges(n, gens[0]->graph_edges);
    for (auto [i, j] : g.edges()) {
      row.biseparable_raw.emplace_back(i, j, biseparable_witness(g, i, j, raw[i], raw[j]));
      if (mitigated) {
        row.biseparable_mitigated->emplace_back(i, j,
                                                biseparable_witness(g, i, j, mit[i], mit[j]));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void ResultSet::save_jsonl(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write result set: " + path);
  }
  nlohmann::json meta;
  meta["type"] = "meta";
  meta["schema"] = kResultSchemaVersion;
  meta["created"] = info.created;
  meta["topology"] = info.topology_name;
  meta["seed"] = info.master_seed;
  meta["config"] = nlohmann::json::parse(info.config_json.empty() ? "{}" : info.config_json);
  out << meta.dump() << "\n";
  for (const StabRecord& r : records) {
    out << record_to_json(r).dump() << "\n";
  }
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

ResultSet ResultSet::load_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open result set: " + path);
  }
  ResultSet rs;
  std::string line;
  bool meta_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw IoError(std::string("result set line is not JSON: ") + e.what());
    }
    const std::string type = j.value("type", "");
    if (type == "meta") {
      if (j.value("schema", 0) != kResultSchemaVersion) {
        throw ConfigError("unsupported result schema version");
      }
      rs.info.created = j.value("created", "");
      rs.info.topology_name = j.value("topology", "");
      rs.info.master_seed = j.value("seed", 0ull);
      rs.info.config_json = j.value("config", nlohmann::json::object()).dump();
      meta_seen = true;
    } else if (type == "record") {
      rs.records.push_back(record_from_json(j));
    } else {
      throw ConfigError("unknown result line type: " + type);
    }
  }
  if (!meta_seen) {
    throw ConfigError("result set has no meta line");
  }
  return rs;
}

}  // namespace resbench
