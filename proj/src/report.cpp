#include "resbench/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "json.hpp"

namespace resbench {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path);
  }
  out << bytes;
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

std::vector<const StabRecord*> generator_records(const ResultSet& rs) {
  std::vector<const StabRecord*> out;
  for (const StabRecord& r : rs.records) {
    if (r.ok() && !r.is_identity_record()) {
      out.push_back(&r);
    }
  }
  return out;
}

std::string heatmap_csv(const ResultSet& rs, const std::string& method, WitnessKind kind,
                        bool mitigated) {
  const std::vector<HeatmapCell> cells = median_heatmap(rs, method, kind, mitigated);
  std::set<int> widths;
  std::set<int> tws;
  std::map<std::pair<int, int>, double> value;
  for (const HeatmapCell& c : cells) {
    widths.insert(c.width);
    tws.insert(c.treewidth);
    value[{c.width, c.treewidth}] = c.median_value;
  }
  std::string out = "treewidth\\width";
  for (int w : widths) {
    out += "," + std::to_string(w);
  }
  out += "\n";
  for (int tw : tws) {
    out += std::to_string(tw);
    for (int w : widths) {
      out += ",";
      auto it = value.find({w, tw});
      if (it != value.end()) {
        out += fmt(it->second);
      }
    }
    out += "\n";
  }
  return out;
}

// Diverging color scale over [-1, 1]: blue for negative (witnessed
// entanglement), white near zero, red for positive.
std::string cell_color(double v) {
  const double t = std::clamp(v, -1.0, 1.0);
  int r, g, b;
  if (t < 0) {
    const double u = -t;
    r = static_cast<int>(255 * (1.0 - u));
    g = static_cast<int>(255 * (1.0 - 0.55 * u));
    b = 255;
  } else {
    r = 255;
    g = static_cast<int>(255 * (1.0 - 0.75 * t));
    b = static_cast<int>(255 * (1.0 - t));
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

std::string heatmap_svg(const ResultSet& rs, const std::string& method, WitnessKind kind) {
  const std::vector<HeatmapCell> raw = median_heatmap(rs, method, kind, false);
  const std::vector<HeatmapCell> mit = median_heatmap(rs, method, kind, true);
  std::set<int> widths;
  std::set<int> tws;
  std::map<std::pair<int, int>, double> rawv;
  std::map<std::pair<int, int>, double> mitv;
  for (const HeatmapCell& c : raw) {
    widths.insert(c.width);
    tws.insert(c.treewidth);
    rawv[{c.width, c.treewidth}] = c.median_value;
  }
  for (const HeatmapCell& c : mit) {
    mitv[{c.width, c.treewidth}] = c.median_value;
  }
  const int cell = 56;
  const int left = 70;
  const int top = 40;
  const int w = left + cell * static_cast<int>(widths.size()) + 20;
  const int h = top + cell * static_cast<int>(tws.size()) + 40;
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
                    "\" height=\"" + std::to_string(h) + "\">\n";
  svg += "<text x=\"" + std::to_string(left) + "\" y=\"20\" font-size=\"14\">" +
         (kind == WitnessKind::Genuine ? std::string("genuine") : std::string("biseparable")) +
         " witness medians, " + method +
         " (upper: raw, lower: mitigated)</text>\n";
  int row = 0;
  for (int tw : tws) {
    int col = 0;
    for (int width : widths) {
      const int x = left + col * cell;
      const int y = top + row * cell;
      const auto key = std::make_pair(width, tw);
      const auto rit = rawv.find(key);
      const auto mit_it = mitv.find(key);
      if (rit == rawv.end() && mit_it == mitv.end()) {
        svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
               std::to_string(cell) + "\" height=\"" + std::to_string(cell) +
               "\" fill=\"#eeeeee\" stroke=\"#999999\"/>\n";
      } else {
        // Upper-left triangle: raw. Lower-right: mitigated (raw again when
        // no mitigated data so the cell still reads as one value).
        const double rv = rit != rawv.end() ? rit->second : mit_it->second;
        const double mv = mit_it != mitv.end() ? mit_it->second : rv;
        svg += "<polygon points=\"" + std::to_string(x) + "," + std::to_string(y) + " " +
               std::to_string(x + cell) + "," + std::to_string(y) + " " + std::to_string(x) +
               "," + std::to_string(y + cell) + "\" fill=\"" + cell_color(rv) +
               "\" stroke=\"#999999\"/>\n";
        svg += "<polygon points=\"" + std::to_string(x + cell) + "," + std::to_string(y) + " " +
               std::to_string(x + cell) + "," + std::to_string(y + cell) + " " +
               std::to_string(x) + "," + std::to_string(y + cell) + "\" fill=\"" +
               cell_color(mv) + "\" stroke=\"#999999\"/>\n";
        svg += "<text x=\"" + std::to_string(x + 4) + "\" y=\"" + std::to_string(y + 14) +
               "\" font-size=\"9\">" + fmt(rv) + "</text>\n";
        svg += "<text x=\"" + std::to_string(x + 8) + "\" y=\"" + std::to_string(y + cell - 5) +
               "\" font-size=\"9\">" + fmt(mv) + "</text>\n";
      }
      ++col;
    }
    svg += "<text x=\"10\" y=\"" + std::to_string(top + row * cell + cell / 2 + 4) +
           "\" font-size=\"12\">tw=" + std::to_string(tw) + "</text>\n";
    ++row;
  }
  int col = 0;
  for (int width : widths) {
    svg += "<text x=\"" + std::to_string(left + col * cell + cell / 2 - 8) + "\" y=\"" +
           std::to_string(top + static_cast<int>(tws.size()) * cell + 18) +
           "\" font-size=\"12\">n=" + std::to_string(width) + "</text>\n";
    ++col;
  }
  svg += "</svg>\n";
  return svg;
}

std::string histogram_svg(const ResultSet& rs, const std::string& method) {
  // 50 uniform bins over [-1.1, 1.1]; the bands beyond |1| hold the
  // non-physical values mitigation can produce.
  constexpr int kBins = 50;
  constexpr double kLo = -1.1;
  constexpr double kHi = 1.1;
  std::vector<long long> raw_bins(kBins, 0);
  std::vector<long long> mit_bins(kBins, 0);
  bool any_mit = false;
  auto bin_of = [&](double v) {
    int b = static_cast<int>((v - kLo) / (kHi - kLo) * kBins);
    return std::clamp(b, 0, kBins - 1);
  };
  for (const StabRecord* r : generator_records(rs)) {
    if (r->method != method) {
      continue;
    }
    raw_bins[bin_of(r->raw_expectation)] += 1;
    if (r->mitigated_expectation) {
      any_mit = true;
      mit_bins[bin_of(*r->mitigated_expectation)] += 1;
    }
  }
  long long peak = 1;
  for (int b = 0; b < kBins; ++b) {
    peak = std::max({peak, raw_bins[b], mit_bins[b]});
  }
  const int plot_w = 500;
  const int plot_h = 220;
  const int left = 50;
  const int top = 30;
  auto x_of = [&](double v) {
    return left + (v - kLo) / (kHi - kLo) * plot_w;
  };
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"300\">\n";
  svg += "<text x=\"50\" y=\"18\" font-size=\"14\">stabilizer expectations, " + method +
         " (gray: raw, blue: mitigated)</text>\n";
  // Shaded non-physical bands.
  svg += "<rect x=\"" + fmt(x_of(1.0)) + "\" y=\"" + std::to_string(top) + "\" width=\"" +
         fmt(x_of(1.1) - x_of(1.0)) + "\" height=\"" + std::to_string(plot_h) +
         "\" fill=\"#f3d9d9\"/>\n";
  svg += "<rect x=\"" + fmt(x_of(-1.1)) + "\" y=\"" + std::to_string(top) + "\" width=\"" +
         fmt(x_of(-1.0) - x_of(-1.1)) + "\" height=\"" + std::to_string(plot_h) +
         "\" fill=\"#f3d9d9\"/>\n";
  const double bar_w = static_cast<double>(plot_w) / kBins;
  for (int b = 0; b < kBins; ++b) {
    const double x = left + b * bar_w;
    if (raw_bins[b] > 0) {
      const double bh = static_cast<double>(plot_h) * raw_bins[b] / peak;
      svg += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(top + plot_h - bh) + "\" width=\"" +
             fmt(bar_w) + "\" height=\"" + fmt(bh) + "\" fill=\"#888888\"/>\n";
    }
    if (any_mit && mit_bins[b] > 0) {
      const double bh = static_cast<double>(plot_h) * mit_bins[b] / peak;
      svg += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(top + plot_h - bh) + "\" width=\"" +
             fmt(bar_w) + "\" height=\"" + fmt(bh) + "\" fill=\"#3366cc\" fill-opacity=\"0.55\"/>\n";
    }
  }
  svg += "<line x1=\"" + std::to_string(left) + "\" y1=\"" + std::to_string(top + plot_h) +
         "\" x2=\"" + std::to_string(left + plot_w) + "\" y2=\"" + std::to_string(top + plot_h) +
         "\" stroke=\"#000000\"/>\n";
  for (double tick : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    svg += "<text x=\"" + fmt(x_of(tick) - 10) + "\" y=\"" + std::to_string(top + plot_h + 16) +
           "\" font-size=\"11\">" + fmt(tick) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace

CorrelationMatrix correlation_matrix(const ResultSet& rs) {
  const std::vector<const StabRecord*> recs = generator_records(rs);
  if (recs.size() < 3) {
    throw ConfigError("correlation matrix needs at least three records");
  }
  CorrelationMatrix m;
  m.features = {"width", "cnot_count", "weight", "treewidth", "expectation"};
  std::vector<std::vector<double>> series(m.features.size());
  for (const StabRecord* r : recs) {
    series[0].push_back(r->width);
    series[1].push_back(r->cnot_count);
    series[2].push_back(r->weight);
    series[3].push_back(r->treewidth);
    series[4].push_back(r->raw_expectation);
  }
  m.dof = static_cast<long long>(recs.size()) - 2;
  m.cells.resize(m.features.size());
  for (size_t a = 0; a < m.features.size(); ++a) {
    m.cells[a].resize(m.features.size());
    for (size_t b = 0; b < m.features.size(); ++b) {
      if (a == b) {
        m.cells[a][b] = {1.0, 0.0, m.dof};
      } else if (b < a) {
        m.cells[a][b] = m.cells[b][a];
      } else {
        m.cells[a][b] = pearson(series[a], series[b]);
      }
    }
  }
  return m;
}

ExportKind parse_export_kind(const std::string& name) {
  if (name == "heatmap-csv") return ExportKind::HeatmapCsv;
  if (name == "scores-json") return ExportKind::ScoresJson;
  if (name == "quartiles-csv") return ExportKind::QuartilesCsv;
  if (name == "corr-csv") return ExportKind::CorrCsv;
  if (name == "heatmap-svg") return ExportKind::HeatmapSvg;
  if (name == "histogram-svg") return ExportKind::HistogramSvg;
  throw ConfigError("unknown export kind: " + name);
}

std::vector<std::string> export_artifact(const ResultSet& rs, ExportKind what,
                                         const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory: " + out_dir);
  }
  const bool mit = rs.has_mitigated();
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const std::string& bytes) {
    const std::string path = out_dir + "/" + name;
    write_file(path, bytes);
    written.push_back(path);
  };

  switch (what) {
    case ExportKind::HeatmapCsv: {
      for (const std::string method : {"naive", "unitary"}) {
        emit("heatmap_genuine_" + method + "_raw.csv",
             heatmap_csv(rs, method, WitnessKind::Genuine, false));
        emit("heatmap_biseparable_" + method + "_raw.csv",
             heatmap_csv(rs, method, WitnessKind::Biseparable, false));
        if (mit) {
          emit("heatmap_genuine_" + method + "_mitigated.csv",
               heatmap_csv(rs, method, WitnessKind::Genuine, true));
          emit("heatmap_biseparable_" + method + "_mitigated.csv",
               heatmap_csv(rs, method, WitnessKind::Biseparable, true));
        }
      }
      break;
    }
    case ExportKind::ScoresJson: {
      nlohmann::json j;
      j["schema"] = kResultSchemaVersion;
      for (const std::string method : {"naive", "unitary"}) {
        const ResScore raw = res_score(median_heatmap(rs, method, WitnessKind::Genuine, false));
        j["methods"][method]["raw"] = {{"res", raw.score},
                                       {"max_width", raw.max_width},
                                       {"max_treewidth", raw.max_treewidth}};
        if (mit) {
          const ResScore mm = res_score(median_heatmap(rs, method, WitnessKind::Genuine, true));
          j["methods"][method]["mitigated"] = {{"res", mm.score},
                                               {"max_width", mm.max_width},
                                               {"max_treewidth", mm.max_treewidth}};
        } else {
          j["methods"][method]["mitigated"] = nullptr;
        }
      }
      emit("scores.json", j.dump(2) + "\n");
      break;
    }
    case ExportKind::QuartilesCsv: {
      std::map<std::pair<std::string, int>, std::vector<double>> raw;
      std::map<std::pair<std::string, int>, std::vector<double>> mitv;
      for (const StabRecord* r : generator_records(rs)) {
        raw[{r->method, r->width}].push_back(r->raw_expectation);
        if (r->mitigated_expectation) {
          mitv[{r->method, r->width}].push_back(*r->mitigated_expectation);
        }
      }
      std::string csv =
          "method,width,count,q1,median,q3,q1_mitigated,median_mitigated,q3_mitigated\n";
      for (const auto& [key, values] : raw) {
        const QuartileSummary q = quartiles(values);
        csv += key.first + "," + std::to_string(key.second) + "," +
               std::to_string(values.size()) + "," + fmt(q.q1) + "," + fmt(q.median) + "," +
               fmt(q.q3);
        auto it = mitv.find(key);
        if (it != mitv.end()) {
          const QuartileSummary qm = quartiles(it->second);
          csv += "," + fmt(qm.q1) + "," + fmt(qm.median) + "," + fmt(qm.q3);
        } else {
          csv += ",,,";
        }
        csv += "\n";
      }
      emit("quartiles.csv", csv);
      break;
    }
    case ExportKind::CorrCsv: {
      const CorrelationMatrix m = correlation_matrix(rs);
      std::string csv = "feature_a,feature_b,r,p,dof\n";
      for (size_t a = 0; a < m.features.size(); ++a) {
        for (size_t b = 0; b < m.features.size(); ++b) {
          csv += m.features[a] + "," + m.features[b] + "," + fmt(m.cells[a][b].r) + "," +
                 fmt(m.cells[a][b].p) + "," + std::to_string(m.cells[a][b].dof) + "\n";
        }
      }
      emit("correlations.csv", csv);
      break;
    }
    case ExportKind::HeatmapSvg: {
      for (const std::string method : {"naive", "unitary"}) {
        emit("heatmap_genuine_" + method + ".svg",
             heatmap_svg(rs, method, WitnessKind::Genuine));
        emit("heatmap_biseparable_" + method + ".svg",
             heatmap_svg(rs, method, WitnessKind::Biseparable));
      }
      break;
    }
    case ExportKind::HistogramSvg: {
      for (const std::string method : {"naive", "unitary"}) {
        emit("histogram_" + method + ".svg", histogram_svg(rs, method));
      }
      break;
    }
  }
  return written;
}

}  // namespace resbench
