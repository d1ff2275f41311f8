#include "pcreg/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pcreg {

namespace {

using nlohmann::json;

bool has_extension(const std::string& path, const std::string& ext) {
  if (path.size() < ext.size()) return false;
  return path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double parse_coordinate(const std::string& path, std::size_t line_no, std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(path, line_no, "cannot parse coordinate '" + std::string(text) + "'");
  }
  return value;
}

void check_cloud(const std::string& path, const PointCloud& cloud,
                 const std::vector<std::size_t>& line_of_point) {
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (!is_finite(cloud[i])) {
      throw ParseError(path, line_of_point[i], "non-finite coordinate");
    }
  }
  if (const auto dup = find_duplicate(cloud)) {
    std::ostringstream msg;
    msg << "duplicate point at line " << line_of_point[dup->second] << " (first at line "
        << line_of_point[dup->first] << ")";
    throw ParseError(path, line_of_point[dup->second], msg.str());
  }
  if (cloud.empty()) {
    throw ParseError(path, 0, "cloud has no points");
  }
}

PointCloud read_cloud_csv(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError(path, 0, "cannot open file");
  std::string line;
  if (!std::getline(file, line) || strip_cr(line) != "x,y") {
    throw ParseError(path, 1, "expected header 'x,y'");
  }
  PointCloud cloud;
  std::vector<std::size_t> line_of_point;
  std::size_t line_no = 1;
  while (std::getline(file, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError(path, line_no, "expected 'x,y' row");
    }
    const double x = parse_coordinate(path, line_no, std::string_view(line).substr(0, comma));
    const double y = parse_coordinate(path, line_no, std::string_view(line).substr(comma + 1));
    cloud.points.push_back({x, y});
    line_of_point.push_back(line_no);
  }
  check_cloud(path, cloud, line_of_point);
  return cloud;
}

PointCloud read_cloud_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError(path, 0, "cannot open file");
  json doc;
  try {
    file >> doc;
  } catch (const json::exception& e) {
    throw ParseError(path, 0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw ParseError(path, 0, "expected an object with a 'points' array");
  }
  PointCloud cloud;
  if (doc.contains("label")) cloud.label = doc["label"].get<std::string>();
  std::vector<std::size_t> index_of_point;
  std::size_t index = 0;
  for (const json& entry : doc["points"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      throw ParseError(path, index, "point must be a [x, y] number pair");
    }
    cloud.points.push_back({entry[0].get<double>(), entry[1].get<double>()});
    index_of_point.push_back(index);
    ++index;
  }
  check_cloud(path, cloud, index_of_point);
  return cloud;
}

void write_cloud_csv(const std::string& path, const PointCloud& cloud) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  file << "x,y\n";
  char row[80];
  for (const Point2& p : cloud.points) {
    std::snprintf(row, sizeof(row), "%.17g,%.17g\n", p.x, p.y);
    file << row;
  }
}

void write_cloud_json(const std::string& path, const PointCloud& cloud) {
  json doc;
  doc["label"] = cloud.label;
  json points = json::array();
  for (const Point2& p : cloud.points) {
    points.push_back(json::array({p.x, p.y}));
  }
  doc["points"] = std::move(points);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  file << doc.dump(2) << '\n';
}

void dump_json(const std::string& path, const json& doc) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  file << doc.dump(2) << '\n';
}

}  // namespace

ParseError::ParseError(std::string path_in, std::size_t line_in, const std::string& what)
    : std::runtime_error(path_in + ":" + std::to_string(line_in) + ": " + what),
      path(std::move(path_in)),
      line(line_in) {}

PointCloud read_cloud(const std::string& path) {
  return has_extension(path, ".json") ? read_cloud_json(path) : read_cloud_csv(path);
}

void write_cloud(const std::string& path, const PointCloud& cloud) {
  if (has_extension(path, ".json")) {
    write_cloud_json(path, cloud);
  } else {
    write_cloud_csv(path, cloud);
  }
}

void write_result_json(const std::string& path, const RegistrationResult& result, double delta,
                       double runtime_ms) {
  json doc;
  doc["pivot_p"] = result.best.p;
  doc["pivot_q"] = result.best.q;
  doc["theta"] = result.best.theta;
  doc["plateau"] = json::array({result.best.theta, result.best.plateau_end});
  doc["k_total"] = result.best.k_total;
  doc["energy"] = result.energy;
  doc["delta"] = delta;
  doc["delta_ok"] = result.delta_ok;
  doc["non_injective"] = result.non_injective;
  json pairs = json::array();
  for (const MatchPair& pair : result.pairs) {
    pairs.push_back({{"i", pair.i}, {"j", pair.j}, {"distance", pair.distance}});
  }
  doc["pairs"] = std::move(pairs);
  doc["runtime_ms"] = runtime_ms;
  if (result.all_optima) {
    json optima = json::array();
    for (const PivotSolution& solution : *result.all_optima) {
      optima.push_back({{"p", solution.p},
                        {"q", solution.q},
                        {"theta", solution.theta},
                        {"plateau", json::array({solution.theta, solution.plateau_end})},
                        {"k_total", solution.k_total}});
    }
    doc["all_optima"] = std::move(optima);
  }
  dump_json(path, doc);
}

void write_classification_report_json(const std::string& path,
                                      const ClassificationReport& report) {
  json doc;
  doc["trials"] = report.trials;
  doc["accuracy"] = report.accuracy;
  doc["angle_errors_deg"] = report.angle_errors_deg;
  doc["mean_deg"] = report.mean_deg;
  doc["std_deg"] = report.std_deg;
  doc["max_deg"] = report.max_deg;
  dump_json(path, doc);
}

void write_subset_report_json(const std::string& path, const SubsetSweepReport& report) {
  json doc;
  doc["k_values"] = report.k_values;
  doc["success_rate"] = report.success_rate;
  doc["trials_per_k"] = report.trials_per_k;
  dump_json(path, doc);
}

}  // namespace pcreg
