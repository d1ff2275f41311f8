#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "pcreg/experiments.hpp"
#include "pcreg/geometry.hpp"
#include "pcreg/registration.hpp"

namespace pcreg {

/// Malformed input file. `line` is 1-based for CSV; for JSON files it carries
/// the offending point index when applicable, otherwise 0.
struct ParseError : std::runtime_error {
  ParseError(std::string path, std::size_t line, const std::string& what);
  std::string path;
  std::size_t line;
};

/// Reads a cloud from CSV (header `x,y`, one point per row) or JSON
/// ({"label": ..., "points": [[x, y], ...]}), chosen by file extension.
/// Enforces finiteness and pairwise distinctness.
PointCloud read_cloud(const std::string& path);

/// Writes a cloud in the format matching the file extension. CSV coordinates
/// use 17 significant digits so read(write(cloud)) == cloud exactly.
void write_cloud(const std::string& path, const PointCloud& cloud);

/// Registration result as a JSON file.
void write_result_json(const std::string& path, const RegistrationResult& result, double delta,
                       double runtime_ms);

void write_classification_report_json(const std::string& path,
                                      const ClassificationReport& report);
void write_subset_report_json(const std::string& path, const SubsetSweepReport& report);

}  // namespace pcreg
