#pragma once

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace transvect::cli {

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
  std::string command;
  int e_max = 5;
  int r_max = 3;
  int r = 3;
  int d = 8;
  int e = 1;
  int order = 4;
  int trials = 10;
  std::uint64_t seed = 20240601;
  std::string suite = "octavic";
  std::string normalization = "classical";
  OutputFormat format = OutputFormat::Text;
  int jobs = 1;
  /// Lifts the e <= 8, r <= 4 grid bounds.
  bool unbounded = false;

  nlohmann::ordered_json to_json() const;
};

/// Throws std::invalid_argument when a range is outside the supported bounds.
void validate(const RunConfig& cfg);

struct Table {
  std::string command;
  nlohmann::ordered_json config;
  std::vector<std::string> columns;
  /// One object per row, keyed by column name.
  std::vector<nlohmann::ordered_json> rows;
  /// Extra key/value facts shown after the table.
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  bool pass = false;
};

Table cmd_lemma_a(const RunConfig& cfg);
Table cmd_lemma_b(const RunConfig& cfg);
Table cmd_z_series(const RunConfig& cfg);
Table cmd_characters(const RunConfig& cfg);
Table cmd_dims(const RunConfig& cfg);
Table cmd_covariants(const RunConfig& cfg);

std::string render(const Table& table, OutputFormat format);

/// Full command line entry point; returns the process exit code
/// (0 when every check passes, 1 on a failed check, 2 on bad usage).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace transvect::cli
