#pragma once

#include <string>
#include <vector>

#include "fuzznorm/decomposition.hpp"
#include "fuzznorm/generator.hpp"
#include "fuzznorm/verification.hpp"

namespace fuzznorm::cli {

struct SpecFile {
  int dim = 0;
  Generator generator;
  std::string label;

  SpecFile() : generator(Generator::standard(1)) {}
};

/// Parses a JSON spec document:
///   { "dim": 2, "label": "...", "generator": { "kind": "standard", ... } }
/// Generator objects mirror the in-memory constructors: "base" (optional
/// crisp norm, default euclidean), "r", "beta", "children", "matrix"+"inner".
/// Throws std::runtime_error with a message suitable for the usage exit path.
SpecFile parse_spec(const std::string& json_text);
SpecFile load_spec_file(const std::string& path);

/// Loads a points CSV with header "x1,...,xd"; one vector per row.
std::vector<Vector> load_points_csv(const std::string& path, int dim);

/// 17 significant digits, enough for bit-faithful round-trips.
std::string format_real(double v);

std::vector<double> parse_real_list(const std::string& csv);

/// Structured-text rendering of check reports, one "axiom=... verdict=..."
/// line per report.
std::string render_reports(const std::vector<CheckReport>& reports, const std::string& label);

/// CSV rendering of an alpha-cut table: "alpha,point_index,p_alpha,flag",
/// alpha-major row order.
std::string render_table_csv(const AlphaCutTable& table);

/// Parses a CSV produced by render_table_csv back into (alpha, index, value,
/// flag) rows; used by the lossless round-trip checks.
struct TableRow {
  double alpha;
  int point_index;
  double p_alpha;
  std::string flag;
};
std::vector<TableRow> parse_table_csv(const std::string& csv_text);

}  // namespace fuzznorm::cli
