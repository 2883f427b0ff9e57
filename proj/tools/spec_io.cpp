#include "spec_io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fuzznorm::cli {

namespace {

using nlohmann::json;

CrispNormSpec parse_base(const json& j) {
  if (!j.is_object()) throw std::runtime_error("spec: 'base' must be an object");
  double p = 2.0;
  if (j.contains("p")) {
    if (j["p"].is_string()) {
      const std::string s = j["p"].get<std::string>();
      if (s != "inf" && s != "infinity") throw std::runtime_error("spec: bad p value '" + s + "'");
      p = std::numeric_limits<double>::infinity();
    } else {
      p = j["p"].get<double>();
    }
  }
  const std::string kind = j.value("kind", "p_norm");
  if (kind == "p_norm") return CrispNormSpec::p_norm(p);
  if (kind == "weighted_p_norm") {
    if (!j.contains("weights")) throw std::runtime_error("spec: weighted_p_norm needs 'weights'");
    return CrispNormSpec::weighted_p_norm(p, j["weights"].get<std::vector<double>>());
  }
  throw std::runtime_error("spec: unknown crisp norm kind '" + kind + "'");
}

Generator parse_generator(const json& j, int dim) {
  if (!j.is_object()) throw std::runtime_error("spec: 'generator' must be an object");
  const std::string kind = j.value("kind", "");
  const CrispNormSpec base =
      j.contains("base") ? parse_base(j["base"]) : CrispNormSpec::euclidean();

  if (kind == "standard") return Generator::standard(dim, base);
  if (kind == "exponential") return Generator::exponential(dim, base);
  if (kind == "piecewise_linear") return Generator::piecewise_linear(dim, base);
  if (kind == "cosine_control") return Generator::cosine_control(dim, base);
  if (kind == "indicator") {
    if (!j.contains("r")) throw std::runtime_error("spec: indicator needs 'r'");
    return Generator::indicator(dim, j["r"].get<double>(), base);
  }
  if (kind == "shifted") {
    if (!j.contains("beta")) throw std::runtime_error("spec: shifted needs 'beta'");
    return Generator::shifted(dim, j["beta"].get<double>(), base);
  }
  if (kind == "min_combination") {
    if (!j.contains("children") || !j["children"].is_array() || j["children"].empty())
      throw std::runtime_error("spec: min_combination needs a nonempty 'children' array");
    std::vector<Generator> children;
    for (const json& c : j["children"]) children.push_back(parse_generator(c, dim));
    return Generator::min_combination(std::move(children));
  }
  if (kind == "linear_precompose") {
    if (!j.contains("matrix") || !j.contains("inner"))
      throw std::runtime_error("spec: linear_precompose needs 'matrix' and 'inner'");
    const auto rows = j["matrix"].get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != dim)
      throw std::runtime_error("spec: matrix row count does not match dim");
    std::vector<double> entries;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != dim)
        throw std::runtime_error("spec: matrix is not square");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Generator::linear_precompose(Matrix(dim, std::move(entries)),
                                        parse_generator(j["inner"], dim));
  }
  throw std::runtime_error("spec: unknown generator kind '" + kind + "'");
}

}  // namespace

SpecFile parse_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("spec: JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("generator"))
    throw std::runtime_error("spec: top level must be an object with 'dim' and 'generator'");
  SpecFile spec;
  spec.dim = j["dim"].get<int>();
  if (spec.dim < 1) throw std::runtime_error("spec: dim must be >= 1");
  spec.label = j.value("label", "");
  try {
    spec.generator = parse_generator(j["generator"], spec.dim);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("spec: ") + e.what());
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("spec: ") + e.what());
  }
  return spec;
}

SpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::vector<Vector> load_points_csv(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open points file '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("points file is empty");

  std::vector<Vector> points;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> c;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      size_t pos = 0;
      const double v = std::stod(cell, &pos);
      c.push_back(v);
    }
    if (static_cast<int>(c.size()) != dim)
      throw std::runtime_error("points file line " + std::to_string(lineno) + ": expected " +
                               std::to_string(dim) + " columns, got " +
                               std::to_string(c.size()));
    points.push_back(Vector(std::move(c)));
  }
  return points;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> parse_real_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    out.push_back(std::stod(cell));
  }
  if (out.empty()) throw std::runtime_error("empty numeric list '" + csv + "'");
  return out;
}

std::string render_reports(const std::vector<CheckReport>& reports, const std::string& label) {
  std::string out = "# fuzznorm check report\n";
  if (!label.empty()) out += "label=" + label + "\n";
  for (const CheckReport& r : reports) {
    out += "axiom=" + r.axiom + " verdict=" + to_string(r.verdict) +
           " samples=" + std::to_string(r.samples_used) + " seed=" + std::to_string(r.seed);
    if (r.witness) {
      out += " lhs=" + format_real(r.witness->lhs) + " rhs=" + format_real(r.witness->rhs) +
             " witness=\"" + r.witness->detail + "\"";
    }
    out += "\n";
  }
  return out;
}

std::string render_table_csv(const AlphaCutTable& table) {
  std::string out = "alpha,point_index,p_alpha,flag\n";
  for (size_t i = 0; i < table.alphas.size(); ++i) {
    for (size_t j = 0; j < table.points.size(); ++j) {
      out += format_real(table.alphas[i]) + "," + std::to_string(j) + "," +
             format_real(table.values[i][j]) + "," + to_string(table.flags[i][j]) + "\n";
    }
  }
  return out;
}

std::vector<TableRow> parse_table_csv(const std::string& csv_text) {
  std::stringstream in(csv_text);
  std::string line;
  if (!std::getline(in, line) || line != "alpha,point_index,p_alpha,flag")
    throw std::runtime_error("table csv: bad header");
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string a, idx, p, flag;
    if (!std::getline(ss, a, ',') || !std::getline(ss, idx, ',') || !std::getline(ss, p, ',') ||
        !std::getline(ss, flag))
      throw std::runtime_error("table csv: bad row '" + line + "'");
    rows.push_back({std::stod(a), std::stoi(idx), std::stod(p), flag});
  }
  return rows;
}

}  // namespace fuzznorm::cli
