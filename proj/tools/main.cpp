#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fuzznorm/decomposition.hpp"
#include "fuzznorm/fuzzy_norm.hpp"
#include "fuzznorm/rng.hpp"
#include "fuzznorm/verification.hpp"
#include "spec_io.hpp"

namespace {

using namespace fuzznorm;
using namespace fuzznorm::cli;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;

uint64_t effective_seed(uint64_t flag_seed) {
  if (const char* env = std::getenv("FUZZNORM_SEED")) return std::strtoull(env, nullptr, 10);
  return flag_seed;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << content;
}

int run_check(const std::string& spec_path, const std::string& axioms_csv, int samples,
              uint64_t seed, double tol, const std::string& out_path) {
  const SpecFile spec = load_spec_file(spec_path);

  CheckConfig cfg = CheckConfig::defaults();
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.tol = tol;

  std::vector<std::string> norm_labels, gen_labels;
  {
    std::stringstream ss(axioms_csv);
    std::string label;
    while (std::getline(ss, label, ',')) {
      if (label.empty()) continue;
      if (label == "N6p") label = "N6'";  // shell-friendly alias
      if (is_norm_axiom(label))
        norm_labels.push_back(label);
      else if (is_generator_axiom(label))
        gen_labels.push_back(label);
      else
        throw std::runtime_error("unknown axiom label '" + label + "'");
    }
  }
  if (norm_labels.empty() && gen_labels.empty())
    throw std::runtime_error("no axioms requested");

  std::vector<CheckReport> reports;
  if (!norm_labels.empty()) {
    const FuzzyNorm norm = norm_from_generator_unchecked(spec.generator);
    for (CheckReport& r : check_fuzzy_norm_axioms(norm, cfg, norm_labels))
      reports.push_back(std::move(r));
  }
  if (!gen_labels.empty()) {
    std::vector<CheckReport> all = check_generator_axioms(spec.generator, cfg);
    for (CheckReport& r : all) {
      for (const std::string& want : gen_labels)
        if (r.axiom == want) reports.push_back(std::move(r));
    }
  }

  const std::string rendered = render_reports(reports, spec.label);
  std::cout << rendered;
  if (!out_path.empty()) write_file(out_path, rendered);

  bool any_fail = false, any_inconclusive = false;
  for (const CheckReport& r : reports) {
    if (r.verdict == Verdict::Fail) any_fail = true;
    if (r.verdict == Verdict::Inconclusive) any_inconclusive = true;
  }
  if (any_fail) return kExitFail;
  if (any_inconclusive) return kExitInconclusive;
  return kExitPass;
}

int run_decompose(const std::string& spec_path, const std::string& alphas_csv,
                  const std::string& points_path, double tol, const std::string& out_path) {
  const SpecFile spec = load_spec_file(spec_path);
  const std::vector<double> alphas = parse_real_list(alphas_csv);
  const std::vector<Vector> points = load_points_csv(points_path, spec.dim);
  if (points.empty()) throw std::runtime_error("points file has no rows");

  const FuzzyNorm norm = norm_from_generator(spec.generator);
  const AlphaCutTable table = decompose_table(norm, alphas, points, tol);
  const std::string csv = render_table_csv(table);
  write_file(out_path, csv);
  std::cout << csv;
  return kExitPass;
}

int run_curve(const std::string& spec_path, const std::string& point_csv, double tmin,
              double tmax, int steps, const std::string& out_path) {
  const SpecFile spec = load_spec_file(spec_path);
  if (!(tmin >= 0.0) || !(tmin < tmax)) throw std::runtime_error("need 0 <= tmin < tmax");
  if (steps < 2) throw std::runtime_error("need steps >= 2");

  const std::vector<double> coords = parse_real_list(point_csv);
  if (static_cast<int>(coords.size()) != spec.dim)
    throw std::runtime_error("point dimension does not match spec dim");
  const Vector x(coords);

  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) grid[i] = tmin + (tmax - tmin) * i / (steps - 1);

  const FuzzyNorm norm = norm_from_generator(spec.generator);
  std::vector<double> values;
  try {
    values = t_curve(norm, x, grid);
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kExitInternal;
  }

  std::string csv = "t,value\n";
  for (int i = 0; i < steps; ++i)
    csv += format_real(grid[i]) + "," + format_real(values[i]) + "\n";
  write_file(out_path, csv);
  std::cout << csv;
  return kExitPass;
}

int run_converge(const std::string& spec_path, const std::string& sequence,
                 const std::string& vector_csv, int nmax, const std::string& out_path) {
  const SpecFile spec = load_spec_file(spec_path);
  const std::vector<double> coords = parse_real_list(vector_csv);
  if (static_cast<int>(coords.size()) != spec.dim)
    throw std::runtime_error("vector dimension does not match spec dim");
  const Vector base(coords);
  const SequenceRule rule = sequence_rule_from_name(sequence);

  const FuzzyNorm norm = norm_from_generator(spec.generator);
  const CheckConfig cfg = CheckConfig::defaults();
  const ConvergenceReport report = check_fuzzy_convergence(norm, rule, base, nmax, cfg);

  std::string out = "# fuzznorm convergence report\n";
  out += "sequence=" + to_string(rule) + " nmax=" + std::to_string(nmax) + "\n";
  for (const auto& [t, ok] : report.per_t)
    out += "t=" + format_real(t) + " fuzzy_converges=" + (ok ? "true" : "false") + "\n";
  out += std::string("fuzzy=") + (report.fuzzy ? "true" : "false") + "\n";
  out += std::string("crisp=") + (report.crisp ? "true" : "false") + "\n";
  out += std::string("fuzzy == crisp: ") + (report.agree ? "true" : "false") + "\n";
  std::cout << out;
  if (!out_path.empty()) write_file(out_path, out);
  return report.agree ? kExitPass : kExitFail;
}

int run_roundtrip(const std::string& spec_path, int samples, uint64_t seed) {
  const SpecFile spec = load_spec_file(spec_path);
  const FuzzyNorm norm = norm_from_generator_unchecked(spec.generator);
  const GeneratorFn recovered = generator_from_norm(norm);

  CheckConfig cfg = CheckConfig::defaults();
  cfg.seed = seed;
  std::vector<Vector> xs = sample_vectors(spec.dim, samples, cfg);
  // Boundary coverage for the scalar families with a level-set edge.
  if (spec.generator.kind() == Generator::Kind::Indicator) {
    const double r = spec.generator.radius();
    xs.push_back(r * Vector::unit(spec.dim, 0));
    xs.push_back(-r * Vector::unit(spec.dim, 0));
  }

  Rng rng = Rng::substream(seed, 17);
  int failures = 0;
  for (const Vector& x : xs) {
    // Generator -> norm -> generator.
    const double a = spec.generator.eval(x);
    const double b = recovered(x);
    if (a != b) {
      std::cout << "roundtrip mismatch (generator leg) at x, " << format_real(a)
                << " != " << format_real(b) << "\n";
      ++failures;
      continue;
    }
    // Norm -> generator -> norm, including t = 0.
    const double t = (rng.next() % 8 == 0) ? 0.0 : rng.uniform(1e-6, 1e3);
    const double c = norm.eval(x, t);
    const double d = induced_eval(recovered, x, t);
    if (c != d) {
      std::cout << "roundtrip mismatch (norm leg) at x, t=" << format_real(t) << ", "
                << format_real(c) << " != " << format_real(d) << "\n";
      ++failures;
    }
  }
  std::cout << "roundtrip: " << xs.size() << " samples, " << failures << " mismatches\n";
  return failures == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy norms from quasiconcave generators: axiom checks, alpha-cut "
               "decomposition, curves and convergence studies"};
  app.require_subcommand(1);

  std::string spec_path, axioms = "N1,N2,N3,N4,N5", out_path, alphas_csv, points_path;
  std::string point_csv, sequence, vector_csv;
  int samples = 2000, steps = 64, nmax = 10000;
  uint64_t seed = 42;
  double tol = 1e-9, tmin = 0.0, tmax = 10.0;

  auto* check = app.add_subcommand("check", "run axiom checks against a norm spec");
  check->add_option("spec", spec_path, "spec JSON file")->required();
  check->add_option("--axioms", axioms, "comma list of axiom labels (N1..N7, N6p, A0..A3)");
  check->add_option("--samples", samples, "sample count");
  check->add_option("--seed", seed, "RNG seed (FUZZNORM_SEED overrides)");
  check->add_option("--tol", tol, "numeric tolerance");
  check->add_option("--out", out_path, "machine-readable report path");

  auto* decompose = app.add_subcommand("decompose", "tabulate alpha-cut norms");
  decompose->add_option("spec", spec_path, "spec JSON file")->required();
  decompose->add_option("--alphas", alphas_csv, "comma list of alphas in (0,1)")->required();
  decompose->add_option("--points", points_path, "points CSV file")->required();
  decompose->add_option("--tol", tol, "bisection tolerance");
  decompose->add_option("--out", out_path, "output CSV path")->required();

  auto* curve = app.add_subcommand("curve", "sample the monotone t-curve of N(x, .)");
  curve->add_option("spec", spec_path, "spec JSON file")->required();
  curve->add_option("--point", point_csv, "comma list of coordinates")->required();
  curve->add_option("--tmin", tmin, "grid start (>= 0)");
  curve->add_option("--tmax", tmax, "grid end");
  curve->add_option("--steps", steps, "grid size (>= 2)");
  curve->add_option("--out", out_path, "output CSV path")->required();

  auto* converge = app.add_subcommand("converge", "compare fuzzy and crisp convergence");
  converge->add_option("spec", spec_path, "spec JSON file")->required();
  converge->add_option("--sequence", sequence, "inverse_n | constant | alternating")->required();
  converge->add_option("--vector", vector_csv, "base vector, comma list")->required();
  converge->add_option("--nmax", nmax, "sequence horizon");
  converge->add_option("--out", out_path, "report path");

  auto* roundtrip = app.add_subcommand("roundtrip", "verify the generator/norm bijection");
  roundtrip->add_option("spec", spec_path, "spec JSON file")->required();
  roundtrip->add_option("--samples", samples, "sample count");
  roundtrip->add_option("--seed", seed, "RNG seed (FUZZNORM_SEED overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return run_check(spec_path, axioms, samples, effective_seed(seed), tol, out_path);
    if (*decompose) return run_decompose(spec_path, alphas_csv, points_path, tol, out_path);
    if (*curve) return run_curve(spec_path, point_csv, tmin, tmax, steps, out_path);
    if (*converge) return run_converge(spec_path, sequence, vector_csv, nmax, out_path);
    if (*roundtrip) return run_roundtrip(spec_path, samples, effective_seed(seed));
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
