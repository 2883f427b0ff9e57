// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Run via ctest or directly from the build tree.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fuzznorm/decomposition.hpp"
#include "fuzznorm/fuzzy_norm.hpp"
#include "fuzznorm/rng.hpp"
#include "fuzznorm/verification.hpp"
#include "spec_io.hpp"

using namespace fuzznorm;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& note = "") {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << name;
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Generator> full_catalogue(int dim) {
  std::vector<Generator> gs = {
      Generator::standard(dim),
      Generator::indicator(dim, 1.0),
      Generator::exponential(dim),
      Generator::piecewise_linear(dim),
      Generator::shifted(dim, 0.5),
      min_combine({Generator::standard(dim), Generator::exponential(dim)}),
  };
  std::vector<double> entries(static_cast<size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i) {
    entries[static_cast<size_t>(i) * dim + i] = 1.0 + 0.5 * i;
    if (i + 1 < dim) entries[static_cast<size_t>(i) * dim + i + 1] = 0.25;
  }
  gs.push_back(Generator::linear_precompose(Matrix(dim, entries), Generator::standard(dim)));
  return gs;
}

// --- criterion 1: exact bijection round-trip, 1e4 samples per family -------
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  CheckConfig cfg = CheckConfig::defaults();
  cfg.seed = 2024;
  bool ok = true;
  std::string note;
  for (int dim : {1, 3}) {
    for (const Generator& g : full_catalogue(dim)) {
      const FuzzyNorm N = norm_from_generator(g);
      const GeneratorFn f = generator_from_norm(N);
      Rng rng = Rng::substream(cfg.seed, 21);
      for (const Vector& x : sample_vectors(dim, 10000, cfg)) {
        if (f(x) != g.eval(x)) {
          ok = false;
          note = "generator leg mismatch for " + g.kind_name();
          break;
        }
        const double t = (rng.next() % 16 == 0) ? 0.0 : rng.uniform(1e-6, 1e3);
        if (induced_eval(f, x, t) != N.eval(x, t)) {
          ok = false;
          note = "norm leg mismatch for " + g.kind_name();
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 5.0) {
    ok = false;
    note = "runtime " + std::to_string(elapsed) + "s >= 5s";
  }
  report(1, "bijection round-trip exact on 1e4 samples per family", ok, note);
}

// --- criterion 2: bisection vs closed-form oracle ---------------------------
void criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  const double tol = 1e-9;
  bool ok = true;
  std::string note;
  const std::vector<Generator> families = {
      Generator::standard(1), Generator::indicator(1, 1.0), Generator::exponential(1),
      Generator::piecewise_linear(1), Generator::shifted(1, 0.5)};
  for (const Generator& g : families) {
    const FuzzyNorm N = norm_from_generator(g);
    for (int i = 1; i <= 19 && ok; ++i) {
      const double alpha = 0.05 * i;
      for (double s : {0.1, 1.0, 10.0}) {
        const double expected = alpha_cut_oracle(g, alpha, s);
        const CutResult got = alpha_cut(N, Vector{s}, alpha, tol);
        if (std::fabs(got.value - expected) > tol + 1e-12) {
          ok = false;
          note = g.kind_name() + " alpha=" + std::to_string(alpha) + " s=" + std::to_string(s);
          break;
        }
        if (g.kind() == Generator::Kind::Shifted && alpha <= 0.5 &&
            got.flag != CutFlag::Degenerate) {
          ok = false;
          note = "missing degenerate flag at alpha=" + std::to_string(alpha);
          break;
        }
      }
    }
    if (!ok) break;
  }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 10.0) {
    ok = false;
    note = "runtime " + std::to_string(elapsed) + "s >= 10s";
  }
  report(2, "alpha_cut matches the closed-form oracle within tol + 1e-12", ok, note);
}

// --- criterion 3: extracted cuts satisfy the crisp norm axioms --------------
void criterion_3() {
  CheckConfig cfg = CheckConfig::defaults();
  cfg.samples = 2000;
  bool ok = true;
  std::string note;
  for (int dim = 1; dim <= 3 && ok; ++dim) {
    const std::vector<Generator> families = {
        Generator::standard(dim), Generator::indicator(dim, 1.0), Generator::exponential(dim),
        Generator::piecewise_linear(dim)};
    for (const Generator& g : families) {
      const FuzzyNorm N = norm_from_generator(g);
      for (double alpha : {0.25, 0.5, 0.75}) {
        const auto reports = check_crisp_norm_axioms(
            [&](const Vector& x) { return alpha_cut(N, x, alpha, cfg.tol).value; }, dim, cfg);
        for (const CheckReport& r : reports) {
          if (r.verdict != Verdict::Pass) {
            ok = false;
            note = g.kind_name() + " dim=" + std::to_string(dim) +
                   " alpha=" + std::to_string(alpha) + " " + r.axiom;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
  }
  report(3, "alpha-cut norms pass definiteness/homogeneity/triangle on 2000 samples", ok, note);
}

// --- criterion 4: ascending family over 21 alphas + planted corruption ------
void criterion_4() {
  CheckConfig cfg = CheckConfig::defaults();
  std::vector<double> alphas;
  for (int i = 1; i <= 21; ++i) alphas.push_back(i / 22.0);
  bool ok = true;
  std::string note;
  const std::vector<Generator> families = {
      Generator::standard(2), Generator::indicator(2, 1.0), Generator::exponential(2),
      Generator::piecewise_linear(2)};
  AlphaCutTable last_table;
  for (const Generator& g : families) {
    const FuzzyNorm N = norm_from_generator(g);
    const AlphaCutTable table = decompose_table(N, alphas, sample_vectors(2, 12, cfg), cfg.tol);
    const CheckReport r = check_ascending_family(table);
    if (r.verdict != Verdict::Pass) {
      ok = false;
      note = "ascending check failed for " + g.kind_name();
      break;
    }
    last_table = table;
  }
  if (ok) {
    AlphaCutTable corrupted = last_table;
    corrupted.values[10][3] = corrupted.values[9][3] - 1.0;
    const CheckReport r = check_ascending_family(corrupted);
    if (r.verdict != Verdict::Fail || !r.witness) {
      ok = false;
      note = "planted corruption was not detected";
    }
  }
  report(4, "decomposition columns ascend within 2*tol; corruption detected", ok, note);
}

// --- criterion 5: the axiom matrix, exactly ---------------------------------
void criterion_5() {
  CheckConfig cfg = CheckConfig::defaults();
  cfg.samples = 2000;
  bool ok = true;
  std::string note;

  auto expect = [&](const std::vector<CheckReport>& reports, const std::string& axiom,
                    Verdict want, const std::string& who) {
    for (const CheckReport& r : reports) {
      if (r.axiom != axiom) continue;
      if (r.verdict != want) {
        ok = false;
        note = who + "/" + axiom + " got " + to_string(r.verdict) + ", want " + to_string(want);
      }
      return;
    }
    ok = false;
    note = who + "/" + axiom + " missing";
  };

  const std::vector<std::string> all = {"N1", "N2", "N3", "N4", "N5", "N6", "N6'", "N7"};

  {
    const auto r = check_fuzzy_norm_axioms(norm_from_generator(Generator::standard(2)), cfg, all);
    for (const std::string& ax : {"N1", "N2", "N3", "N4", "N5", "N6'", "N7"})
      expect(r, ax, Verdict::Pass, "standard");
    expect(r, "N6", Verdict::Fail, "standard");
  }
  {
    const auto r =
        check_fuzzy_norm_axioms(norm_from_generator(Generator::indicator(1, 1.0)), cfg, all);
    for (const std::string& ax : {"N1", "N2", "N3", "N4", "N5", "N6", "N6'"})
      expect(r, ax, Verdict::Pass, "indicator");
    expect(r, "N7", Verdict::Fail, "indicator");
  }
  {
    const auto r =
        check_fuzzy_norm_axioms(norm_from_generator(Generator::exponential(2)), cfg, all);
    for (const std::string& ax : {"N1", "N2", "N3", "N4", "N5", "N6'", "N7"})
      expect(r, ax, Verdict::Pass, "exponential");
    expect(r, "N6", Verdict::Fail, "exponential");
  }
  {
    const auto r = check_fuzzy_norm_axioms(norm_from_generator(Generator::shifted(1, 0.5)), cfg,
                                           {"N1", "N2", "N3", "N4", "N5", "N6", "N6'"});
    for (const std::string& ax : {"N1", "N2", "N3", "N4", "N5"})
      expect(r, ax, Verdict::Pass, "shifted");
    expect(r, "N6", Verdict::Fail, "shifted");
    expect(r, "N6'", Verdict::Fail, "shifted");
  }
  {
    const Generator control = Generator::cosine_control(1);
    const auto r = check_generator_axioms(control, cfg);
    expect(r, "A0", Verdict::Fail, "cosine_control");
    // the witness must be the deterministic one: |a| = 2*pi, b = 0, lambda = 1/2
    for (const CheckReport& rep : r) {
      if (rep.axiom != "A0" || !rep.witness) continue;
      const Witness& w = *rep.witness;
      const double norm_a = crisp_eval(CrispNormSpec::euclidean(), w.points[0]);
      if (std::fabs(norm_a - 2.0 * std::acos(-1.0)) > 1e-12 || !w.points[1].is_zero() ||
          std::fabs(w.scalars[0] - 0.5) > 1e-12 || w.lhs != 0.0) {
        ok = false;
        note = "cosine_control witness is not the canonical midpoint violation";
      }
    }
  }
  report(5, "axiom matrix holds exactly for all five families", ok, note);
}

// --- criterion 6: continuity probe ------------------------------------------
void criterion_6() {
  CheckConfig cfg = CheckConfig::defaults();
  const auto radii = default_probe_radii();
  bool ok = true;
  std::string note;

  const Generator ind = Generator::indicator(1, 1.0);
  auto rep = probe_continuity(ind, Vector{1.0}, radii, cfg);
  if (rep.classification != ContinuityClass::Jump || rep.gap < 0.9) {
    ok = false;
    note = "indicator at |x|=1 not classified as a jump with gap >= 0.9";
  }
  rep = probe_continuity(ind, Vector::zero(1), radii, cfg);
  if (ok && rep.classification != ContinuityClass::Continuous) {
    ok = false;
    note = "indicator at 0 not classified continuous";
  }
  if (ok) {
    const Generator std3 = Generator::standard(3);
    int count = 0;
    for (const Vector& x0 : sample_vectors(3, 25, cfg)) {
      ++count;
      rep = probe_continuity(std3, x0, radii, cfg);
      if (rep.classification != ContinuityClass::Continuous) {
        ok = false;
        note = "standard generator not continuous at a sampled point";
        break;
      }
    }
    if (ok && count != 25) {
      ok = false;
      note = "expected 25 probe points";
    }
  }
  report(6, "continuity probe: indicator jump at the boundary, continuous elsewhere", ok, note);
}

// --- criterion 7: fuzzy vs crisp convergence, 18 cases -----------------------
void criterion_7() {
  CheckConfig cfg = CheckConfig::defaults();
  bool ok = true;
  std::string note;
  int cases = 0;
  for (int dim = 1; dim <= 3; ++dim) {
    std::vector<double> c(dim);
    for (int i = 0; i < dim; ++i) c[i] = (i % 2 == 0) ? 1.0 : -0.5;
    const Vector base(c);
    for (const Generator& g : {Generator::standard(dim), Generator::exponential(dim)}) {
      const FuzzyNorm N = norm_from_generator(g);
      for (SequenceRule rule :
           {SequenceRule::InverseN, SequenceRule::Constant, SequenceRule::Alternating}) {
        ++cases;
        const ConvergenceReport r = check_fuzzy_convergence(N, rule, base, 10000, cfg);
        const bool want = (rule == SequenceRule::InverseN);
        if (!r.agree || r.fuzzy != want || r.crisp != want) {
          ok = false;
          note = g.kind_name() + "/" + to_string(rule) + " dim=" + std::to_string(dim) +
                 ": fuzzy=" + (r.fuzzy ? "t" : "f") + " crisp=" + (r.crisp ? "t" : "f");
        }
      }
    }
  }
  if (ok && cases != 18) {
    ok = false;
    note = "expected 18 cases, ran " + std::to_string(cases);
  }
  report(7, "fuzzy and crisp convergence verdicts agree in all 18 cases", ok, note);
}

// --- criterion 8: CLI determinism --------------------------------------------
void criterion_8() {
#ifndef FUZZNORM_CLI_PATH
  report(8, "cmd_check / cmd_decompose byte-identical across runs", false, "CLI path missing");
#else
  const fs::path dir = fs::temp_directory_path() / "fuzznorm_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto p = [&](const std::string& name) { return (dir / name).string(); };

  {
    std::ofstream spec(p("spec.json"));
    spec << R"({"dim": 2, "generator": {"kind": "standard"}})";
  }
  {
    std::ofstream pts(p("points.csv"));
    pts << "x1,x2\n1.0,0.0\n0.5,-2.0\n0.0,0.0\n";
  }

  auto run = [&](const std::string& args) {
    const std::string cmd =
        std::string(FUZZNORM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  auto slurp = [&](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  bool ok = true;
  std::string note;
  const std::string check_args = "check " + p("spec.json") +
                                 " --axioms N1,N2,N3,N4,N5,N6 --samples 800 --seed 31 --out ";
  if (run(check_args + p("a.txt")) != 1 || run(check_args + p("b.txt")) != 1) {
    ok = false;
    note = "unexpected cmd_check exit code";
  } else if (slurp(p("a.txt")) != slurp(p("b.txt")) || slurp(p("a.txt")).empty()) {
    ok = false;
    note = "cmd_check outputs differ";
  }
  const std::string dec_args = "decompose " + p("spec.json") +
                               " --alphas 0.2,0.4,0.6,0.8 --points " + p("points.csv") +
                               " --out ";
  if (ok && (run(dec_args + p("c.csv")) != 0 || run(dec_args + p("d.csv")) != 0)) {
    ok = false;
    note = "unexpected cmd_decompose exit code";
  } else if (ok && (slurp(p("c.csv")) != slurp(p("d.csv")) || slurp(p("c.csv")).empty())) {
    ok = false;
    note = "cmd_decompose outputs differ";
  }
  report(8, "cmd_check / cmd_decompose byte-identical across runs", ok, note);
#endif
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                : "ACCEPTANCE: " + std::to_string(g_failures) +
                                      " criterion(s) failed\n");
  return g_failures == 0 ? 0 : 1;
}
