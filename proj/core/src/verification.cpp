#include "fuzznorm/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fuzznorm/rng.hpp"

namespace fuzznorm {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(const Vector& x) {
  std::string s = "(";
  for (int i = 0; i < x.dim(); ++i) {
    if (i) s += ", ";
    s += fmt(x[i]);
  }
  return s + ")";
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double llo = std::log10(lo), lhi = std::log10(hi);
  for (int i = 0; i < n; ++i)
    g[i] = std::pow(10.0, llo + (lhi - llo) * i / (n - 1));
  return g;
}

CheckReport pass_report(std::string axiom, int samples, uint64_t seed) {
  CheckReport r;
  r.axiom = std::move(axiom);
  r.verdict = Verdict::Pass;
  r.samples_used = samples;
  r.seed = seed;
  return r;
}

CheckReport fail_report(std::string axiom, Witness w, int samples, uint64_t seed) {
  CheckReport r;
  r.axiom = std::move(axiom);
  r.verdict = Verdict::Fail;
  r.witness = std::move(w);
  r.samples_used = samples;
  r.seed = seed;
  return r;
}

CheckReport inconclusive_report(std::string axiom, std::string detail, int samples,
                                uint64_t seed) {
  CheckReport r;
  r.axiom = std::move(axiom);
  r.verdict = Verdict::Inconclusive;
  Witness w;
  w.detail = std::move(detail);
  r.witness = std::move(w);
  r.samples_used = samples;
  r.seed = seed;
  return r;
}

// Direction set for shell probes and ray scans: signed coordinate axes plus
// the normalized diagonal.
std::vector<Vector> probe_directions(int dim) {
  std::vector<Vector> dirs;
  for (int i = 0; i < dim; ++i) {
    dirs.push_back(Vector::unit(dim, i));
    dirs.push_back(-Vector::unit(dim, i));
  }
  if (dim > 1) {
    const double inv = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<double> d(dim, inv);
    dirs.push_back(Vector(d));
    dirs.push_back(-Vector(d));
  }
  return dirs;
}

constexpr double kAlgebraTol = 1e-12;   // rounding slack for algebraic identities
constexpr double kLimitEps = 1e-6;      // "reached the limit value 1" threshold
constexpr int kHalvingCap = 100;
constexpr int kDoublingCap = 200;

}  // namespace

CheckConfig CheckConfig::defaults() {
  CheckConfig cfg;
  cfg.t_grid = log_spaced(1e-4, 1e4, 16);
  cfg.lambda_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  cfg.conv_t_grid = log_spaced(0.5, 1e3, 8);
  return cfg;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string to_string(ContinuityClass c) {
  switch (c) {
    case ContinuityClass::Continuous: return "continuous";
    case ContinuityClass::Jump: return "jump";
    case ContinuityClass::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

bool is_norm_axiom(const std::string& label) {
  static const std::vector<std::string> known = {"N1", "N2", "N3", "N4",
                                                 "N5", "N6", "N6'", "N7"};
  return std::find(known.begin(), known.end(), label) != known.end();
}

bool is_generator_axiom(const std::string& label) {
  static const std::vector<std::string> known = {"A0", "A1", "A2", "A3"};
  return std::find(known.begin(), known.end(), label) != known.end();
}

std::vector<Vector> sample_vectors(int dim, int count, const CheckConfig& cfg) {
  std::vector<Vector> xs;
  xs.reserve(count);
  xs.push_back(Vector::zero(dim));
  for (int i = 0; i < dim && static_cast<int>(xs.size()) < count; ++i)
    xs.push_back(Vector::unit(dim, i));
  for (int i = 0; i < dim && static_cast<int>(xs.size()) < count; ++i)
    xs.push_back(-Vector::unit(dim, i));
  Rng rng = Rng::substream(cfg.seed, 0);
  while (static_cast<int>(xs.size()) < count) {
    std::vector<double> c(dim);
    for (double& v : c) v = rng.uniform(-cfg.box, cfg.box);
    xs.push_back(Vector(std::move(c)));
  }
  return xs;
}

// ---------------------------------------------------------------------------
// Fuzzy-norm axioms
// ---------------------------------------------------------------------------

namespace {

CheckReport check_n1(const FuzzyNorm& N, const std::vector<Vector>& xs, const CheckConfig& cfg) {
  for (const Vector& x : xs) {
    const double v = N.eval(x, 0.0);
    if (v != 0.0) {
      Witness w;
      w.detail = "N(x,0) != 0 at x=" + fmt(x);
      w.points = {x};
      w.lhs = v;
      w.rhs = 0.0;
      return fail_report("N1", std::move(w), static_cast<int>(xs.size()), cfg.seed);
    }
  }
  return pass_report("N1", static_cast<int>(xs.size()), cfg.seed);
}

CheckReport check_n2(const FuzzyNorm& N, const std::vector<Vector>& xs, const CheckConfig& cfg) {
  const Vector zero = Vector::zero(N.dim());
  for (double t : cfg.t_grid) {
    const double v = N.eval(zero, t);
    if (v != 1.0) {
      Witness w;
      w.detail = "N(0,t) != 1 at t=" + fmt(t);
      w.points = {zero};
      w.scalars = {t};
      w.lhs = v;
      w.rhs = 1.0;
      return fail_report("N2", std::move(w), static_cast<int>(xs.size()), cfg.seed);
    }
  }
  // Reverse direction: every sampled x != 0 must admit some t with N(x,t) < 1.
  std::vector<double> ts = cfg.t_grid;
  ts.insert(ts.begin(), {1e-12, 1e-8, 1e-6});
  for (const Vector& x : xs) {
    if (x.is_zero()) continue;
    bool found = false;
    for (double t : ts) {
      if (N.eval(x, t) < 1.0) {
        found = true;
        break;
      }
    }
    if (!found) {
      return inconclusive_report(
          "N2", "no t with N(x,t) < 1 found on the search grid for x=" + fmt(x),
          static_cast<int>(xs.size()), cfg.seed);
    }
  }
  return pass_report("N2", static_cast<int>(xs.size()), cfg.seed);
}

CheckReport check_n3(const FuzzyNorm& N, const std::vector<Vector>& xs, const CheckConfig& cfg) {
  static const double lambdas[] = {-3.0, -2.0, -0.5, 0.5, 2.0, 3.0};
  Rng rng = Rng::substream(cfg.seed, 3);
  int k = 0;
  for (const Vector& x : xs) {
    const double t = cfg.t_grid[k % cfg.t_grid.size()];
    double lam = lambdas[k % 6];
    if (k % 7 == 6) lam = rng.uniform(0.01, 5.0) * (k % 2 ? 1.0 : -1.0);
    ++k;
    const double lhs = N.eval(lam * x, t);
    const double rhs = N.eval(x, t / std::fabs(lam));
    if (std::fabs(lhs - rhs) > kAlgebraTol) {
      Witness w;
      w.detail = "N(lambda x, t) != N(x, t/|lambda|) at x=" + fmt(x) + ", lambda=" + fmt(lam) +
                 ", t=" + fmt(t);
      w.points = {x};
      w.scalars = {lam, t};
      w.lhs = lhs;
      w.rhs = rhs;
      return fail_report("N3", std::move(w), k, cfg.seed);
    }
  }
  return pass_report("N3", k, cfg.seed);
}

CheckReport check_n4(const FuzzyNorm& N, const std::vector<Vector>& xs,
                     const std::vector<Vector>& ys, const CheckConfig& cfg) {
  Rng rng = Rng::substream(cfg.seed, 4);
  const size_t n = std::min(xs.size(), ys.size());
  for (size_t i = 0; i < n; ++i) {
    const Vector& x = xs[i];
    const Vector& y = ys[i];
    const double t = (i % 2) ? cfg.t_grid[i % cfg.t_grid.size()] : rng.uniform(0.0, 10.0);
    const double s = (i % 2) ? rng.uniform(0.0, 10.0) : cfg.t_grid[(i + 5) % cfg.t_grid.size()];
    const double lhs = N.eval(x + y, t + s);
    const double rhs = std::min(N.eval(x, t), N.eval(y, s));
    if (lhs < rhs - kAlgebraTol) {
      Witness w;
      w.detail = "N(x+y,t+s) < min(N(x,t),N(y,s)) at x=" + fmt(x) + ", y=" + fmt(y) +
                 ", t=" + fmt(t) + ", s=" + fmt(s);
      w.points = {x, y};
      w.scalars = {t, s};
      w.lhs = lhs;
      w.rhs = rhs;
      return fail_report("N4", std::move(w), static_cast<int>(i + 1), cfg.seed);
    }
  }
  return pass_report("N4", static_cast<int>(n), cfg.seed);
}

CheckReport check_n5(const FuzzyNorm& N, const std::vector<Vector>& xs, const CheckConfig& cfg) {
  for (const Vector& x : xs) {
    double t = 1.0;
    bool reached = false;
    for (int d = 0; d <= kDoublingCap; ++d) {
      if (N.eval(x, t) >= 1.0 - kLimitEps) {
        reached = true;
        break;
      }
      t *= 2.0;
    }
    if (!reached) {
      return inconclusive_report(
          "N5", "N(x,t) did not reach 1-1e-6 after " + std::to_string(kDoublingCap) +
                    " doublings for x=" + fmt(x),
          static_cast<int>(xs.size()), cfg.seed);
    }
  }
  return pass_report("N5", static_cast<int>(xs.size()), cfg.seed);
}

CheckReport check_n6(const FuzzyNorm& N, const std::vector<Vector>& xs, const CheckConfig& cfg) {
  std::vector<double> ts = cfg.t_grid;
  double t = 1e-5;
  for (int k = 0; k < 20; ++k) {
    ts.push_back(t);
    t *= 0.25;
  }
  // Tiny-norm candidates probe the small-t regime by homogeneity
  // (N(sx,t) = N(x,t/s)); without them a positive value that merely
  // underflows to 0 at the grid's smallest t would mask a violation.
  std::vector<Vector> candidates = xs;
  const int dim = xs.empty() ? 1 : xs.front().dim();
  for (double scale : {1e-12, 1e-16}) candidates.push_back(scale * Vector::unit(dim, 0));
  for (const Vector& x : candidates) {
    if (x.is_zero()) continue;
    double min_val = 1.0;
    double min_t = 0.0;
    bool all_positive = true;
    for (double tt : ts) {
      const double v = N.eval(x, tt);
      if (v < min_val) {
        min_val = v;
        min_t = tt;
      }
      if (v <= 0.0) {
        all_positive = false;
        break;
      }
    }
    if (all_positive) {
      Witness w;
      w.detail = "x != 0 with N(x,t) > 0 on the whole t-grid; min N=" + fmt(min_val) +
                 " at t=" + fmt(min_t) + ", x=" + fmt(x);
      w.points = {x};
      w.scalars = {min_t};
      w.lhs = min_val;
      w.rhs = 0.0;
      return fail_report("N6", std::move(w), static_cast<int>(xs.size()), cfg.seed);
    }
  }
  return pass_report("N6", static_cast<int>(xs.size()), cfg.seed);
}

CheckReport check_n6prime(const FuzzyNorm& N, const std::vector<Vector>& xs,
                          const CheckConfig& cfg) {
  for (const Vector& x : xs) {
    if (x.is_zero()) continue;
    double t = 1.0;
    double v = N.eval(x, t);
    bool vanished = false;
    for (int k = 0; k <= kHalvingCap; ++k) {
      v = N.eval(x, t);
      if (v <= kLimitEps) {
        vanished = true;
        break;
      }
      t *= 0.5;
    }
    if (!vanished) {
      if (v > 1e-3) {
        Witness w;
        w.detail = "N(x,t) stays at " + fmt(v) + " as t -> 0 (t=" + fmt(t) + ", x=" + fmt(x) +
                   ")";
        w.points = {x};
        w.scalars = {t};
        w.lhs = v;
        w.rhs = 0.0;
        return fail_report("N6'", std::move(w), static_cast<int>(xs.size()), cfg.seed);
      }
      return inconclusive_report(
          "N6'", "N(x,t) neither vanished nor stabilized within the halving budget, x=" + fmt(x),
          static_cast<int>(xs.size()), cfg.seed);
    }
  }
  return pass_report("N6'", static_cast<int>(xs.size()), cfg.seed);
}

// Refines a bracket around a suspected discontinuity of t -> N(x,t). Returns
// the surviving gap once the bracket is below width 1e-9, or 0 when the gap
// dissolved (continuous growth).
double refine_jump(const FuzzyNorm& N, const Vector& x, double a, double b, double threshold,
                   double* where) {
  double fa = N.eval(x, a), fb = N.eval(x, b);
  while (b - a > 1e-9) {
    if (fb - fa < 0.5 * threshold) return 0.0;
    const double m = 0.5 * (a + b);
    const double fm = N.eval(x, m);
    if (fb - fm >= fm - fa) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  *where = a;
  return fb - fa;
}

CheckReport check_n7(const FuzzyNorm& N, const std::vector<Vector>& xs, const CheckConfig& cfg) {
  const std::vector<double> ts = log_spaced(1e-4, 1e4, 64);
  const double gap_threshold = 0.1;
  const int budget = std::min<int>(static_cast<int>(xs.size()), 200);
  int used = 0;
  for (const Vector& x : xs) {
    if (x.is_zero()) continue;
    if (used >= budget) break;
    ++used;
    std::vector<double> vals(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) vals[i] = N.eval(x, ts[i]);
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
      // Continuity: a grid step whose value gap survives refinement to an
      // interval of width 1e-9 is a jump.
      if (vals[i + 1] - vals[i] >= gap_threshold) {
        double where = 0.0;
        const double gap = refine_jump(N, x, ts[i], ts[i + 1], gap_threshold, &where);
        if (gap >= gap_threshold) {
          Witness w;
          w.detail = "t-curve jumps by " + fmt(gap) + " at t=" + fmt(where) + " for x=" + fmt(x);
          w.points = {x};
          w.scalars = {where};
          w.lhs = gap;
          w.rhs = 0.0;
          return fail_report("N7", std::move(w), used, cfg.seed);
        }
      }
      // Strict increase on { t : 0 < N(x,t) < 1 }.
      const bool interior_i = vals[i] > 0.0 && vals[i] < 1.0;
      const bool interior_j = vals[i + 1] > 0.0 && vals[i + 1] < 1.0;
      if (interior_i && interior_j && vals[i + 1] <= vals[i]) {
        Witness w;
        w.detail = "t-curve not strictly increasing on the interior: N(x," + fmt(ts[i]) +
                   ")=" + fmt(vals[i]) + " vs N(x," + fmt(ts[i + 1]) + ")=" + fmt(vals[i + 1]) +
                   ", x=" + fmt(x);
        w.points = {x};
        w.scalars = {ts[i], ts[i + 1]};
        w.lhs = vals[i + 1];
        w.rhs = vals[i];
        return fail_report("N7", std::move(w), used, cfg.seed);
      }
    }
  }
  return pass_report("N7", used, cfg.seed);
}

}  // namespace

std::vector<CheckReport> check_fuzzy_norm_axioms(const FuzzyNorm& norm, const CheckConfig& cfg,
                                                 const std::vector<std::string>& which) {
  for (const std::string& label : which)
    if (!is_norm_axiom(label))
      throw std::invalid_argument("check_fuzzy_norm_axioms: unknown axiom label '" + label + "'");

  const std::vector<Vector> xs = sample_vectors(norm.dim(), cfg.samples, cfg);
  std::vector<Vector> ys;

  std::vector<CheckReport> reports;
  reports.reserve(which.size());
  for (const std::string& label : which) {
    if (label == "N1") {
      reports.push_back(check_n1(norm, xs, cfg));
    } else if (label == "N2") {
      reports.push_back(check_n2(norm, xs, cfg));
    } else if (label == "N3") {
      reports.push_back(check_n3(norm, xs, cfg));
    } else if (label == "N4") {
      if (ys.empty()) {
        CheckConfig shifted = cfg;
        shifted.seed = cfg.seed ^ 0x9e3779b97f4a7c15ULL;
        ys = sample_vectors(norm.dim(), cfg.samples, shifted);
      }
      reports.push_back(check_n4(norm, xs, ys, cfg));
    } else if (label == "N5") {
      reports.push_back(check_n5(norm, xs, cfg));
    } else if (label == "N6") {
      reports.push_back(check_n6(norm, xs, cfg));
    } else if (label == "N6'") {
      reports.push_back(check_n6prime(norm, xs, cfg));
    } else if (label == "N7") {
      reports.push_back(check_n7(norm, xs, cfg));
    }
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Generator axioms
// ---------------------------------------------------------------------------

std::vector<CheckReport> check_generator_axioms_fn(
    const std::function<double(const Vector&)>& f, int dim, const CheckConfig& cfg) {
  const std::vector<Vector> xs = sample_vectors(dim, cfg.samples, cfg);
  CheckConfig shifted = cfg;
  shifted.seed = cfg.seed ^ 0x9e3779b97f4a7c15ULL;
  const std::vector<Vector> ys = sample_vectors(dim, cfg.samples, shifted);

  std::vector<CheckReport> reports;

  // A0: quasiconcavity on random pairs plus a deterministic ray scan
  // (segments from the origin with magnitudes covering the cosine control's
  // known violation at full period).
  {
    bool failed = false;
    CheckReport report = pass_report("A0", cfg.samples, cfg.seed);
    const Vector zero = Vector::zero(dim);

    std::vector<double> magnitudes = {0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 8.0};
    const double pi = std::acos(-1.0);
    for (int k = 1; k <= 6; ++k) magnitudes.push_back(k * pi / 2.0);
    std::vector<Vector> ray_points;
    for (int i = 0; i < dim; ++i)
      for (double m : magnitudes) ray_points.push_back(m * Vector::unit(dim, i));

    // The midpoint goes first so step-like violations get the canonical
    // lambda = 1/2 witness.
    std::vector<double> lambdas = {0.5};
    lambdas.insert(lambdas.end(), cfg.lambda_grid.begin(), cfg.lambda_grid.end());

    auto check_pair = [&](const Vector& a, const Vector& b) {
      const double fa = f(a), fb = f(b);
      for (double lam : lambdas) {
        const double fm = f(mix(lam, a, b));
        if (fm < std::min(fa, fb) - kAlgebraTol) {
          Witness w;
          w.detail = "f(lambda a + (1-lambda) b) < min(f(a), f(b)) at a=" + fmt(a) +
                     ", b=" + fmt(b) + ", lambda=" + fmt(lam);
          w.points = {a, b};
          w.scalars = {lam};
          w.lhs = fm;
          w.rhs = std::min(fa, fb);
          report = fail_report("A0", std::move(w), cfg.samples, cfg.seed);
          failed = true;
          return;
        }
      }
    };

    for (const Vector& a : ray_points) {
      check_pair(a, zero);
      if (failed) break;
    }
    if (!failed) {
      const size_t n = std::min(xs.size(), ys.size());
      for (size_t i = 0; i < n && !failed; ++i) check_pair(xs[i], ys[i]);
    }
    reports.push_back(std::move(report));
  }

  // A1: f(0) = 1 exactly, and non-degeneracy (some scaling of each x != 0
  // leaves the value 1).
  {
    CheckReport report = pass_report("A1", cfg.samples, cfg.seed);
    const double f0 = f(Vector::zero(dim));
    if (f0 != 1.0) {
      Witness w;
      w.detail = "f(0) != 1";
      w.points = {Vector::zero(dim)};
      w.lhs = f0;
      w.rhs = 1.0;
      report = fail_report("A1", std::move(w), cfg.samples, cfg.seed);
    } else {
      const std::vector<double> scales = log_spaced(1e-8, 1e8, 33);
      for (const Vector& x : xs) {
        if (x.is_zero()) continue;
        bool found = false;
        for (double t : scales) {
          if (f(t * x) != 1.0) {
            found = true;
            break;
          }
        }
        if (!found) {
          Witness w;
          w.detail = "f(t x) = 1 for every scanned scaling of x=" + fmt(x);
          w.points = {x};
          w.lhs = 1.0;
          w.rhs = 1.0;
          report = fail_report("A1", std::move(w), cfg.samples, cfg.seed);
          break;
        }
      }
    }
    reports.push_back(std::move(report));
  }

  // A2: f(t x) -> 1 as t -> 0, checked by halving.
  {
    CheckReport report = pass_report("A2", cfg.samples, cfg.seed);
    for (const Vector& x : xs) {
      double t = 1.0;
      bool reached = false;
      for (int k = 0; k <= kHalvingCap; ++k) {
        if (f(t * x) >= 1.0 - kLimitEps) {
          reached = true;
          break;
        }
        t *= 0.5;
      }
      if (!reached) {
        report = inconclusive_report(
            "A2", "f(t x) did not reach 1-1e-6 within the halving budget for x=" + fmt(x),
            cfg.samples, cfg.seed);
        break;
      }
    }
    reports.push_back(std::move(report));
  }

  // A3: exact central symmetry.
  {
    CheckReport report = pass_report("A3", cfg.samples, cfg.seed);
    for (const Vector& x : xs) {
      const double lhs = f(-x), rhs = f(x);
      if (lhs != rhs) {
        Witness w;
        w.detail = "f(-x) != f(x) at x=" + fmt(x);
        w.points = {x};
        w.lhs = lhs;
        w.rhs = rhs;
        report = fail_report("A3", std::move(w), cfg.samples, cfg.seed);
        break;
      }
    }
    reports.push_back(std::move(report));
  }

  return reports;
}

std::vector<CheckReport> check_generator_axioms(const Generator& g, const CheckConfig& cfg) {
  return check_generator_axioms_fn([&g](const Vector& x) { return g.eval(x); }, g.dim(), cfg);
}

// ---------------------------------------------------------------------------
// Crisp-norm axioms
// ---------------------------------------------------------------------------

std::vector<CheckReport> check_crisp_norm_axioms(
    const std::function<double(const Vector&)>& p, int dim, const CheckConfig& cfg) {
  const std::vector<Vector> xs = sample_vectors(dim, cfg.samples, cfg);
  CheckConfig alt = cfg;
  alt.seed = cfg.seed ^ 0x9e3779b97f4a7c15ULL;
  const std::vector<Vector> ys = sample_vectors(dim, cfg.samples, alt);

  std::vector<CheckReport> reports;

  {
    CheckReport report = pass_report("crisp-definite", cfg.samples, cfg.seed);
    const double p0 = p(Vector::zero(dim));
    if (!(p0 <= cfg.tol)) {
      Witness w;
      w.detail = "p(0) > tol";
      w.points = {Vector::zero(dim)};
      w.lhs = p0;
      w.rhs = cfg.tol;
      report = fail_report("crisp-definite", std::move(w), cfg.samples, cfg.seed);
    } else {
      for (const Vector& x : xs) {
        if (x.is_zero()) continue;
        const double v = p(x);
        if (!(v > cfg.tol)) {
          Witness w;
          w.detail = "p(x) <= tol for x != 0, x=" + fmt(x);
          w.points = {x};
          w.lhs = v;
          w.rhs = cfg.tol;
          report = fail_report("crisp-definite", std::move(w), cfg.samples, cfg.seed);
          break;
        }
      }
    }
    reports.push_back(std::move(report));
  }

  {
    static const double lambdas[] = {-2.0, -0.5, 0.5, 3.0};
    CheckReport report = pass_report("crisp-homogeneous", cfg.samples, cfg.seed);
    int k = 0;
    bool failed = false;
    for (const Vector& x : xs) {
      const double lam = lambdas[k++ % 4];
      const double lhs = p(lam * x);
      const double rhs = std::fabs(lam) * p(x);
      if (std::fabs(lhs - rhs) > (1.0 + std::fabs(lam)) * cfg.tol) {
        Witness w;
        w.detail = "p(lambda x) != |lambda| p(x) at x=" + fmt(x) + ", lambda=" + fmt(lam);
        w.points = {x};
        w.scalars = {lam};
        w.lhs = lhs;
        w.rhs = rhs;
        report = fail_report("crisp-homogeneous", std::move(w), k, cfg.seed);
        failed = true;
        break;
      }
    }
    (void)failed;
    reports.push_back(std::move(report));
  }

  {
    CheckReport report = pass_report("crisp-triangle", cfg.samples, cfg.seed);
    const size_t n = std::min(xs.size(), ys.size());
    for (size_t i = 0; i < n; ++i) {
      const double lhs = p(xs[i] + ys[i]);
      const double rhs = p(xs[i]) + p(ys[i]);
      if (lhs > rhs + 3.0 * cfg.tol) {
        Witness w;
        w.detail = "p(x+y) > p(x) + p(y) at x=" + fmt(xs[i]) + ", y=" + fmt(ys[i]);
        w.points = {xs[i], ys[i]};
        w.lhs = lhs;
        w.rhs = rhs;
        report = fail_report("crisp-triangle", std::move(w), static_cast<int>(i + 1), cfg.seed);
        break;
      }
    }
    reports.push_back(std::move(report));
  }

  return reports;
}

CheckReport check_ascending_family(const AlphaCutTable& table) {
  CheckReport report;
  report.axiom = "ascending";
  report.verdict = Verdict::Pass;
  report.samples_used = static_cast<int>(table.alphas.size() * table.points.size());
  for (size_t j = 0; j < table.points.size(); ++j) {
    for (size_t i = 0; i + 1 < table.alphas.size(); ++i) {
      if (table.values[i + 1][j] < table.values[i][j] - 2.0 * table.tol) {
        Witness w;
        w.detail = "column not ascending: p_" + fmt(table.alphas[i]) + "=" +
                   fmt(table.values[i][j]) + " > p_" + fmt(table.alphas[i + 1]) + "=" +
                   fmt(table.values[i + 1][j]) + " at x=" + fmt(table.points[j]);
        w.points = {table.points[j]};
        w.scalars = {table.alphas[i], table.alphas[i + 1]};
        w.lhs = table.values[i + 1][j];
        w.rhs = table.values[i][j];
        report.verdict = Verdict::Fail;
        report.witness = std::move(w);
        return report;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Continuity probe and convergence checker
// ---------------------------------------------------------------------------

std::vector<double> default_probe_radii() {
  return {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9};
}

ContinuityReport probe_continuity(const Generator& g, const Vector& x0,
                                  const std::vector<double>& radii, const CheckConfig& cfg,
                                  double gap_threshold) {
  if (radii.size() < 2) throw std::invalid_argument("probe_continuity: need at least 2 radii");
  for (size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] < radii[i - 1]) || !(radii[i] > 0.0))
      throw std::invalid_argument("probe_continuity: radii must be positive, strictly decreasing");
  if (!(radii.back() < 1e-8))
    throw std::invalid_argument("probe_continuity: radii must reach below 1e-8");

  const std::vector<Vector> dirs = probe_directions(g.dim());
  const double f0 = g.eval(x0);

  double last_dev = 0.0;
  for (double r : radii) {
    double dev = 0.0;
    for (const Vector& d : dirs) dev = std::max(dev, std::fabs(g.eval(x0 + r * d) - f0));
    last_dev = dev;
  }

  ContinuityReport report;
  report.gap = last_dev;
  if (last_dev >= gap_threshold)
    report.classification = ContinuityClass::Jump;
  else if (last_dev <= 100.0 * cfg.tol)
    report.classification = ContinuityClass::Continuous;
  else
    report.classification = ContinuityClass::Inconclusive;
  return report;
}

SequenceRule sequence_rule_from_name(const std::string& name) {
  if (name == "inverse_n") return SequenceRule::InverseN;
  if (name == "constant") return SequenceRule::Constant;
  if (name == "alternating") return SequenceRule::Alternating;
  throw std::invalid_argument("unknown sequence rule '" + name + "'");
}

std::string to_string(SequenceRule rule) {
  switch (rule) {
    case SequenceRule::InverseN: return "inverse_n";
    case SequenceRule::Constant: return "constant";
    case SequenceRule::Alternating: return "alternating";
  }
  return "unknown";
}

ConvergenceReport check_fuzzy_convergence(const FuzzyNorm& norm, SequenceRule rule,
                                          const Vector& base, int n_max,
                                          const CheckConfig& cfg) {
  if (n_max < 10) throw std::invalid_argument("check_fuzzy_convergence: n_max must be >= 10");
  if (base.dim() != norm.dim())
    throw std::invalid_argument("check_fuzzy_convergence: dimension mismatch");
  if ((rule == SequenceRule::Constant || rule == SequenceRule::Alternating) && base.is_zero())
    throw std::invalid_argument("check_fuzzy_convergence: base must be nonzero for this rule");

  auto term = [&](int n) -> Vector {
    switch (rule) {
      case SequenceRule::InverseN:
        return base / static_cast<double>(n);
      case SequenceRule::Constant:
        return base;
      case SequenceRule::Alternating:
        return (n % 2 == 0) ? base : base / static_cast<double>(n);
    }
    throw std::logic_error("unreachable");
  };

  ConvergenceReport report;

  // Limits are judged on the final 10% of the horizon, so a sequence that
  // keeps revisiting a bad value (alternating) is caught regardless of the
  // parity of n_max.
  const int tail_start = n_max - n_max / 10;

  // Fuzzy verdict, per t: the tail of N(x_n, t) must sit above 1 - eps_conv.
  bool fuzzy = true;
  for (double t : cfg.conv_t_grid) {
    int last_fail = 0;
    for (int n = 1; n <= n_max; ++n) {
      if (norm.eval(term(n), t) < 1.0 - cfg.eps_conv) last_fail = n;
    }
    const bool ok = last_fail < tail_start;
    report.per_t.emplace_back(t, ok);
    if (!ok && fuzzy) {
      fuzzy = false;
      Witness w;
      w.detail = "N(x_n, t) < 1 - eps_conv persists up to n=n_max at t=" + fmt(t);
      w.points = {term(n_max)};
      w.scalars = {t};
      w.lhs = norm.eval(term(last_fail), t);
      w.rhs = 1.0 - cfg.eps_conv;
      report.witness = std::move(w);
    }
  }
  report.fuzzy = fuzzy;

  // Crisp verdict: the norm of the tail falls and stays under each threshold.
  bool crisp = true;
  const Generator ref = Generator::standard(norm.dim());
  for (double delta : {1e-1, 1e-2, 1e-3}) {
    int last_exceed = 0;
    for (int n = 1; n <= n_max; ++n) {
      if (crisp_eval(ref.base(), term(n)) > delta) last_exceed = n;
    }
    if (last_exceed >= tail_start) {
      crisp = false;
      break;
    }
  }
  report.crisp = crisp;
  report.agree = (report.fuzzy == report.crisp);
  return report;
}

}  // namespace fuzznorm
