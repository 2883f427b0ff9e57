#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fuzznorm/decomposition.hpp"
#include "fuzznorm/fuzzy_norm.hpp"

namespace fuzznorm {

/// Configuration for the seeded property checks. Identical configs (seed
/// included) yield byte-identical reports.
struct CheckConfig {
  uint64_t seed = 42;
  int samples = 2000;
  double tol = 1e-9;
  std::vector<double> t_grid;       // t-sweep grid for axiom checks
  std::vector<double> lambda_grid;  // convex-combination weights in (0,1)
  double box = 10.0;                // vectors sampled uniformly on [-box, box]^dim
  std::vector<double> conv_t_grid;  // t grid for the convergence checker
  double eps_conv = 1e-3;           // looseness for limit-style convergence verdicts

  static CheckConfig defaults();
};

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

/// Concrete inputs demonstrating a violation, replayable in isolation:
/// re-evaluating the stored points/scalars reproduces lhs and rhs with the
/// violated inequality intact.
struct Witness {
  std::string detail;
  std::vector<Vector> points;
  std::vector<double> scalars;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CheckReport {
  std::string axiom;
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;
  int samples_used = 0;
  uint64_t seed = 0;
};

/// Canonical axiom labels accepted by the checkers.
/// Fuzzy-norm axioms: N1 N2 N3 N4 N5 N6 N6' N7.
/// Generator axioms:  A0 A1 A2 A3.
/// Crisp-norm checks: crisp-definite crisp-homogeneous crisp-triangle.
bool is_norm_axiom(const std::string& label);
bool is_generator_axiom(const std::string& label);

/// Checks the requested fuzzy-norm axioms on seeded samples. Failures come
/// back as reports with witnesses, never as errors. N2 (reverse direction),
/// N5, N6 and N6' are finite-horizon searches and may return Inconclusive.
std::vector<CheckReport> check_fuzzy_norm_axioms(const FuzzyNorm& norm, const CheckConfig& cfg,
                                                 const std::vector<std::string>& which);

/// Checks the membership-class axioms A0-A3 of a generator.
std::vector<CheckReport> check_generator_axioms(const Generator& g, const CheckConfig& cfg);

/// Raw-callable variant, used to exercise functions that are not catalogue
/// generators (e.g. the constant-1 control).
std::vector<CheckReport> check_generator_axioms_fn(
    const std::function<double(const Vector&)>& f, int dim, const CheckConfig& cfg);

/// Checks definiteness, absolute homogeneity and the triangle inequality of
/// an arbitrary candidate crisp norm (e.g. an extracted alpha-cut norm).
/// Homogeneity is allowed slack (1+|lambda|)*tol and the triangle 3*tol, to
/// absorb the bisection bias of extracted cuts.
std::vector<CheckReport> check_crisp_norm_axioms(
    const std::function<double(const Vector&)>& p, int dim, const CheckConfig& cfg);

/// Pass iff every column of the table is non-decreasing down increasing
/// alpha, up to 2*tol; a failure carries the offending (alpha_i, alpha_{i+1},
/// point) triple.
CheckReport check_ascending_family(const AlphaCutTable& table);

enum class ContinuityClass { Continuous, Jump, Inconclusive };

struct ContinuityReport {
  ContinuityClass classification = ContinuityClass::Inconclusive;
  double gap = 0.0;  // largest deviation from f(x0) at the smallest radius
};

std::string to_string(ContinuityClass c);

/// Samples f on shrinking shells around x0 over a fixed direction set.
/// Reports a jump when the deviation from f(x0) stays above the gap
/// threshold (default 0.1) as the radius shrinks, continuous when it falls
/// below 100*tol. Radii must be strictly decreasing with the last below 1e-8.
ContinuityReport probe_continuity(const Generator& g, const Vector& x0,
                                  const std::vector<double>& radii, const CheckConfig& cfg,
                                  double gap_threshold = 0.1);

std::vector<double> default_probe_radii();

enum class SequenceRule { InverseN, Constant, Alternating };

SequenceRule sequence_rule_from_name(const std::string& name);
std::string to_string(SequenceRule rule);

/// Per-t verdicts of the fuzzy-convergence test plus the crisp verdict and
/// whether the two agree (they should, in finite dimension).
struct ConvergenceReport {
  bool fuzzy = false;
  bool crisp = false;
  bool agree = false;
  std::vector<std::pair<double, bool>> per_t;  // (t, fuzzy verdict at t)
  std::optional<Witness> witness;              // a t where fuzzy convergence failed
};

/// Fuzzy verdict: for every t in cfg.conv_t_grid, N(x_n, t) >= 1 - eps_conv
/// for all n from some threshold <= n_max. Crisp verdict: ||x_n|| falls and
/// stays below each of {1e-1, 1e-2, 1e-3} within the horizon.
ConvergenceReport check_fuzzy_convergence(const FuzzyNorm& norm, SequenceRule rule,
                                          const Vector& base, int n_max,
                                          const CheckConfig& cfg);

/// Deterministic sample set: 0, +/- unit coordinate vectors, then uniform
/// draws on [-box, box]^dim. Exposed for tests that replay witnesses.
std::vector<Vector> sample_vectors(int dim, int count, const CheckConfig& cfg);

}  // namespace fuzznorm
