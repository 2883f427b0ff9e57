#pragma once

#include <string>
#include <vector>

#include "fuzznorm/fuzzy_norm.hpp"

namespace fuzznorm {

/// Outcome tag for a single alpha-cut evaluation.
///
/// Degenerate means N(x, t) > alpha held down to arbitrarily small t, so the
/// infimum over t > 0 is 0 even though x != 0; this is exactly the failure
/// mode ruled out by the vanishing-at-0 hypothesis of the decomposition.
/// BracketFailure means the doubling search never found t with N(x, t) > alpha.
enum class CutFlag { Ok, Degenerate, BracketFailure };

struct CutResult {
  double value = 0.0;
  CutFlag flag = CutFlag::Ok;
};

constexpr double kDefaultCutTol = 1e-9;
constexpr int kMaxDoublings = 200;

/// Computes p_alpha(x) = inf{ t > 0 : N(x, t) > alpha } by bracketing and
/// bisection on the monotone curve t -> N(x, t).
///
/// Returns the certified-true endpoint of the final bracket, so the answer is
/// biased upward by at most tol. Returns 0 immediately for x = 0, and 0 with
/// the Degenerate flag when the predicate holds at arbitrarily small t.
CutResult alpha_cut(const FuzzyNorm& norm, const Vector& x, double alpha,
                    double tol = kDefaultCutTol);

/// Closed-form alpha-cut for the scalar generator families, as a function of
/// s = ||x|| in the family's base norm. Independent of the bisection path;
/// used as its oracle. Throws for kinds without a general closed form
/// (min_combination, linear_precompose, cosine_control).
double alpha_cut_oracle(const Generator& g, double alpha, double s);

/// Sampled values of the ascending family: entry (i, j) holds
/// p_{alpha_i}(points[j]) together with its flag.
struct AlphaCutTable {
  std::vector<double> alphas;        // strictly increasing, in (0,1)
  std::vector<Vector> points;
  std::vector<std::vector<double>> values;   // values[i][j]
  std::vector<std::vector<CutFlag>> flags;   // flags[i][j]
  double tol = kDefaultCutTol;
};

AlphaCutTable decompose_table(const FuzzyNorm& norm, const std::vector<double>& alphas,
                              const std::vector<Vector>& points, double tol = kDefaultCutTol);

/// Grid inverse of the decomposition: from a tabulated ascending family,
/// approximates N(x, t) as max{ alpha in the grid : p_alpha(x) < t }, 0 when
/// no grid alpha qualifies. Only defined at points reducible to a tabulated
/// point by a scalar multiple (the value then scales by homogeneity). The
/// result is a lower envelope of the true norm with error bounded by the
/// alpha mesh away from the tabulated cut values.
class ReconstructedNorm {
 public:
  explicit ReconstructedNorm(AlphaCutTable table);
  double eval(const Vector& x, double t) const;
  const AlphaCutTable& table() const { return table_; }

 private:
  AlphaCutTable table_;
};

ReconstructedNorm reconstruct_norm(AlphaCutTable table);

std::string to_string(CutFlag flag);

}  // namespace fuzznorm
