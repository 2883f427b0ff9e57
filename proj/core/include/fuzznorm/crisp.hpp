#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "fuzznorm/vector.hpp"

namespace fuzznorm {

/// Description of a crisp norm on R^n: an (optionally weighted) p-norm with
/// p in [1, inf]. p = infinity selects the max-norm.
struct CrispNormSpec {
  enum class Kind { PNorm, WeightedPNorm };

  Kind kind = Kind::PNorm;
  double p = 2.0;
  std::vector<double> weights;  // one positive weight per coordinate when weighted

  static CrispNormSpec p_norm(double p);
  static CrispNormSpec weighted_p_norm(double p, std::vector<double> weights);
  static CrispNormSpec euclidean() { return p_norm(2.0); }
  static CrispNormSpec max_norm() { return p_norm(std::numeric_limits<double>::infinity()); }
};

/// Evaluates ||x|| for the given spec. Throws on dimension mismatch
/// (weighted norms carry the dimension through their weight list).
double crisp_eval(const CrispNormSpec& spec, const Vector& x);

}  // namespace fuzznorm
