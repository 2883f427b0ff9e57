#pragma once

#include <vector>

#include "fuzznorm/generator.hpp"
#include "fuzznorm/vector.hpp"

namespace fuzznorm {

/// The fuzzy norm induced by a membership generator f:
///
///   N(x, t) = f(x / t)  for t > 0,   N(x, 0) = 0.
///
/// For fixed x the curve t -> N(x, t) is non-decreasing, N(0, t) = 1 for
/// t > 0, and N(lambda x, t) = N(x, t/|lambda|). The domain is t >= 0;
/// negative t is rejected rather than mapped to 0.
class FuzzyNorm {
 public:
  /// Validated constructor: requires the generator to be admissible.
  static FuzzyNorm from_generator(Generator g);
  /// Harness constructor: wraps any generator, including the deliberate
  /// quasiconcavity violator, so axiom checkers can watch the axioms fail.
  static FuzzyNorm from_generator_unchecked(Generator g);

  double eval(const Vector& x, double t) const;

  const Generator& generator() const { return gen_; }
  int dim() const { return gen_.dim(); }
  /// True when constructed through the validated path.
  bool validated() const { return validated_; }

 private:
  FuzzyNorm(Generator g, bool validated) : gen_(std::move(g)), validated_(validated) {}

  Generator gen_;
  bool validated_;
};

FuzzyNorm norm_from_generator(Generator g);
FuzzyNorm norm_from_generator_unchecked(Generator g);

/// The generator recovered from a fuzzy norm, x -> N(x, 1). Composing the two
/// directions is the identity, exactly: recovering from from_generator(g)
/// evaluates to g(x) bit for bit (x/1 is exact).
class GeneratorFn {
 public:
  explicit GeneratorFn(FuzzyNorm norm) : norm_(std::move(norm)) {}
  double operator()(const Vector& x) const { return norm_.eval(x, 1.0); }
  int dim() const { return norm_.dim(); }

 private:
  FuzzyNorm norm_;
};

GeneratorFn generator_from_norm(FuzzyNorm norm);

/// Evaluates the fuzzy norm induced by a recovered generator view, i.e. the
/// second leg of the round trip N -> f_N -> N.
double induced_eval(const GeneratorFn& f, const Vector& x, double t);

/// Evaluates N(x, t) at each grid point and asserts the result is
/// non-decreasing (tolerance 1e-12). The grid must be strictly increasing
/// and non-negative.
std::vector<double> t_curve(const FuzzyNorm& norm, const Vector& x,
                            const std::vector<double>& t_grid);

}  // namespace fuzznorm
