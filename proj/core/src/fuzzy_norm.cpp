#include "fuzznorm/fuzzy_norm.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzznorm {

FuzzyNorm FuzzyNorm::from_generator(Generator g) {
  if (!g.in_admissible_class())
    throw std::invalid_argument("FuzzyNorm: generator is not an admissible membership function");
  return FuzzyNorm(std::move(g), true);
}

FuzzyNorm FuzzyNorm::from_generator_unchecked(Generator g) {
  return FuzzyNorm(std::move(g), false);
}

double FuzzyNorm::eval(const Vector& x, double t) const {
  if (!std::isfinite(t) || t < 0.0)
    throw std::invalid_argument("FuzzyNorm: t must be finite and non-negative");
  if (x.dim() != dim()) throw std::invalid_argument("FuzzyNorm: dimension mismatch");
  if (t == 0.0) return 0.0;
  return gen_.eval(x / t);
}

FuzzyNorm norm_from_generator(Generator g) { return FuzzyNorm::from_generator(std::move(g)); }

FuzzyNorm norm_from_generator_unchecked(Generator g) {
  return FuzzyNorm::from_generator_unchecked(std::move(g));
}

GeneratorFn generator_from_norm(FuzzyNorm norm) { return GeneratorFn(std::move(norm)); }

double induced_eval(const GeneratorFn& f, const Vector& x, double t) {
  if (!std::isfinite(t) || t < 0.0)
    throw std::invalid_argument("induced_eval: t must be finite and non-negative");
  if (t == 0.0) return 0.0;
  return f(x / t);
}

std::vector<double> t_curve(const FuzzyNorm& norm, const Vector& x,
                            const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("t_curve: empty grid");
  for (size_t i = 0; i < t_grid.size(); ++i) {
    if (!std::isfinite(t_grid[i]) || t_grid[i] < 0.0)
      throw std::invalid_argument("t_curve: grid entries must be finite and non-negative");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw std::invalid_argument("t_curve: grid must be strictly increasing");
  }
  std::vector<double> values;
  values.reserve(t_grid.size());
  for (double t : t_grid) {
    const double v = norm.eval(x, t);
    if (!values.empty() && v < values.back() - 1e-12)
      throw std::logic_error("t_curve: non-monotone values, internal invariant breached");
    values.push_back(v);
  }
  return values;
}

}  // namespace fuzznorm
