#include "fuzznorm/crisp.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzznorm {

CrispNormSpec CrispNormSpec::p_norm(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("CrispNormSpec: p must be >= 1");
  CrispNormSpec s;
  s.kind = Kind::PNorm;
  s.p = p;
  return s;
}

CrispNormSpec CrispNormSpec::weighted_p_norm(double p, std::vector<double> weights) {
  if (!(p >= 1.0)) throw std::invalid_argument("CrispNormSpec: p must be >= 1");
  if (weights.empty()) throw std::invalid_argument("CrispNormSpec: empty weight list");
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::invalid_argument("CrispNormSpec: weights must be positive and finite");
  }
  CrispNormSpec s;
  s.kind = Kind::WeightedPNorm;
  s.p = p;
  s.weights = std::move(weights);
  return s;
}

double crisp_eval(const CrispNormSpec& spec, const Vector& x) {
  const bool weighted = spec.kind == CrispNormSpec::Kind::WeightedPNorm;
  if (weighted && static_cast<int>(spec.weights.size()) != x.dim())
    throw std::invalid_argument("crisp_eval: weight/vector dimension mismatch");

  const int n = x.dim();
  if (std::isinf(spec.p)) {
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
      const double w = weighted ? spec.weights[i] : 1.0;
      m = std::max(m, w * std::fabs(x[i]));
    }
    return m;
  }
  if (spec.p == 1.0) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += (weighted ? spec.weights[i] : 1.0) * std::fabs(x[i]);
    return s;
  }
  if (spec.p == 2.0 && !weighted) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += x[i] * x[i];
    return std::sqrt(s);
  }
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    s += (weighted ? spec.weights[i] : 1.0) * std::pow(std::fabs(x[i]), spec.p);
  return std::pow(s, 1.0 / spec.p);
}

}  // namespace fuzznorm
