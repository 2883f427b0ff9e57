#include "fuzznorm/decomposition.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzznorm {

CutResult alpha_cut(const FuzzyNorm& norm, const Vector& x, double alpha, double tol) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha_cut: alpha must lie in (0,1)");
  if (!(tol > 0.0)) throw std::invalid_argument("alpha_cut: tol must be positive");
  if (x.dim() != norm.dim()) throw std::invalid_argument("alpha_cut: dimension mismatch");

  if (x.is_zero()) return {0.0, CutFlag::Ok};

  // Bracket: expand t_hi by doubling from 1 until the predicate holds.
  double t_hi = 1.0;
  int doublings = 0;
  while (!(norm.eval(x, t_hi) > alpha)) {
    if (++doublings > kMaxDoublings) return {0.0, CutFlag::BracketFailure};
    t_hi *= 2.0;
  }

  // Bisect on the monotone predicate N(x, t) > alpha.
  double t_lo = 0.0;
  while (t_hi - t_lo > tol) {
    const double mid = 0.5 * (t_lo + t_hi);
    if (norm.eval(x, mid) > alpha)
      t_hi = mid;
    else
      t_lo = mid;
  }

  // Predicate held at every probe down to t <= tol: the infimum over t > 0
  // is 0, the vanishing-at-0 hypothesis fails at this alpha.
  if (t_lo == 0.0 && t_hi <= tol) return {0.0, CutFlag::Degenerate};

  return {t_hi, CutFlag::Ok};
}

double alpha_cut_oracle(const Generator& g, double alpha, double s) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha_cut_oracle: alpha must lie in (0,1)");
  if (!(s >= 0.0)) throw std::invalid_argument("alpha_cut_oracle: s must be non-negative");
  switch (g.kind()) {
    case Generator::Kind::Standard:
      return alpha * s / (1.0 - alpha);
    case Generator::Kind::Indicator:
      return s / g.radius();
    case Generator::Kind::Exponential:
      return s / (-std::log(alpha));
    case Generator::Kind::PiecewiseLinear:
      return s / (1.0 - alpha);
    case Generator::Kind::Shifted: {
      const double beta = g.shift();
      return alpha > beta ? s * (alpha - beta) / (1.0 - alpha) : 0.0;
    }
    default:
      throw std::invalid_argument("alpha_cut_oracle: no closed form for kind " + g.kind_name());
  }
}

AlphaCutTable decompose_table(const FuzzyNorm& norm, const std::vector<double>& alphas,
                              const std::vector<Vector>& points, double tol) {
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0 && alphas[i] < 1.0))
      throw std::invalid_argument("decompose_table: alphas must lie in (0,1)");
    if (i > 0 && !(alphas[i] > alphas[i - 1]))
      throw std::invalid_argument("decompose_table: alphas must be strictly increasing");
  }
  for (const Vector& p : points)
    if (p.dim() != norm.dim())
      throw std::invalid_argument("decompose_table: point dimension mismatch");

  AlphaCutTable table;
  table.alphas = alphas;
  table.points = points;
  table.tol = tol;
  table.values.assign(alphas.size(), std::vector<double>(points.size(), 0.0));
  table.flags.assign(alphas.size(), std::vector<CutFlag>(points.size(), CutFlag::Ok));
  for (size_t i = 0; i < alphas.size(); ++i) {
    for (size_t j = 0; j < points.size(); ++j) {
      const CutResult r = alpha_cut(norm, points[j], alphas[i], tol);
      if (r.flag == CutFlag::BracketFailure)
        throw std::runtime_error("decompose_table: bracket failure at cell (alpha=" +
                                 std::to_string(alphas[i]) + ", point=" + std::to_string(j) +
                                 ")");
      table.values[i][j] = r.value;
      table.flags[i][j] = r.flag;
    }
  }
  return table;
}

ReconstructedNorm::ReconstructedNorm(AlphaCutTable table) : table_(std::move(table)) {
  if (table_.alphas.empty() || table_.points.empty())
    throw std::invalid_argument("ReconstructedNorm: empty table");
}

double ReconstructedNorm::eval(const Vector& x, double t) const {
  if (!std::isfinite(t) || t < 0.0)
    throw std::invalid_argument("ReconstructedNorm: t must be finite and non-negative");

  if (x.is_zero()) {
    // p_alpha(0) = 0 for every alpha, so every grid alpha qualifies for t > 0.
    return t > 0.0 ? table_.alphas.back() : 0.0;
  }

  // Reduce the query to a tabulated point by a scalar multiple.
  for (size_t j = 0; j < table_.points.size(); ++j) {
    const Vector& p = table_.points[j];
    if (p.is_zero() || p.dim() != x.dim()) continue;
    int ref = 0;
    for (int i = 1; i < p.dim(); ++i)
      if (std::fabs(p[i]) > std::fabs(p[ref])) ref = i;
    const double lambda = x[ref] / p[ref];
    bool match = true;
    for (int i = 0; i < p.dim(); ++i) {
      if (std::fabs(x[i] - lambda * p[i]) > 1e-12 * std::max(1.0, std::fabs(x[i]))) {
        match = false;
        break;
      }
    }
    if (!match) continue;

    const double scale = std::fabs(lambda);
    double best = 0.0;
    for (size_t i = 0; i < table_.alphas.size(); ++i) {
      if (scale * table_.values[i][j] < t) best = std::max(best, table_.alphas[i]);
    }
    return best;
  }
  throw std::invalid_argument(
      "ReconstructedNorm: query point is not a scalar multiple of a tabulated point");
}

ReconstructedNorm reconstruct_norm(AlphaCutTable table) {
  return ReconstructedNorm(std::move(table));
}

std::string to_string(CutFlag flag) {
  switch (flag) {
    case CutFlag::Ok: return "ok";
    case CutFlag::Degenerate: return "degenerate";
    case CutFlag::BracketFailure: return "bracket_failure";
  }
  return "unknown";
}

}  // namespace fuzznorm
