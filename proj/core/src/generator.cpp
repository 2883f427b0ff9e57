#include "fuzznorm/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzznorm {

Matrix::Matrix(int n_, std::vector<double> entries) : n(n_), a(std::move(entries)) {
  if (n < 1) throw std::invalid_argument("Matrix: dimension must be >= 1");
  if (a.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("Matrix: entry count does not match dimension");
  for (double v : a)
    if (!std::isfinite(v)) throw std::invalid_argument("Matrix: non-finite entry");
}

Matrix Matrix::identity(int n) {
  std::vector<double> e(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = 1.0;
  return Matrix(n, std::move(e));
}

Vector Matrix::apply(const Vector& x) const {
  if (x.dim() != n) throw std::invalid_argument("Matrix: dimension mismatch");
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += at(i, j) * x[j];
  return Vector(std::move(y));
}

double Matrix::determinant() const {
  std::vector<double> m = a;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(m[static_cast<size_t>(r) * n + col]) >
          std::fabs(m[static_cast<size_t>(pivot) * n + col]))
        pivot = r;
    if (m[static_cast<size_t>(pivot) * n + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j)
        std::swap(m[static_cast<size_t>(pivot) * n + j], m[static_cast<size_t>(col) * n + j]);
      det = -det;
    }
    const double d = m[static_cast<size_t>(col) * n + col];
    det *= d;
    for (int r = col + 1; r < n; ++r) {
      const double f = m[static_cast<size_t>(r) * n + col] / d;
      for (int j = col; j < n; ++j)
        m[static_cast<size_t>(r) * n + j] -= f * m[static_cast<size_t>(col) * n + j];
    }
  }
  return det;
}

namespace {

constexpr double kSingularTol = 1e-12;

void require_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("Generator: dim must be >= 1");
}

}  // namespace

Generator Generator::standard(int dim, CrispNormSpec base) {
  require_dim(dim);
  Generator g;
  g.kind_ = Kind::Standard;
  g.dim_ = dim;
  g.base_ = std::move(base);
  return g;
}

Generator Generator::indicator(int dim, double radius, CrispNormSpec base) {
  require_dim(dim);
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("Generator: indicator radius must be positive and finite");
  Generator g;
  g.kind_ = Kind::Indicator;
  g.dim_ = dim;
  g.radius_ = radius;
  g.base_ = std::move(base);
  return g;
}

Generator Generator::exponential(int dim, CrispNormSpec base) {
  require_dim(dim);
  Generator g;
  g.kind_ = Kind::Exponential;
  g.dim_ = dim;
  g.base_ = std::move(base);
  return g;
}

Generator Generator::piecewise_linear(int dim, CrispNormSpec base) {
  require_dim(dim);
  Generator g;
  g.kind_ = Kind::PiecewiseLinear;
  g.dim_ = dim;
  g.base_ = std::move(base);
  return g;
}

Generator Generator::shifted(int dim, double beta, CrispNormSpec base) {
  require_dim(dim);
  if (!(beta >= 0.0 && beta < 1.0))
    throw std::invalid_argument("Generator: shift must lie in [0,1)");
  Generator g;
  g.kind_ = Kind::Shifted;
  g.dim_ = dim;
  g.shift_ = beta;
  g.base_ = std::move(base);
  return g;
}

Generator Generator::min_combination(std::vector<Generator> children) {
  if (children.empty())
    throw std::invalid_argument("Generator: min_combination needs at least one child");
  const int dim = children.front().dim();
  for (const Generator& c : children) {
    if (c.dim() != dim)
      throw std::invalid_argument("Generator: min_combination children have mixed dimensions");
    if (!c.in_admissible_class())
      throw std::invalid_argument("Generator: min_combination child is not admissible");
  }
  Generator g;
  g.kind_ = Kind::MinCombination;
  g.dim_ = dim;
  g.children_ = std::move(children);
  return g;
}

Generator Generator::linear_precompose(Matrix map, Generator inner) {
  if (map.n != inner.dim())
    throw std::invalid_argument("Generator: matrix/inner dimension mismatch");
  if (!inner.in_admissible_class())
    throw std::invalid_argument("Generator: linear_precompose inner is not admissible");
  if (std::fabs(map.determinant()) <= kSingularTol)
    throw std::invalid_argument("Generator: matrix is singular");
  Generator g;
  g.kind_ = Kind::LinearPrecompose;
  g.dim_ = map.n;
  g.map_ = std::move(map);
  g.children_.push_back(std::move(inner));
  return g;
}

Generator Generator::cosine_control(int dim, CrispNormSpec base) {
  require_dim(dim);
  Generator g;
  g.kind_ = Kind::CosineControl;
  g.dim_ = dim;
  g.base_ = std::move(base);
  return g;
}

double Generator::eval(const Vector& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("Generator: dimension mismatch");
  switch (kind_) {
    case Kind::Standard:
      return 1.0 / (1.0 + crisp_eval(base_, x));
    case Kind::Indicator:
      return crisp_eval(base_, x) < radius_ ? 1.0 : 0.0;
    case Kind::Exponential:
      return std::exp(-crisp_eval(base_, x));
    case Kind::PiecewiseLinear:
      return std::max(0.0, 1.0 - crisp_eval(base_, x));
    case Kind::Shifted:
      return shift_ + (1.0 - shift_) / (1.0 + crisp_eval(base_, x));
    case Kind::MinCombination: {
      double m = 1.0;
      for (const Generator& c : children_) m = std::min(m, c.eval(x));
      return m;
    }
    case Kind::LinearPrecompose:
      return children_.front().eval(map_.apply(x));
    case Kind::CosineControl:
      return std::max(0.0, std::cos(crisp_eval(base_, x)));
  }
  throw std::logic_error("Generator: unknown kind");
}

std::string Generator::kind_name() const {
  switch (kind_) {
    case Kind::Standard: return "standard";
    case Kind::Indicator: return "indicator";
    case Kind::Exponential: return "exponential";
    case Kind::PiecewiseLinear: return "piecewise_linear";
    case Kind::Shifted: return "shifted";
    case Kind::MinCombination: return "min_combination";
    case Kind::LinearPrecompose: return "linear_precompose";
    case Kind::CosineControl: return "cosine_control";
  }
  return "unknown";
}

Generator min_combine(std::vector<Generator> children) {
  return Generator::min_combination(std::move(children));
}

}  // namespace fuzznorm
