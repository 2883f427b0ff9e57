#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fuzznorm/crisp.hpp"
#include "fuzznorm/vector.hpp"

namespace fuzznorm {

/// Square real matrix, row-major. Used to precompose a generator with an
/// invertible linear map.
struct Matrix {
  int n = 0;
  std::vector<double> a;  // n*n entries, row-major

  Matrix() = default;
  Matrix(int n_, std::vector<double> entries);
  static Matrix identity(int n);

  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  Vector apply(const Vector& x) const;
  /// Determinant by LU with partial pivoting.
  double determinant() const;
};

/// A membership function f: R^n -> [0,1] from the built-in catalogue.
///
/// All kinds except CosineControl are quasiconcave with f(0)=1, radial limit
/// 1 at the origin, and f(-x)=f(x). CosineControl is a deliberate
/// quasiconcavity violator kept around so the verification harness has a
/// guaranteed-failing input; it is flagged as a non-member of the admissible
/// class and rejected by every validated construction path.
class Generator {
 public:
  enum class Kind {
    Standard,        // 1 / (1 + ||x||)
    Indicator,       // 1 on the open ball ||x|| < r, else 0
    Exponential,     // exp(-||x||)
    PiecewiseLinear, // max(0, 1 - ||x||)
    Shifted,         // beta + (1-beta) / (1 + ||x||)
    MinCombination,  // pointwise min over children
    LinearPrecompose,// inner(A x), A invertible
    CosineControl,   // max(0, cos(||x||)) -- NOT quasiconcave
  };

  static Generator standard(int dim, CrispNormSpec base = CrispNormSpec::euclidean());
  static Generator indicator(int dim, double radius,
                             CrispNormSpec base = CrispNormSpec::euclidean());
  static Generator exponential(int dim, CrispNormSpec base = CrispNormSpec::euclidean());
  static Generator piecewise_linear(int dim, CrispNormSpec base = CrispNormSpec::euclidean());
  static Generator shifted(int dim, double beta,
                           CrispNormSpec base = CrispNormSpec::euclidean());
  static Generator min_combination(std::vector<Generator> children);
  static Generator linear_precompose(Matrix map, Generator inner);
  static Generator cosine_control(int dim, CrispNormSpec base = CrispNormSpec::euclidean());

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  /// False exactly for cosine_control; validated paths that require the
  /// admissible class must reject generators with in_admissible_class()==false.
  bool in_admissible_class() const { return kind_ != Kind::CosineControl; }

  const CrispNormSpec& base() const { return base_; }
  double radius() const { return radius_; }
  double shift() const { return shift_; }
  const std::vector<Generator>& children() const { return children_; }
  const Matrix& map() const { return map_; }

  /// Evaluates f(x). Throws on dimension mismatch.
  double eval(const Vector& x) const;

  std::string kind_name() const;

 private:
  Generator() = default;

  Kind kind_ = Kind::Standard;
  int dim_ = 0;
  CrispNormSpec base_;
  double radius_ = 0.0;
  double shift_ = 0.0;
  std::vector<Generator> children_;
  Matrix map_;
};

/// Pointwise minimum of generators. Requires a nonempty list of equal
/// dimension with no cosine_control child.
Generator min_combine(std::vector<Generator> children);

}  // namespace fuzznorm
