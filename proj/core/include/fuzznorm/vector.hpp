#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace fuzznorm {

/// A point of R^n. Components are validated to be finite on construction.
class Vector {
 public:
  explicit Vector(std::vector<double> components) : c_(std::move(components)) {
    if (c_.empty()) throw std::invalid_argument("Vector: dim must be >= 1");
    for (double v : c_) {
      if (!std::isfinite(v)) throw std::invalid_argument("Vector: non-finite component");
    }
  }

  Vector(std::initializer_list<double> components)
      : Vector(std::vector<double>(components)) {}

  static Vector zero(int dim) { return Vector(std::vector<double>(dim, 0.0)); }

  static Vector unit(int dim, int axis) {
    std::vector<double> c(dim, 0.0);
    c.at(axis) = 1.0;
    return Vector(std::move(c));
  }

  int dim() const { return static_cast<int>(c_.size()); }
  double operator[](int i) const { return c_[i]; }
  const std::vector<double>& components() const { return c_; }

  bool is_zero() const {
    for (double v : c_)
      if (v != 0.0) return false;
    return true;
  }

  friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }

 private:
  std::vector<double> c_;
};

inline Vector operator*(double s, const Vector& x) {
  std::vector<double> c(x.components());
  for (double& v : c) v *= s;
  return Vector(std::move(c));
}

inline Vector operator/(const Vector& x, double s) {
  std::vector<double> c(x.components());
  for (double& v : c) v /= s;
  return Vector(std::move(c));
}

inline Vector operator+(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Vector: dimension mismatch");
  std::vector<double> c(a.components());
  for (int i = 0; i < b.dim(); ++i) c[i] += b[i];
  return Vector(std::move(c));
}

inline Vector operator-(const Vector& x) { return -1.0 * x; }

inline Vector operator-(const Vector& a, const Vector& b) { return a + (-b); }

/// Convex combination lambda*a + (1-lambda)*b.
inline Vector mix(double lambda, const Vector& a, const Vector& b) {
  return lambda * a + (1.0 - lambda) * b;
}

}  // namespace fuzznorm
