#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hadamard/matrix.hpp"
#include "hadamard/scalar.hpp"

namespace hadamard {

// Point of P^n as a homogeneous coordinate vector of length n+1.
// Representatives are kept as given; normalization is on demand.
template <class K>
struct Point {
  std::vector<K> coords;

  Point() = default;
  explicit Point(std::vector<K> c) : coords(std::move(c)) {}

  int ambient_dim() const { return static_cast<int>(coords.size()) - 1; }

  bool is_zero_vector(const Tolerance& tol = {}) const {
    for (const K& c : coords)
      if (!is_zero(c, tol)) return false;
    return true;
  }
};

// Signals a point with a zero coordinate handed to a map that blows the
// corresponding hyperplane down.
struct BlownDownHyperplane : std::domain_error {
  int index;
  explicit BlownDownHyperplane(int idx)
      : std::domain_error("point lies on a blown-down hyperplane (coordinate " +
                          std::to_string(idx) + " is zero)"),
        index(idx) {}
};

template <class K>
Point<K> normalize(const Point<K>& p) {
  if (p.coords.empty() || p.is_zero_vector())
    throw std::domain_error("normalize: zero vector is not a projective point");
  Point<K> out = p;
  if constexpr (is_exact_v<K>) {
    // first nonzero coordinate becomes 1
    int lead = 0;
    while (is_zero(out.coords[lead], Tolerance{})) ++lead;
    K inv = checked_div(K(1), out.coords[lead]);
    for (K& c : out.coords) c = K(c * inv);
  } else {
    // first coordinate of largest magnitude becomes 1
    int lead = 0;
    for (int k = 1; k < static_cast<int>(out.coords.size()); ++k)
      if (abs_approx(out.coords[k]) > abs_approx(out.coords[lead])) lead = k;
    K inv = checked_div(K(1), out.coords[lead]);
    for (K& c : out.coords) c = K(c * inv);
  }
  return out;
}

// Projective equality by vanishing 2x2 minors; no divisions involved.
template <class K>
bool proj_equal(const Point<K>& a, const Point<K>& b, const Tolerance& tol = {}) {
  if (a.coords.size() != b.coords.size()) return false;
  const int n = static_cast<int>(a.coords.size());
  double scale = 1.0;
  if constexpr (!is_exact_v<K>) {
    double ma = 0.0, mb = 0.0;
    for (int k = 0; k < n; ++k) {
      ma = std::max(ma, abs_approx(a.coords[k]));
      mb = std::max(mb, abs_approx(b.coords[k]));
    }
    scale = std::max(ma * mb, 1e-300);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      K minor(a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i]);
      if constexpr (is_exact_v<K>) {
        if (!is_zero(minor, tol)) return false;
      } else {
        if (abs_approx(minor) > tol.abs * scale) return false;
      }
    }
  return true;
}

// Ordered list of points sharing an ambient space, pairwise distinct as
// projective points.
template <class K>
class PointConfig {
 public:
  PointConfig() = default;
  explicit PointConfig(std::vector<Point<K>> pts, const Tolerance& tol = {})
      : points_(std::move(pts)) {
    if (points_.empty()) return;
    const int dim = points_[0].ambient_dim();
    for (const Point<K>& p : points_) {
      if (p.ambient_dim() != dim)
        throw std::invalid_argument("point configuration: mixed ambient dimensions");
      if (p.is_zero_vector(tol))
        throw std::invalid_argument("point configuration: zero vector");
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j)
        if (proj_equal(points_[i], points_[j], tol))
          throw std::invalid_argument("point configuration: points " + std::to_string(i) +
                                      " and " + std::to_string(j) + " coincide");
  }

  const std::vector<Point<K>>& points() const { return points_; }
  const Point<K>& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  int ambient_dim() const { return points_.empty() ? -1 : points_[0].ambient_dim(); }

 private:
  std::vector<Point<K>> points_;
};

// Coordinate matrix with points as columns.
template <class K>
Matrix<K> config_matrix(std::span<const Point<K>> pts) {
  if (pts.empty()) return Matrix<K>(0, 0);
  const int n = static_cast<int>(pts[0].coords.size());
  Matrix<K> m(n, static_cast<int>(pts.size()));
  for (int j = 0; j < static_cast<int>(pts.size()); ++j)
    for (int i = 0; i < n; ++i) m(i, j) = pts[j].coords[i];
  return m;
}

template <class K>
Matrix<K> config_matrix(const PointConfig<K>& cfg) {
  return config_matrix(std::span<const Point<K>>(cfg.points()));
}

// Projective dimension of the span: rank of the coordinate matrix minus one
// (-1 for the empty set).
template <class K>
int span_dim(std::span<const Point<K>> pts, const Tolerance& tol = {}) {
  return rank(config_matrix(pts), tol) - 1;
}

template <class K>
int span_dim(const PointConfig<K>& cfg, const Tolerance& tol = {}) {
  return span_dim(std::span<const Point<K>>(cfg.points()), tol);
}

// True iff the points span exactly a line.
template <class K>
bool collinear(const PointConfig<K>& cfg, const Tolerance& tol = {}) {
  if (cfg.size() < 2) throw std::invalid_argument("collinear: need at least 2 points");
  return span_dim(cfg, tol) == 1;
}

// Standard Cremona involution with respect to the coordinate simplex:
// coordinate-wise reciprocal, Eq-style [1/x^0 : ... : 1/x^n], normalized.
template <class K>
Point<K> cremona(const Point<K>& p, const Tolerance& tol = {}) {
  Point<K> out;
  out.coords.reserve(p.coords.size());
  for (int k = 0; k < static_cast<int>(p.coords.size()); ++k) {
    if (is_zero(p.coords[k], tol)) throw BlownDownHyperplane(k);
    out.coords.push_back(checked_div(K(1), p.coords[k]));
  }
  return normalize(out);
}

struct ZeroEntry : std::domain_error {
  int row, col;
  ZeroEntry(int r, int c)
      : std::domain_error("Hadamard inverse undefined: entry (" + std::to_string(r) + ", " +
                          std::to_string(c) + ") is zero"),
        row(r),
        col(c) {}
};

// Entry-wise reciprocal; the (row, col) of any zero entry is reported.
template <class K>
Matrix<K> hadamard_inverse(const Matrix<K>& m, const Tolerance& tol = {}) {
  Matrix<K> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (is_zero(m(i, j), tol)) throw ZeroEntry(i, j);
      out(i, j) = checked_div(K(1), m(i, j));
    }
  return out;
}

template <class K>
std::vector<Point<K>> matrix_columns_as_points(const Matrix<K>& m) {
  std::vector<Point<K>> pts;
  pts.reserve(m.cols());
  for (int j = 0; j < m.cols(); ++j) pts.emplace_back(m.col(j));
  return pts;
}

// Coordinate simplex of P^n (the n+1 unit points).
template <class K>
std::vector<Point<K>> simplex_points(int n) {
  std::vector<Point<K>> pts;
  for (int i = 0; i <= n; ++i) {
    std::vector<K> c(n + 1, K(0));
    c[i] = K(1);
    pts.emplace_back(std::move(c));
  }
  return pts;
}

}  // namespace hadamard
