#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hadamard/matrix.hpp"
#include "hadamard/projective.hpp"
#include "hadamard/scalar.hpp"

namespace hadamard {

// Parameters of the rational normal curve x_i(t) = p0_i / (t - a_i): it
// passes through the coordinate simplex point z_i at t = a_i and through the
// base point p0 at t = infinity. Gauge: a_0 = 0, a_1 = 1, and p0 is
// unit-normalized against the sum-of-squares form.
struct RncParam {
  std::vector<Complex> base_point;  // p0, unit-normalized
  std::vector<Complex> nodes;       // a_0 .. a_n, gauge-fixed, pairwise distinct
  std::vector<Complex> roots;       // t_1 .. t_n, filled by the constructor
  bool real_field = true;
};

// Point of the curve at parameter t; t must avoid the nodes.
template <class K>
Point<K> rnc_point(const std::vector<K>& p0, const std::vector<K>& nodes, const K& t,
                   const Tolerance& tol = {}) {
  if (p0.size() != nodes.size()) throw std::invalid_argument("rnc_point: size mismatch");
  std::vector<K> c;
  c.reserve(p0.size());
  for (std::size_t i = 0; i < p0.size(); ++i) {
    K diff(t - nodes[i]);
    if (is_zero(diff, tol))
      throw std::domain_error("rnc_point: parameter equals node " + std::to_string(i));
    c.push_back(checked_div(p0[i], diff));
  }
  return Point<K>(std::move(c));
}

// Numerator of sum_i p0_i^2 / (t - a_i): the degree-n polynomial
// f(t) = sum_i p0_i^2 prod_{j != i} (t - a_j), coefficients ascending.
// Its roots are the parameters of R cap H for H the polar hyperplane of p0
// with respect to the sum-of-squares form.
template <class K>
std::vector<K> section_polynomial(const std::vector<K>& p0, const std::vector<K>& nodes) {
  if (p0.size() != nodes.size() || p0.size() < 2)
    throw std::invalid_argument("section_polynomial: need matching sizes >= 2");
  const int n = static_cast<int>(p0.size()) - 1;
  std::vector<K> coeffs(n + 1, K(0));
  for (int i = 0; i <= n; ++i) {
    std::vector<K> prod{K(1)};  // prod_{j != i} (t - a_j), ascending
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<K> next(prod.size() + 1, K(0));
      for (std::size_t d = 0; d < prod.size(); ++d) {
        next[d + 1] = K(next[d + 1] + prod[d]);
        next[d] = K(next[d] - nodes[j] * prod[d]);
      }
      prod = std::move(next);
    }
    K w(p0[i] * p0[i]);
    for (std::size_t d = 0; d < prod.size(); ++d) coeffs[d] = K(coeffs[d] + w * prod[d]);
  }
  return coeffs;
}

namespace detail {
std::vector<Complex> companion_eigenvalues(const std::vector<Complex>& coeffs);

inline Complex horner(const std::vector<Complex>& coeffs, Complex t) {
  Complex acc(0.0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
  return acc;
}

inline Complex horner_derivative(const std::vector<Complex>& coeffs, Complex t) {
  Complex acc(0.0);
  for (std::size_t k = coeffs.size(); k-- > 1;) acc = acc * t + double(k) * coeffs[k];
  return acc;
}

inline bool complex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}
}  // namespace detail

// All complex roots via companion-matrix eigenvalues, each refined by one
// Newton step, sorted by (re, im). Residuals are checked against the absolute
// tolerance relative to the coefficient scale.
inline std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs,
                                       const Tolerance& tol = {}) {
  if (coeffs.size() < 2) throw std::invalid_argument("poly_roots: need degree >= 1");
  double scale = 0.0;
  for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));
  if (std::abs(coeffs.back()) <= tol.abs * scale)
    throw std::invalid_argument("poly_roots: leading coefficient is zero");

  std::vector<Complex> roots = detail::companion_eigenvalues(coeffs);
  for (Complex& t : roots) {
    Complex df = detail::horner_derivative(coeffs, t);
    if (std::abs(df) > tol.abs) t -= detail::horner(coeffs, t) / df;
  }
  std::sort(roots.begin(), roots.end(), detail::complex_less);
  for (const Complex& t : roots) {
    double local = std::max(1.0, std::pow(std::abs(t), double(coeffs.size() - 1)));
    if (std::abs(detail::horner(coeffs, t)) > tol.abs * std::max(1.0, scale) * local * 1e4)
      throw std::runtime_error("poly_roots: residual exceeds tolerance");
  }
  return roots;
}

// Constructed orthogonal matrix together with the residuals that certify it:
// max-norm of A^T A - I and the third-to-first singular value ratio of the
// Hadamard inverse (which must be numerically rank two).
struct Rank2Certificate {
  Matrix<Complex> matrix;
  double ortho_residual = 0.0;
  double hadamard_sigma_ratio = 0.0;
  RncParam param;
};

namespace detail {

// Newton refinement on F(t) = sum_i c_i / (t - a_i); the rational form is
// well conditioned near the interlaced roots where the expanded coefficients
// are not.
inline Complex refine_section_root(const std::vector<Complex>& weights,
                                   const std::vector<Complex>& nodes, Complex t) {
  for (int iter = 0; iter < 4; ++iter) {
    Complex f(0.0), df(0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      Complex d = t - nodes[i];
      Complex inv = 1.0 / d;
      f += weights[i] * inv;
      df -= weights[i] * inv * inv;
    }
    if (std::abs(df) < 1e-300) break;
    Complex step = f / df;
    t -= step;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(t))) break;
  }
  return t;
}

// Curve columns at the section roots, unit-normalized, base point first.
// Returns an empty matrix when a normalization degenerates (isotropic
// column); the caller decides whether that is an error.
inline Matrix<Complex> curve_columns(const std::vector<Complex>& p0_unit,
                                     const std::vector<Complex>& nodes,
                                     const std::vector<Complex>& roots) {
  const int m = static_cast<int>(p0_unit.size());
  Matrix<Complex> a(m, m);
  for (int i = 0; i < m; ++i) a(i, 0) = p0_unit[i];
  for (int k = 0; k < m - 1; ++k) {
    std::vector<Complex> col(m);
    Complex norm2(0.0);
    for (int i = 0; i < m; ++i) {
      col[i] = p0_unit[i] / (roots[k] - nodes[i]);
      norm2 += col[i] * col[i];
    }
    if (std::abs(norm2) < 1e-12) return Matrix<Complex>();
    Complex inv = 1.0 / scalar_sqrt(norm2);
    for (int i = 0; i < m; ++i) a(i, k + 1) = col[i] * inv;
  }
  return a;
}

inline std::vector<Complex> section_roots(const std::vector<Complex>& p0_unit,
                                          const std::vector<Complex>& nodes,
                                          const Tolerance& tol) {
  std::vector<Complex> coeffs = section_polynomial(p0_unit, nodes);
  std::vector<Complex> roots = poly_roots(coeffs, tol);
  std::vector<Complex> weights(p0_unit.size());
  for (std::size_t i = 0; i < p0_unit.size(); ++i) weights[i] = p0_unit[i] * p0_unit[i];
  for (Complex& t : roots) t = refine_section_root(weights, nodes, t);
  std::sort(roots.begin(), roots.end(), complex_less);
  return roots;
}

}  // namespace detail

// Builds an (n+1) x (n+1) orthogonal matrix whose Hadamard inverse has rank
// two: base point column plus the curve points over the section-polynomial
// roots, all unit-normalized with the principal square root. Configurations
// touching the blown-down hyperplanes or degenerate curve positions are
// rejected, not repaired.
inline Rank2Certificate construct_rank2(int n, std::vector<Complex> p0,
                                        std::vector<Complex> nodes, bool real_field = true,
                                        const Tolerance& tol = {}) {
  if (n < 2) throw std::invalid_argument("construct_rank2: need n >= 2");
  if (static_cast<int>(p0.size()) != n + 1 || static_cast<int>(nodes.size()) != n + 1)
    throw std::invalid_argument("construct_rank2: p0 and nodes must have n+1 entries");
  for (int i = 0; i <= n; ++i)
    if (std::abs(p0[i]) <= tol.abs)
      throw BlownDownHyperplane(i);
  double node_scale = 0.0;
  for (const Complex& a : nodes) node_scale = std::max(node_scale, std::abs(a));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (std::abs(nodes[i] - nodes[j]) <= tol.abs * std::max(1.0, node_scale))
        throw std::invalid_argument("construct_rank2: nodes must be pairwise distinct");
  if (real_field) {
    for (const Complex& v : p0)
      if (std::abs(v.imag()) > tol.abs)
        throw std::invalid_argument("construct_rank2: real field requires real p0");
    for (const Complex& v : nodes)
      if (std::abs(v.imag()) > tol.abs)
        throw std::invalid_argument("construct_rank2: real field requires real nodes");
  }

  // gauge: a_0 = 0, a_1 = 1 (an affine reparametrization, projectively inert)
  Complex span = nodes[1] - nodes[0];
  Complex origin = nodes[0];
  for (Complex& a : nodes) a = (a - origin) / span;

  // unit-normalize p0 against the sum-of-squares form
  Complex norm2(0.0);
  for (const Complex& v : p0) norm2 += v * v;
  if (std::abs(norm2) <= tol.abs)
    throw std::invalid_argument("construct_rank2: p0 is isotropic for the standard form");
  Complex inv = 1.0 / scalar_sqrt(norm2);
  for (Complex& v : p0) v *= inv;

  std::vector<Complex> roots = detail::section_roots(p0, nodes, tol);

  double root_scale = 1.0;
  for (const Complex& t : roots) root_scale = std::max(root_scale, std::abs(t));
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (std::abs(roots[a] - roots[b]) <= 1e-8 * root_scale)
        throw std::domain_error("construct_rank2: repeated roots (degenerate curve position)");
  for (const Complex& t : roots)
    for (const Complex& a : nodes)
      if (std::abs(t - a) <= 1e-8 * std::max(1.0, root_scale))
        throw std::domain_error("construct_rank2: root collides with a node");

  Matrix<Complex> a = detail::curve_columns(p0, nodes, roots);
  if (a.rows() == 0)
    throw std::domain_error("construct_rank2: isotropic curve column (degenerate position)");
  double top = max_abs(a);
  for (const Complex& e : a.entries())
    if (std::abs(e) <= 1e-12 * top)
      throw std::domain_error("construct_rank2: zero entry (point on a blown-down hyperplane)");

  Rank2Certificate cert;
  cert.ortho_residual =
      max_abs(a.transpose() * a - Matrix<Complex>::identity(n + 1));
  std::vector<double> sv = singular_values(hadamard_inverse(a, tol));
  cert.hadamard_sigma_ratio = sv[2] / sv[0];
  cert.matrix = std::move(a);
  cert.param = {std::move(p0), std::move(nodes), std::move(roots), real_field};
  return cert;
}

// Local dimension of the constructed family at a certificate, as the
// numerical rank of a central-difference Jacobian. Chart: n directions of
// the unit sphere at p0 and the n-1 free nodes a_2..a_n, so the expected
// value is 2n-1 = 2m-3.
inline int local_dimension(const Rank2Certificate& cert, const Tolerance& tol = {}) {
  if (!cert.param.real_field)
    throw std::invalid_argument("local_dimension: defined for real certificates");
  const int m = static_cast<int>(cert.param.base_point.size());
  const int n = m - 1;
  std::vector<double> p0(m);
  for (int i = 0; i < m; ++i) p0[i] = cert.param.base_point[i].real();
  std::vector<double> nodes(m);
  for (int i = 0; i < m; ++i) nodes[i] = cert.param.nodes[i].real();

  // orthonormal tangent frame at p0: Householder image of e_1..e_n
  std::vector<std::vector<double>> tangent(n, std::vector<double>(m, 0.0));
  {
    std::vector<double> v(m);
    v[0] = 1.0 - p0[0];
    for (int i = 1; i < m; ++i) v[i] = -p0[i];
    double vn2 = 0.0;
    for (double x : v) vn2 += x * x;
    for (int k = 0; k < n; ++k) {
      std::vector<double>& w = tangent[k];
      w[k + 1] = 1.0;
      if (vn2 > 1e-24) {
        double f = 2.0 * v[k + 1] / vn2;
        for (int i = 0; i < m; ++i) w[i] -= f * v[i];
      }
    }
  }

  auto evaluate = [&](const std::vector<double>& u,
                      const std::vector<double>& free_nodes) -> Matrix<Complex> {
    std::vector<Complex> p(m);
    double norm2 = 0.0;
    for (int i = 0; i < m; ++i) {
      double x = p0[i];
      for (int k = 0; k < n; ++k) x += u[k] * tangent[k][i];
      p[i] = Complex(x, 0.0);
      norm2 += x * x;
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (Complex& x : p) x *= inv;
    std::vector<Complex> a(m);
    a[0] = 0.0;
    a[1] = 1.0;
    for (int k = 2; k < m; ++k) a[k] = Complex(free_nodes[k - 2], 0.0);
    std::vector<Complex> roots = detail::section_roots(p, a, tol);
    return detail::curve_columns(p, a, roots);
  };

  const int params = 2 * n - 1;
  const double h = 1e-5;
  Matrix<Complex> jac(m * m, params);
  for (int q = 0; q < params; ++q) {
    std::vector<double> u(n, 0.0);
    std::vector<double> fn(n - 1);
    for (int k = 0; k < n - 1; ++k) fn[k] = nodes[k + 2];
    std::vector<double> u_m = u, fn_m = fn;
    if (q < n) {
      u[q] += h;
      u_m[q] -= h;
    } else {
      fn[q - n] += h;
      fn_m[q - n] -= h;
    }
    Matrix<Complex> plus = evaluate(u, fn);
    Matrix<Complex> minus = evaluate(u_m, fn_m);
    if (plus.rows() == 0 || minus.rows() == 0)
      throw std::runtime_error("local_dimension: Jacobian evaluation hit a degenerate configuration");
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        jac(i * m + j, q) = (plus(i, j) - minus(i, j)) / (2.0 * h);
  }
  return rank(jac, tol);
}

// True iff the Cremona images of the points lie on one line: together with
// the implicit coordinate simplex, the configuration then sits on a rational
// normal curve.
template <class K>
bool lies_on_common_rnc(const PointConfig<K>& p_cfg, const Tolerance& tol = {}) {
  std::vector<Point<K>> images;
  images.reserve(p_cfg.size());
  for (const Point<K>& p : p_cfg.points()) images.push_back(cremona(p, tol));
  return span_dim(std::span<const Point<K>>(images), tol) == 1;
}

}  // namespace hadamard
