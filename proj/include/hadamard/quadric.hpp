#pragma once

#include <utility>
#include <vector>

#include "hadamard/matrix.hpp"
#include "hadamard/projective.hpp"
#include "hadamard/scalar.hpp"

namespace hadamard {

// Quadratic form on P^n stored as its symmetric (n+1)x(n+1) Gram matrix;
// Q(u, v) = u^T G v with the bilinear (never Hermitian) pairing.
template <class K>
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(Matrix<K> g, const Tolerance& tol = {}) : g_(std::move(g)) {
    if (g_.rows() != g_.cols())
      throw std::invalid_argument("quadratic form: matrix not square");
    const double scale = std::max(max_abs(g_), 1e-300);
    for (int i = 0; i < g_.rows(); ++i)
      for (int j = i + 1; j < g_.cols(); ++j) {
        K diff(g_(i, j) - g_(j, i));
        if constexpr (is_exact_v<K>) {
          if (!is_zero(diff, tol)) throw std::invalid_argument("quadratic form: not symmetric");
        } else {
          if (abs_approx(diff) > tol.abs * scale)
            throw std::invalid_argument("quadratic form: not symmetric");
        }
      }
  }

  static QuadraticForm standard(int n) {  // sum of squares, Gram matrix I
    return QuadraticForm(Matrix<K>::identity(n + 1));
  }

  const Matrix<K>& gram() const { return g_; }
  int ambient_dim() const { return g_.rows() - 1; }

  K eval(const Point<K>& u, const Point<K>& v) const {
    if (static_cast<int>(u.coords.size()) != g_.rows() ||
        static_cast<int>(v.coords.size()) != g_.rows())
      throw std::invalid_argument("quadratic form: dimension mismatch");
    K acc(0);
    for (int i = 0; i < g_.rows(); ++i)
      for (int j = 0; j < g_.cols(); ++j) acc = K(acc + u.coords[i] * g_(i, j) * v.coords[j]);
    return acc;
  }

  K eval(const Point<K>& p) const { return eval(p, p); }

  bool nondegenerate(const Tolerance& tol = {}) const {
    if constexpr (is_exact_v<K>) {
      return rank(g_, tol) == g_.rows();
    } else {
      std::vector<double> sv = singular_values(g_);
      return !sv.empty() && sv[0] > 0.0 && sv.back() / sv[0] > tol.rel;
    }
  }

 private:
  Matrix<K> g_;
};

// Value of the bilinear form on the given representatives; only its vanishing
// is projectively meaningful.
template <class K>
K polar_pairing(const QuadraticForm<K>& q, const Point<K>& z, const Point<K>& w) {
  return q.eval(z, w);
}

namespace detail {
template <class K>
double pairing_scale(const QuadraticForm<K>& q, const Point<K>& z, const Point<K>& w) {
  double mz = 0.0, mw = 0.0;
  for (const K& c : z.coords) mz = std::max(mz, abs_approx(c));
  for (const K& c : w.coords) mw = std::max(mw, abs_approx(c));
  return std::max(mz * mw * max_abs(q.gram()) * q.gram().rows(), 1e-300);
}
}  // namespace detail

// Vanishing test for a pairing, scale-aware on the float backend.
template <class K>
bool pairing_vanishes(const QuadraticForm<K>& q, const Point<K>& z, const Point<K>& w,
                      const Tolerance& tol = {}) {
  K v = q.eval(z, w);
  if constexpr (is_exact_v<K>) return is_zero(v, tol);
  else return abs_approx(v) <= tol.abs * detail::pairing_scale(q, z, w);
}

// Covector G z cutting out the polar hyperplane H_{Q,z}.
template <class K>
std::vector<K> polar_hyperplane(const QuadraticForm<K>& q, const Point<K>& z,
                                const Tolerance& tol = {}) {
  if (!q.nondegenerate(tol))
    throw std::domain_error("polar hyperplane: quadratic form is degenerate");
  const Matrix<K>& g = q.gram();
  if (static_cast<int>(z.coords.size()) != g.rows())
    throw std::invalid_argument("polar hyperplane: dimension mismatch");
  std::vector<K> h(g.rows(), K(0));
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) h[i] = K(h[i] + g(i, j) * z.coords[j]);
  return h;
}

// n+1 points of P^n, mutually polar, none on the quadric.
template <class K>
bool is_apolar_set(const QuadraticForm<K>& q, const PointConfig<K>& cfg,
                   const Tolerance& tol = {}) {
  const int n = q.ambient_dim();
  if (static_cast<int>(cfg.size()) != n + 1 || cfg.ambient_dim() != n)
    throw std::invalid_argument("apolar set: need n+1 points of P^n");
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    if (pairing_vanishes(q, cfg[i], cfg[i], tol)) return false;  // on the quadric
    for (std::size_t j = i + 1; j < cfg.size(); ++j)
      if (!pairing_vanishes(q, cfg[i], cfg[j], tol)) return false;
  }
  return true;
}

// The unique quadric making the first n+1 base points apolar while the last
// base point has the given polar hyperplane. Reduces to the normal form
// (simplex, all-ones point) by an explicit coordinate change and pulls
// sum a_i (x^i)^2 back.
template <class K>
QuadraticForm<K> lemma32_quadric(const PointConfig<K>& base, const std::vector<K>& hyperplane,
                                 const Tolerance& tol = {}) {
  const int n = base.ambient_dim();
  if (static_cast<int>(base.size()) != n + 2)
    throw std::invalid_argument("base: need n+2 points of P^n");
  if (static_cast<int>(hyperplane.size()) != n + 1)
    throw std::invalid_argument("hyperplane covector: wrong length");

  std::vector<Point<K>> zs(base.points().begin(), base.points().end() - 1);
  const Point<K>& p0 = base.points().back();

  Matrix<K> m = config_matrix(std::span<const Point<K>>(zs));
  std::optional<Matrix<K>> m_inv = inverse(m);
  if (!m_inv) throw std::domain_error("base: first n+1 points are linearly dependent");

  // coefficients of p0 over the z-basis; all must be nonzero (general position)
  std::vector<K> c(n + 1, K(0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) c[i] = K(c[i] + (*m_inv)(i, j) * p0.coords[j]);
  for (int i = 0; i <= n; ++i)
    if (is_zero(c[i], tol))
      throw std::domain_error("base: last point lies in a coordinate hyperplane of the z-basis");

  // hyperplane in normal-form coordinates: a'_i = H(z_i) * c_i
  std::vector<K> a(n + 1, K(0));
  for (int i = 0; i <= n; ++i) {
    K hz(0);
    for (int k = 0; k <= n; ++k) hz = K(hz + hyperplane[k] * zs[i].coords[k]);
    if (is_zero(hz, tol))
      throw std::domain_error("hyperplane meets the base (contains a z point)");
    a[i] = K(hz * c[i]);
  }
  {
    K hp(0);
    for (int k = 0; k <= n; ++k) hp = K(hp + hyperplane[k] * p0.coords[k]);
    if (is_zero(hp, tol)) throw std::domain_error("hyperplane meets the base (contains p0)");
  }

  // T = diag(c)^{-1} M^{-1}; G = T^T diag(a') T
  Matrix<K> t(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    K inv_ci = checked_div(K(1), c[i]);
    for (int j = 0; j <= n; ++j) t(i, j) = K((*m_inv)(i, j) * inv_ci);
  }
  Matrix<K> g(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      K acc(0);
      for (int k = 0; k <= n; ++k) acc = K(acc + t(k, i) * a[k] * t(k, j));
      g(i, j) = acc;
    }
  return QuadraticForm<K>(g, tol);
}

// Monomials x^i x^j with i <= j in lexicographic order; the coordinate system
// on the space of quadrics used by quadrics_through.
inline std::vector<std::pair<int, int>> quadric_monomials(int n) {
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) idx.emplace_back(i, j);
  return idx;
}

template <class K>
struct QuadricSystem {
  int proj_dim = -1;                     // projective dimension of the system
  std::vector<QuadraticForm<K>> basis;   // one form per kernel column
};

// Linear system of quadrics through the given points: kernel of the
// point-evaluation incidence matrix on the binom(n+2,2)-dimensional space.
template <class K>
QuadricSystem<K> quadrics_through(const PointConfig<K>& cfg, const Tolerance& tol = {}) {
  const int n = cfg.ambient_dim();
  if (n < 1) throw std::invalid_argument("quadrics_through: empty configuration");
  const std::vector<std::pair<int, int>> monomials = quadric_monomials(n);
  Matrix<K> incidence(static_cast<int>(cfg.size()), static_cast<int>(monomials.size()));
  for (int r = 0; r < static_cast<int>(cfg.size()); ++r)
    for (int c = 0; c < static_cast<int>(monomials.size()); ++c) {
      auto [i, j] = monomials[c];
      incidence(r, c) = K(cfg[r].coords[i] * cfg[r].coords[j]);
    }

  Matrix<K> kernel = kernel_basis(incidence, tol);
  QuadricSystem<K> out;
  out.proj_dim = kernel.cols() - 1;
  const K half = checked_div(K(1), K(2));
  for (int c = 0; c < kernel.cols(); ++c) {
    Matrix<K> g(n + 1, n + 1);
    for (int k = 0; k < static_cast<int>(monomials.size()); ++k) {
      auto [i, j] = monomials[k];
      if (i == j) g(i, i) = kernel(k, c);
      else {
        g(i, j) = K(kernel(k, c) * half);
        g(j, i) = g(i, j);
      }
    }
    out.basis.emplace_back(std::move(g), tol);
  }
  return out;
}

// The conic through the coordinate simplex and an apolar triple p_0,p_1,p_2
// (apolar w.r.t. sum of squares):
//   (p^2_0 p^2_1 p^2_2) x^0 x^1 + (p^1_0 p^1_1 p^1_2) x^0 x^2
//   + (p^0_0 p^0_1 p^0_2) x^1 x^2.
template <class K>
QuadraticForm<K> weddle_conic(const PointConfig<K>& p_cfg, const Tolerance& tol = {}) {
  if (p_cfg.size() != 3 || p_cfg.ambient_dim() != 2)
    throw std::invalid_argument("weddle conic: need 3 points of P^2");
  for (std::size_t j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      if (is_zero(p_cfg[j].coords[i], tol))
        throw std::domain_error("weddle conic: point " + std::to_string(j) +
                                " has a zero coordinate");
  auto coord_product = [&](int i) {
    return K(p_cfg[0].coords[i] * p_cfg[1].coords[i] * p_cfg[2].coords[i]);
  };
  const K half = checked_div(K(1), K(2));
  K c01(coord_product(2) * half), c02(coord_product(1) * half), c12(coord_product(0) * half);
  Matrix<K> g(3, 3);
  g(0, 1) = c01; g(1, 0) = c01;
  g(0, 2) = c02; g(2, 0) = c02;
  g(1, 2) = c12; g(2, 1) = c12;
  return QuadraticForm<K>(g, tol);
}

// trace_Q P = sum_i P(v_i, v_i) over any Q-orthonormal basis, computed as
// trace(G_Q^{-1} G_P).
template <class K>
K trace_pairing(const QuadraticForm<K>& q, const QuadraticForm<K>& p,
                const Tolerance& tol = {}) {
  if (q.ambient_dim() != p.ambient_dim())
    throw std::invalid_argument("trace pairing: dimension mismatch");
  if (!q.nondegenerate(tol))
    throw std::domain_error("trace pairing: quadratic form is degenerate");
  std::optional<Matrix<K>> q_inv = inverse(q.gram());
  if (!q_inv) throw std::domain_error("trace pairing: quadratic form is degenerate");
  Matrix<K> prod = (*q_inv) * p.gram();
  K tr(0);
  for (int i = 0; i < prod.rows(); ++i) tr = K(tr + prod(i, i));
  return tr;
}

}  // namespace hadamard
