#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hadamard/matrix.hpp"
#include "hadamard/projective.hpp"
#include "hadamard/quadric.hpp"
#include "hadamard/scalar.hpp"

namespace hadamard {

// r+s+2 points of P^r with a designated split: the first r+1 points (the
// block that can be normalized to the coordinate simplex) and the remaining
// s+1 points.
template <class K>
class SplitConfig {
 public:
  SplitConfig() = default;
  SplitConfig(PointConfig<K> pts, int first_block, const Tolerance& tol = {})
      : points_(std::move(pts)), first_block_(first_block) {
    const int r = points_.ambient_dim();
    if (first_block_ != r + 1)
      throw std::invalid_argument("split configuration: first block must have r+1 points");
    if (static_cast<int>(points_.size()) < first_block_ + 1)
      throw std::invalid_argument("split configuration: need at least r+2 points");
    if (rank(config_matrix(first_points()), tol) != first_block_)
      throw std::invalid_argument("split configuration: first block is linearly dependent");
  }

  int r() const { return points_.ambient_dim(); }
  int s() const { return static_cast<int>(points_.size()) - r() - 2; }
  int split() const { return first_block_; }
  const PointConfig<K>& config() const { return points_; }

  std::span<const Point<K>> first_points() const {
    return std::span<const Point<K>>(points_.points()).subspan(0, first_block_);
  }
  std::span<const Point<K>> second_points() const {
    return std::span<const Point<K>>(points_.points()).subspan(first_block_);
  }

 private:
  PointConfig<K> points_;
  int first_block_ = 0;
};

// Coordinate change sending the first block to the coordinate simplex;
// the remaining points are rewritten in that frame.
template <class K>
SplitConfig<K> canonicalize(const SplitConfig<K>& cfg, const Tolerance& tol = {}) {
  Matrix<K> m = config_matrix(cfg.first_points());
  std::optional<Matrix<K>> m_inv = inverse(m);
  if (!m_inv) throw std::domain_error("canonicalize: first block is linearly dependent");
  std::vector<Point<K>> pts = simplex_points<K>(cfg.r());
  for (const Point<K>& p : cfg.second_points()) {
    std::vector<K> c(cfg.r() + 1, K(0));
    for (int i = 0; i <= cfg.r(); ++i)
      for (int j = 0; j <= cfg.r(); ++j) c[i] = K(c[i] + (*m_inv)(i, j) * p.coords[j]);
    pts.emplace_back(std::move(c));
  }
  return SplitConfig<K>(PointConfig<K>(std::move(pts), tol), cfg.split(), tol);
}

// Matrix whose columns are the second-block points in the canonical frame.
template <class K>
Matrix<K> second_block_matrix(const SplitConfig<K>& cfg, const Tolerance& tol = {}) {
  SplitConfig<K> canon = canonicalize(cfg, tol);
  return config_matrix(canon.second_points());
}

// Gale transform: after normalizing the first block to the simplex, the rows
// of the second-block coordinate matrix become the points q_i of P^s, listed
// after the new simplex block w_alpha. Pairing convention: point k of the
// input corresponds to point k of the output with the two blocks swapped
// (z_i <-> q_i, p_alpha <-> w_alpha).
template <class K>
SplitConfig<K> gale_transform(const SplitConfig<K>& cfg, const Tolerance& tol = {}) {
  Matrix<K> p = second_block_matrix(cfg, tol);  // (r+1) x (s+1)
  const int s = cfg.s();
  std::vector<Point<K>> pts = simplex_points<K>(s);
  for (int i = 0; i <= cfg.r(); ++i) pts.emplace_back(p.row(i));
  return SplitConfig<K>(PointConfig<K>(std::move(pts), tol), s + 1, tol);
}

namespace detail {

// Deterministic search for a kernel element with every coordinate nonzero:
// combinations sum_c t^c * basis_c have polynomially many bad t per
// coordinate, so scanning t = 1, 2, ... terminates whenever a valid element
// exists at all.
template <class K>
std::optional<std::vector<K>> all_nonzero_kernel_element(const Matrix<K>& kernel,
                                                         const Tolerance& tol) {
  const int dim = kernel.rows();
  const int d = kernel.cols();
  if (d == 0) return std::nullopt;

  for (int k = 0; k < dim; ++k) {
    bool identically_zero = true;
    for (int c = 0; c < d && identically_zero; ++c)
      if constexpr (is_exact_v<K>) {
        if (!is_zero(kernel(k, c), tol)) identically_zero = false;
      } else {
        if (abs_approx(kernel(k, c)) > tol.abs) identically_zero = false;
      }
    if (identically_zero) return std::nullopt;  // coordinate k vanishes on the whole kernel
  }

  const long max_bad = static_cast<long>(dim) * (d - 1) + 1;
  for (long t = 1; t <= max_bad + 1; ++t) {
    std::vector<K> v(dim, K(0));
    K power(1);
    const K t_val = scalar_from_int<K>(t);
    for (int c = 0; c < d; ++c) {
      for (int k = 0; k < dim; ++k) v[k] = K(v[k] + power * kernel(k, c));
      power = K(power * t_val);
    }
    bool all_nonzero = true;
    if constexpr (is_exact_v<K>) {
      for (const K& x : v)
        if (is_zero(x, tol)) {
          all_nonzero = false;
          break;
        }
    } else {
      double top = 0.0;
      for (const K& x : v) top = std::max(top, abs_approx(x));
      for (const K& x : v)
        if (abs_approx(x) <= tol.rel * top) {
          all_nonzero = false;
          break;
        }
    }
    if (all_nonzero) return v;
  }
  return std::nullopt;
}

}  // namespace detail

// Diagonal of a nondegenerate Lambda with A Lambda B^T = 0, pairing point k
// of the first configuration with point k of the second after swapping the
// second configuration's blocks (the Gale correspondence z_i <-> q_i,
// p_alpha <-> w_alpha). Returns std::nullopt when no all-nonzero diagonal
// exists.
template <class K>
std::optional<std::vector<K>> find_association_diagonal(const SplitConfig<K>& a_cfg,
                                                        const SplitConfig<K>& b_cfg,
                                                        const Tolerance& tol = {}) {
  if (a_cfg.config().size() != b_cfg.config().size())
    throw std::invalid_argument("association: point counts differ");
  if (a_cfg.r() + b_cfg.r() + 2 != static_cast<int>(a_cfg.config().size()))
    throw std::invalid_argument("association: need r+s+2 points in P^r and P^s");

  Matrix<K> a = config_matrix(a_cfg.config());
  std::vector<Point<K>> b_swapped(b_cfg.second_points().begin(), b_cfg.second_points().end());
  b_swapped.insert(b_swapped.end(), b_cfg.first_points().begin(), b_cfg.first_points().end());
  Matrix<K> b = config_matrix(std::span<const Point<K>>(b_swapped));

  const int count = static_cast<int>(a_cfg.config().size());
  Matrix<K> system(a.rows() * b.rows(), count);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.rows(); ++j)
      for (int k = 0; k < count; ++k) system(i * b.rows() + j, k) = K(a(i, k) * b(j, k));

  return detail::all_nonzero_kernel_element(kernel_basis(system, tol), tol);
}

template <class K>
bool is_associated(const SplitConfig<K>& a_cfg, const SplitConfig<K>& b_cfg,
                   const Tolerance& tol = {}) {
  return find_association_diagonal(a_cfg, b_cfg, tol).has_value();
}

template <class K>
struct SelfAssociation {
  bool self_associated = false;
  std::optional<QuadraticForm<K>> quadric;  // in the input coordinates
};

// Self-association test for 2n+2 points split as (z block, p block): searches
// for a quadric Q, diagonal in the z frame, with P^T Q P again diagonal and
// nondegenerate (the bilinear apolarity condition for both blocks at once;
// the search is linear in Q's diagonal). The returned flag re-verifies both
// blocks with is_apolar_set.
template <class K>
SelfAssociation<K> is_self_associated(const SplitConfig<K>& cfg, const Tolerance& tol = {}) {
  const int n = cfg.r();
  if (cfg.s() != n)
    throw std::invalid_argument("self-association: need 2n+2 points of P^n");
  Matrix<K> p = second_block_matrix(cfg, tol);  // (n+1) x (n+1)

  // off-diagonal of P^T diag(lambda) P must vanish
  const int pairs = n * (n + 1) / 2;
  Matrix<K> system(pairs, n + 1);
  {
    int row = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j, ++row)
        for (int l = 0; l <= n; ++l) system(row, l) = K(p(l, i) * p(l, j));
  }
  std::optional<std::vector<K>> lambda =
      detail::all_nonzero_kernel_element(kernel_basis(system, tol), tol);
  if (!lambda) return {};

  // pull diag(lambda) back from the canonical frame to the input coordinates
  Matrix<K> m = config_matrix(cfg.first_points());
  std::optional<Matrix<K>> m_inv = inverse(m);
  if (!m_inv) throw std::domain_error("self-association: first block is linearly dependent");
  Matrix<K> g(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      K acc(0);
      for (int k = 0; k <= n; ++k) acc = K(acc + (*m_inv)(k, i) * (*lambda)[k] * (*m_inv)(k, j));
      g(i, j) = acc;
    }
  SelfAssociation<K> out;
  out.quadric = QuadraticForm<K>(std::move(g), tol);
  if (!out.quadric->nondegenerate(tol)) return {};

  PointConfig<K> z_block(std::vector<Point<K>>(cfg.first_points().begin(),
                                               cfg.first_points().end()), tol);
  PointConfig<K> p_block(std::vector<Point<K>>(cfg.second_points().begin(),
                                               cfg.second_points().end()), tol);
  out.self_associated =
      is_apolar_set(*out.quadric, z_block, tol) && is_apolar_set(*out.quadric, p_block, tol);
  return out;
}

namespace detail {

// Reciprocal of every coordinate without renormalization, so that transform
// chains can be compared representative-by-representative.
template <class K>
std::vector<Point<K>> raw_reciprocal(std::span<const Point<K>> pts, const Tolerance& tol) {
  std::vector<Point<K>> out;
  out.reserve(pts.size());
  for (const Point<K>& p : pts) {
    std::vector<K> c;
    c.reserve(p.coords.size());
    for (int k = 0; k < static_cast<int>(p.coords.size()); ++k) {
      if (is_zero(p.coords[k], tol)) throw BlownDownHyperplane(k);
      c.push_back(checked_div(K(1), p.coords[k]));
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace detail

// Checks that association and the Cremona transform commute: transforming the
// second block through the simplex Cremona and then taking the Gale transform
// matches taking the Gale transform first and transforming its second block.
// Both routes are evaluated on reciprocal representatives in the canonical
// frame and compared point by point.
template <class K>
bool cremona_association_commutes(const SplitConfig<K>& cfg, const Tolerance& tol = {}) {
  SplitConfig<K> canon = canonicalize(cfg, tol);

  // route 1: Cremona on the p block, then Gale
  std::vector<Point<K>> starred = simplex_points<K>(canon.r());
  for (Point<K>& p : detail::raw_reciprocal(canon.second_points(), tol))
    starred.push_back(std::move(p));
  SplitConfig<K> route1 = gale_transform(
      SplitConfig<K>(PointConfig<K>(std::move(starred), tol), canon.split(), tol), tol);

  // route 2: Gale, then Cremona on the q block
  SplitConfig<K> transformed = gale_transform(canon, tol);
  std::vector<Point<K>> route2 = simplex_points<K>(transformed.r());
  for (Point<K>& q : detail::raw_reciprocal(transformed.second_points(), tol))
    route2.push_back(std::move(q));

  const std::vector<Point<K>>& lhs = route1.config().points();
  if (lhs.size() != route2.size()) return false;
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (!proj_equal(lhs[k], route2[k], tol)) return false;
  return true;
}

}  // namespace hadamard
