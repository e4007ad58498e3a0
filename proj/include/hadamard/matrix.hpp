#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hadamard/scalar.hpp"

namespace hadamard {

// Dense row-major matrix over one scalar backend. Values are immutable in
// spirit: every operation returns a fresh matrix.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, K(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative shape");
  }
  Matrix(int rows, int cols, std::vector<K> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
      throw std::invalid_argument("matrix: entry count does not match shape");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  const std::vector<K>& entries() const& { return data_; }
  // rvalue overload returns by value so iterating over a temporary's entries
  // cannot dangle
  std::vector<K> entries() && { return std::move(data_); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul: dimension mismatch");
    Matrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& a = (*this)(i, k);
        if (is_zero(a, Tolerance{1e-8, 1e-300})) continue;
        for (int j = 0; j < o.cols_; ++j) p(i, j) = K(p(i, j) + a * o(k, j));
      }
    return p;
  }

  Matrix operator+(const Matrix& o) const { return combine(o, +1); }
  Matrix operator-(const Matrix& o) const { return combine(o, -1); }

  Matrix scaled(const K& s) const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = K(data_[k] * s);
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  std::vector<K> row(int i) const {
    std::vector<K> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  std::vector<K> col(int j) const {
    std::vector<K> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

 private:
  Matrix combine(const Matrix& o, int sign) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix add/sub: shape mismatch");
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
      m.data_[k] = sign > 0 ? K(data_[k] + o.data_[k]) : K(data_[k] - o.data_[k]);
    return m;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<K> data_;
};

template <class K>
double max_abs(const Matrix<K>& m) {
  double v = 0.0;
  for (const K& e : m.entries()) v = std::max(v, abs_approx(e));
  return v;
}

template <class K>
Matrix<Complex> lift_to_complex(const Matrix<K>& m) {
  Matrix<Complex> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = to_complex(m(i, j));
  return out;
}

namespace detail {

// Integral-domain adapters for fraction-free elimination: plain integers for
// the rational backend, Gaussian integers for the Gaussian-rational backend.
struct IntDomain {
  using Elem = mpz_class;
  static Elem zero() { return mpz_class(0); }
  static Elem one() { return mpz_class(1); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static Elem mul(const Elem& a, const Elem& b) { return mpz_class(a * b); }
  static Elem sub(const Elem& a, const Elem& b) { return mpz_class(a - b); }
  static void divexact(Elem& q, const Elem& num, const Elem& den) {
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  static mpz_class norm(const Elem& a) { return mpz_class(a * a); }
};

struct GaussianIntDomain {
  struct Elem {
    mpz_class re, im;
  };
  static Elem zero() { return {mpz_class(0), mpz_class(0)}; }
  static Elem one() { return {mpz_class(1), mpz_class(0)}; }
  static bool is_zero(const Elem& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }
  static Elem mul(const Elem& a, const Elem& b) {
    return {mpz_class(a.re * b.re - a.im * b.im), mpz_class(a.re * b.im + a.im * b.re)};
  }
  static Elem sub(const Elem& a, const Elem& b) {
    return {mpz_class(a.re - b.re), mpz_class(a.im - b.im)};
  }
  // Exact quotient in Z[i]; only called where Bareiss guarantees divisibility.
  static void divexact(Elem& q, const Elem& num, const Elem& den) {
    mpz_class n = norm(den);
    mpz_class re(num.re * den.re + num.im * den.im);
    mpz_class im(num.im * den.re - num.re * den.im);
    mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  }
  static mpz_class norm(const Elem& a) { return mpz_class(a.re * a.re + a.im * a.im); }
};

// Clear denominators row by row; row scaling by a positive integer is
// rank-preserving.
inline std::vector<std::vector<IntDomain::Elem>> integer_lift(const Matrix<Rational>& m) {
  std::vector<std::vector<IntDomain::Elem>> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    out[i].resize(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
      Rational v(m(i, j) * l);
      out[i][j] = v.get_num();
    }
  }
  return out;
}

inline std::vector<std::vector<GaussianIntDomain::Elem>> integer_lift(
    const Matrix<GaussianRational>& m) {
  std::vector<std::vector<GaussianIntDomain::Elem>> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).re.get_den().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).im.get_den().get_mpz_t());
    }
    out[i].resize(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
      Rational re(m(i, j).re * l), im(m(i, j).im * l);
      out[i][j] = {re.get_num(), im.get_num()};
    }
  }
  return out;
}

// Fraction-free (Bareiss) elimination with full pivoting; returns the rank.
// Entries stay minors of the lifted matrix, so divisions are exact and
// coefficient growth stays polynomial.
template <class Domain>
int bareiss_rank(std::vector<std::vector<typename Domain::Elem>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  typename Domain::Elem prev = Domain::one();
  int r = 0;
  std::vector<int> colperm(cols);
  for (int j = 0; j < cols; ++j) colperm[j] = j;

  while (r < rows && r < cols) {
    // full pivoting: largest-norm nonzero entry of the trailing block
    int pi = -1, pj = -1;
    mpz_class best(0);
    for (int i = r; i < rows; ++i)
      for (int j = r; j < cols; ++j) {
        if (Domain::is_zero(m[i][colperm[j]])) continue;
        mpz_class n = Domain::norm(m[i][colperm[j]]);
        if (pi < 0 || n > best) {
          best = n;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(m[r], m[pi]);
    std::swap(colperm[r], colperm[pj]);

    const typename Domain::Elem pivot = m[r][colperm[r]];
    for (int i = r + 1; i < rows; ++i) {
      for (int j = r + 1; j < cols; ++j) {
        typename Domain::Elem num = Domain::sub(Domain::mul(pivot, m[i][colperm[j]]),
                                                Domain::mul(m[i][colperm[r]], m[r][colperm[j]]));
        Domain::divexact(m[i][colperm[j]], num, prev);
      }
      m[i][colperm[r]] = Domain::zero();
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace detail

// Singular values of a complex matrix, descending. Declared here, defined in
// eigen_bridge.hpp; exact backends must use rank() instead.
std::vector<double> singular_values(const Matrix<Complex>& m);

template <class K>
std::vector<double> singular_values(const Matrix<K>&) {
  static_assert(is_exact_v<K>, "unexpected scalar type");
  throw std::domain_error("singular values are undefined on exact backends; use rank instead");
}

// Rank: exact fraction-free elimination on exact backends; relative
// singular-value threshold sigma_k > tol.rel * sigma_1 on the float backend.
template <class K>
int rank(const Matrix<K>& m, const Tolerance& tol = {}) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if constexpr (std::is_same_v<K, Rational>) {
    return detail::bareiss_rank<detail::IntDomain>(detail::integer_lift(m));
  } else if constexpr (std::is_same_v<K, GaussianRational>) {
    return detail::bareiss_rank<detail::GaussianIntDomain>(detail::integer_lift(m));
  } else {
    std::vector<double> sv = singular_values(m);
    if (sv.empty() || sv[0] <= 0.0) return 0;
    int r = 0;
    for (double s : sv)
      if (s > tol.rel * sv[0]) ++r;
    return r;
  }
}

namespace detail {

// Reduced row echelon form over a field (exact backends). Returns pivot
// columns; m is reduced in place.
template <class K>
std::vector<int> rref(Matrix<K>& m) {
  std::vector<int> pivot_cols;
  int r = 0;
  for (int j = 0; j < m.cols() && r < m.rows(); ++j) {
    int pi = -1;
    double best = 0.0;
    for (int i = r; i < m.rows(); ++i) {
      if (is_zero(m(i, j), Tolerance{})) continue;
      double a = abs_approx(m(i, j));
      if (pi < 0 || a > best) {
        best = a;
        pi = i;
      }
    }
    if (pi < 0) continue;
    for (int jj = 0; jj < m.cols(); ++jj) std::swap(m(r, jj), m(pi, jj));
    K inv = checked_div(K(1), m(r, j));
    for (int jj = 0; jj < m.cols(); ++jj) m(r, jj) = K(m(r, jj) * inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, j), Tolerance{})) continue;
      K f = m(i, j);
      for (int jj = 0; jj < m.cols(); ++jj) m(i, jj) = K(m(i, jj) - f * m(r, jj));
    }
    pivot_cols.push_back(j);
    ++r;
  }
  return pivot_cols;
}

Matrix<Complex> kernel_basis_svd(const Matrix<Complex>& m, const Tolerance& tol);

}  // namespace detail

// Columns spanning the right null space; cols(A) - rank(A) of them.
template <class K>
Matrix<K> kernel_basis(const Matrix<K>& m, const Tolerance& tol = {}) {
  if constexpr (is_exact_v<K>) {
    Matrix<K> red = m;
    std::vector<int> pivots = detail::rref(red);
    std::vector<int> free_cols;
    {
      std::size_t p = 0;
      for (int j = 0; j < m.cols(); ++j) {
        if (p < pivots.size() && pivots[p] == j) ++p;
        else free_cols.push_back(j);
      }
    }
    Matrix<K> kernel(m.cols(), static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
      int f = free_cols[k];
      kernel(f, k) = K(1);
      for (int p = 0; p < static_cast<int>(pivots.size()); ++p)
        kernel(pivots[p], k) = K(-red(p, f));
    }
    return kernel;
  } else {
    return detail::kernel_basis_svd(m, tol);
  }
}

namespace detail {
Matrix<Complex> inverse_float(const Matrix<Complex>& m);
}

// Exact Gauss-Jordan inverse; nullopt when singular.
template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const int n = m.rows();
  if constexpr (is_exact_v<K>) {
    Matrix<K> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
      aug(i, n + i) = K(1);
    }
    std::vector<int> pivots = detail::rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    Matrix<K> inv(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  } else {
    std::vector<double> sv = singular_values(m);
    if (sv.empty() || sv[0] <= 0.0 || sv.back() <= 1e-14 * sv[0]) return std::nullopt;
    return detail::inverse_float(m);
  }
}

}  // namespace hadamard
