#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace hadamard {

// Arithmetic backend of a scalar value. Each backend maps to one concrete
// C++ type below; code never mixes them inside one matrix or configuration.
enum class Backend { Rational, GaussianRational, ComplexFloat };

inline const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Rational: return "rational";
    case Backend::GaussianRational: return "gaussian-rational";
    case Backend::ComplexFloat: return "complex-float";
  }
  return "unknown";
}

// Shared comparison policy for floating-point code paths.
// Exact backends ignore it: they compare against exact zero.
struct Tolerance {
  double rel = 1e-8;   // relative singular-value threshold
  double abs = 1e-10;  // absolute residual threshold

  Tolerance() = default;
  Tolerance(double rel_, double abs_) : rel(rel_), abs(abs_) {
    if (!(rel > 0.0 && rel < 1.0))
      throw std::invalid_argument("Tolerance: need 0 < rel < 1");
    if (!(abs > 0.0))
      throw std::invalid_argument("Tolerance: need abs > 0");
  }
};

using Rational = mpq_class;   // always kept in lowest terms, denominator > 0
using Complex  = std::complex<double>;

// num/den reduced to lowest terms with canonical sign.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

struct NotASquare : std::domain_error {
  using std::domain_error::domain_error;
};

// Exact square root of a rational that is a perfect square; throws NotASquare
// otherwise (callers needing sqrt(2/3) must move to the float backend).
inline Rational rational_sqrt(const Rational& a) {
  if (sgn(a) < 0)
    throw NotASquare("sqrt of negative rational: normalization requires the float backend");
  mpz_class num = a.get_num(), den = a.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    throw NotASquare("not a rational square: normalization requires the float backend");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

// a + b*i with exact rational a, b. Arithmetic is the bilinear (non-Hermitian)
// complex arithmetic of Q(i); conjugation is explicit via conj().
struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(const Rational& r) : re(r), im(0) {}
  GaussianRational(long n) : re(n), im(0) {}
  GaussianRational(int n) : re(n), im(0) {}
  GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

  static GaussianRational unit_i() { return GaussianRational(Rational(0), Rational(1)); }

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {Rational(re + o.re), Rational(im + o.im)};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {Rational(re - o.re), Rational(im - o.im)};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {Rational(re * o.re - im * o.im), Rational(re * o.im + im * o.re)};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    Rational n = o.re * o.re + o.im * o.im;
    if (sgn(n) == 0) throw std::domain_error("gaussian rational: division by zero");
    return {Rational((re * o.re + im * o.im) / n), Rational((im * o.re - re * o.im) / n)};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }
};

// ---------------------------------------------------------------------------
// Uniform scalar surface used by the generic linear-algebra and geometry code.
// ---------------------------------------------------------------------------

template <class K>
struct is_exact_scalar : std::false_type {};
template <>
struct is_exact_scalar<Rational> : std::true_type {};
template <>
struct is_exact_scalar<GaussianRational> : std::true_type {};

template <class K>
inline constexpr bool is_exact_v = is_exact_scalar<K>::value;

template <class K>
constexpr Backend backend_of() {
  if constexpr (std::is_same_v<K, Rational>) return Backend::Rational;
  else if constexpr (std::is_same_v<K, GaussianRational>) return Backend::GaussianRational;
  else return Backend::ComplexFloat;
}

inline Rational conj(const Rational& a) { return a; }
inline GaussianRational conj(const GaussianRational& a) {
  return {a.re, Rational(-a.im)};
}
inline Complex conj(const Complex& a) { return std::conj(a); }

inline bool is_zero(const Rational& a, const Tolerance& = {}) { return sgn(a) == 0; }
inline bool is_zero(const GaussianRational& a, const Tolerance& = {}) {
  return sgn(a.re) == 0 && sgn(a.im) == 0;
}
inline bool is_zero(const Complex& a, const Tolerance& tol = {}) {
  return std::abs(a) <= tol.abs;
}

// Approximate magnitude, used only for pivot ordering and normalization
// heuristics, never for zero tests on exact backends.
inline double abs_approx(const Rational& a) { return std::fabs(a.get_d()); }
inline double abs_approx(const GaussianRational& a) {
  return std::hypot(a.re.get_d(), a.im.get_d());
}
inline double abs_approx(const Complex& a) { return std::abs(a); }

inline Complex to_complex(const Rational& a) { return Complex(a.get_d(), 0.0); }
inline Complex to_complex(const GaussianRational& a) {
  return Complex(a.re.get_d(), a.im.get_d());
}
inline Complex to_complex(const Complex& a) { return a; }

template <class K>
K scalar_from_int(long n) {
  if constexpr (std::is_same_v<K, Rational>) return Rational(n);
  else if constexpr (std::is_same_v<K, GaussianRational>) return GaussianRational(n);
  else return Complex(double(n), 0.0);
}

// Division with an explicit zero-divisor check (mpq division by zero is UB).
template <class K>
K checked_div(const K& a, const K& b) {
  if (is_zero(b, Tolerance{1e-8, 1e-300}))
    throw std::domain_error("scalar division by zero");
  return K(a / b);
}

// Principal square root. Floats follow the principal branch (nonnegative real
// part; on the imaginary axis, nonnegative imaginary part). Exact backends
// return an exact root or throw NotASquare.
inline Rational scalar_sqrt(const Rational& a) { return rational_sqrt(a); }

inline GaussianRational scalar_sqrt(const GaussianRational& a) {
  if (sgn(a.im) == 0) {
    if (sgn(a.re) >= 0) return GaussianRational(rational_sqrt(a.re));
    return GaussianRational(Rational(0), rational_sqrt(Rational(-a.re)));
  }
  // (x + y i)^2 = re + im i  =>  x^2 = (re + |a|)/2, y = im/(2x).
  Rational norm2 = a.re * a.re + a.im * a.im;
  Rational n = rational_sqrt(norm2);  // throws if |a| is irrational
  Rational x2((a.re + n) / 2);
  Rational x = rational_sqrt(x2);     // throws if the root leaves Q(i)
  if (sgn(x) == 0)
    throw NotASquare("not a Gaussian-rational square");
  return {x, Rational(a.im / (2 * x))};
}

inline Complex scalar_sqrt(const Complex& a) {
  Complex r = std::sqrt(a);
  if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
  return r;
}

// ---------------------------------------------------------------------------
// Textual encodings shared by all JSON payloads.
// ---------------------------------------------------------------------------

// Canonical "num/den" form, denominator always explicit.
inline std::string to_string(const Rational& a) {
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

// "num/den+num/den i" (sign folded into the imaginary numerator's slot).
inline std::string to_string(const GaussianRational& a) {
  std::string s = to_string(a.re);
  s += (sgn(a.im) < 0) ? "-" : "+";
  s += to_string(Rational(abs(a.im)));
  s += " i";
  return s;
}

inline Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("cannot parse rational: '" + text + "'");
  q.canonicalize();
  return q;
}

inline GaussianRational gaussian_from_string(std::string text) {
  // strip an optional trailing "i" and surrounding blanks
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.pop_back();
  bool has_i = !text.empty() && text.back() == 'i';
  if (has_i) text.pop_back();
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.pop_back();
  if (!has_i) return GaussianRational(rational_from_string(text));

  // split at the sign that separates the two fractions
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if ((text[k] == '+' || text[k] == '-') && std::isdigit(static_cast<unsigned char>(text[k - 1])))
      split = k;
  }
  if (split == std::string::npos)
    return {Rational(0), rational_from_string(text)};  // pure imaginary "3/4 i"
  Rational re = rational_from_string(text.substr(0, split));
  Rational im = rational_from_string(text.substr(split + (text[split] == '+' ? 1 : 0)));
  return {re, im};
}

}  // namespace hadamard
