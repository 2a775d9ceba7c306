#ifndef CLASSPOLY_POLY_HPP
#define CLASSPOLY_POLY_HPP

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace classpoly {

/// Exact signed integer used for every polynomial coefficient.
using Integer = boost::multiprecision::cpp_int;

Integer binomial(int n, int k);
Integer ipow(const Integer& base, int exp);

/// Degree of a polynomial: a non-negative (or, for Laurent polynomials,
/// arbitrary) integer, or minus infinity for the zero polynomial.
/// value() on minus infinity throws instead of returning a number.
class Degree {
 public:
  constexpr Degree(int d) : finite_(true), value_(d) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_finite() const { return finite_; }
  int value() const;

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return static_cast<int>(a.finite_) <=> static_cast<int>(b.finite_);
    return a.value_ <=> b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, Degree d);

 private:
  constexpr Degree() = default;
  bool finite_ = false;
  int value_ = 0;
};

/// Sparse univariate Laurent polynomial with exact integer coefficients.
/// Used for f(X), for Y-coefficients of bivariate polynomials and, with the
/// variable read as Y, for evaluations at X = q.
class XPoly {
 public:
  using Terms = std::map<int, Integer>;

  XPoly() = default;
  XPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  XPoly(int constant) : XPoly(Integer(constant)) {}  // NOLINT(google-explicit-constructor)
  static XPoly monomial(const Integer& coeff, int exp);
  static XPoly x() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  Integer coeff(int exp) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;
  Degree degree() const;
  /// Smallest exponent with a non-zero coefficient.
  Degree low_degree() const;

  /// Multiplies by X^k.
  XPoly times_x_power(int k) const;

  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator-(const XPoly& a);
  friend bool operator==(const XPoly&, const XPoly&) = default;

  /// Human-readable, highest exponent first: "2*X^3 - X".
  std::string to_string(char var = 'X') const;
  std::string to_latex(char var = 'X') const;

  void add_term(int exp, const Integer& coeff);

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const XPoly& p);

XPoly pow(const XPoly& p, int e);
/// (X + c)^n expanded.
XPoly x_plus_c_pow(int c, int n);
/// P(X + c); Laurent input is rejected.
XPoly shift_x(const XPoly& p, int c);
/// Coefficients of P in the basis (X - 1)^a: entry a is the coefficient of
/// (X - 1)^a. Laurent input is rejected.
XPoly expand_in_x_minus_1(const XPoly& p);
/// Inverse of expand_in_x_minus_1.
XPoly from_x_minus_1_basis(const XPoly& coeffs);
/// P(x0). Negative exponents are only allowed for x0 = +-1.
Integer eval(const XPoly& p, const Integer& x0);

/// Exponent pair of a bivariate monomial X^x Y^y, y >= 0. Ordered by Y
/// first, so reverse iteration runs descending Y, then descending X.
struct Monomial {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse bivariate polynomial in X and Y with exact integer coefficients,
/// Laurent in X. Zero coefficients are never stored.
class XYPoly {
 public:
  using Terms = std::map<Monomial, Integer>;

  XYPoly() = default;
  XYPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  XYPoly(int constant) : XYPoly(Integer(constant)) {}  // NOLINT(google-explicit-constructor)
  /// Embeds a polynomial in X.
  static XYPoly from_x(const XPoly& p);
  /// P(X) * Y^j.
  static XYPoly from_x(const XPoly& p, int y_exp);
  static XYPoly monomial(const Integer& coeff, int x_exp, int y_exp);

  const Terms& terms() const { return terms_; }
  Integer coeff(int x_exp, int y_exp) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;
  Degree deg_x() const;
  Degree deg_y() const;
  /// Coefficient of Y^j as a polynomial in X.
  XPoly coeff_y(int j) const;

  XYPoly times_x_power(int k) const;
  XYPoly times_y_power(int k) const;

  XYPoly& operator+=(const XYPoly& o);
  XYPoly& operator-=(const XYPoly& o);
  friend XYPoly operator+(XYPoly a, const XYPoly& b) { return a += b; }
  friend XYPoly operator-(XYPoly a, const XYPoly& b) { return a -= b; }
  friend XYPoly operator*(const XYPoly& a, const XYPoly& b);
  friend XYPoly operator-(const XYPoly& a);
  friend bool operator==(const XYPoly&, const XYPoly&) = default;

  /// Descending Y, then descending X: "X^3*Y^2 - X^2*Y^2 + X".
  std::string to_string() const;
  std::string to_latex() const;

  void add_term(int x_exp, int y_exp, const Integer& coeff);

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const XYPoly& p);

XYPoly pow(const XYPoly& p, int e);
/// Y -> X^k Y: every X^a Y^b becomes X^(a + k b) Y^b.
XYPoly substitute_y_scaled(const XYPoly& p, int k);
/// P(X + c, Y).
XYPoly shift_x(const XYPoly& p, int c);
/// X exponent a of the result stands for (X - 1)^a.
XYPoly expand_in_x_minus_1(const XYPoly& p);
XYPoly from_x_minus_1_basis(const XYPoly& coeffs);
/// P(x0, Y) as a polynomial in Y (stored with exponents read as Y).
XPoly eval_x(const XYPoly& p, const Integer& x0);
/// P(X, y0) as a polynomial in X.
XPoly eval_y(const XYPoly& p, const Integer& y0);

/// c0 + c1 Y modulo Y^2, coefficients in Z[X, X^-1].
struct YSeries2 {
  XPoly c0;
  XPoly c1;

  static YSeries2 constant(const XPoly& c) { return {c, XPoly()}; }
  /// 1 - X^k Y.
  static YSeries2 one_minus_xk_y(int k) { return {XPoly(1), -XPoly::monomial(1, k)}; }

  /// s(X, X^k Y).
  YSeries2 substitute_y_scaled(int k) const { return {c0, c1.times_x_power(k)}; }
  /// Multiplicative inverse; requires c0 = +-1.
  YSeries2 inverse() const;

  YSeries2& operator+=(const YSeries2& o) { c0 += o.c0; c1 += o.c1; return *this; }
  YSeries2& operator-=(const YSeries2& o) { c0 -= o.c0; c1 -= o.c1; return *this; }
  friend YSeries2 operator+(YSeries2 a, const YSeries2& b) { return a += b; }
  friend YSeries2 operator-(YSeries2 a, const YSeries2& b) { return a -= b; }
  friend YSeries2 operator*(const YSeries2& a, const YSeries2& b) {
    return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0};
  }
  friend YSeries2 operator-(const YSeries2& a) { return {-a.c0, -a.c1}; }
  friend bool operator==(const YSeries2&, const YSeries2&) = default;
};

}  // namespace classpoly

#endif  // CLASSPOLY_POLY_HPP
