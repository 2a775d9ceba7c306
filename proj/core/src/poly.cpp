#include "classpoly/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace classpoly {

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer ipow(const Integer& base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  Integer r = 1;
  Integer b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

int Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial is -infinity");
  return value_;
}

std::ostream& operator<<(std::ostream& os, Degree d) {
  if (!d.is_finite()) return os << "-inf";
  return os << d.value();
}

namespace {

// Appends "c*m" to a signed sum; mono is "" for a constant.
void append_term(std::ostringstream& os, bool first, const Integer& c, const std::string& mono, bool latex) {
  const bool neg = c < 0;
  const Integer a = neg ? Integer(-c) : c;
  if (first) {
    if (neg) os << '-';
  } else {
    os << (neg ? " - " : " + ");
  }
  if (mono.empty()) {
    os << a;
  } else if (a == 1) {
    os << mono;
  } else {
    os << a << (latex ? " " : "*") << mono;
  }
}

std::string power(char var, int e, bool latex) {
  if (e == 0) return "";
  std::string s(1, var);
  if (e != 1) s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  return s;
}

}  // namespace

// XPoly

XPoly::XPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

XPoly XPoly::monomial(const Integer& coeff, int exp) {
  XPoly p;
  p.add_term(exp, coeff);
  return p;
}

void XPoly::add_term(int exp, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer XPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool XPoly::is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

Degree XPoly::degree() const { return terms_.empty() ? Degree::neg_inf() : Degree(terms_.rbegin()->first); }

Degree XPoly::low_degree() const { return terms_.empty() ? Degree::neg_inf() : Degree(terms_.begin()->first); }

XPoly XPoly::times_x_power(int k) const {
  XPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  XPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

XPoly& XPoly::operator*=(const XPoly& o) { return *this = *this * o; }

XPoly operator-(const XPoly& a) {
  XPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string XPoly::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(os, first, it->second, power(var, it->first, false), false);
    first = false;
  }
  return os.str();
}

std::string XPoly::to_latex(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(os, first, it->second, power(var, it->first, true), true);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << p.to_string(); }

XPoly pow(const XPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  XPoly r(1);
  XPoly b = p;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

XPoly x_plus_c_pow(int c, int n) {
  XPoly out;
  for (int k = 0; k <= n; ++k) out.add_term(k, binomial(n, k) * ipow(Integer(c), n - k));
  return out;
}

XPoly shift_x(const XPoly& p, int c) {
  if (!p.is_polynomial()) throw std::invalid_argument("shift_x: Laurent polynomial");
  XPoly out;
  for (const auto& [e, coeff] : p.terms()) {
    Integer cpow = 1;  // c^(e-k), built from k = e downwards
    for (int k = e; k >= 0; --k) {
      out.add_term(k, coeff * binomial(e, k) * cpow);
      cpow *= c;
    }
  }
  return out;
}

XPoly expand_in_x_minus_1(const XPoly& p) {
  if (!p.is_polynomial()) throw std::invalid_argument("expand_in_x_minus_1: Laurent polynomial");
  return shift_x(p, 1);
}

XPoly from_x_minus_1_basis(const XPoly& coeffs) { return shift_x(coeffs, -1); }

Integer eval(const XPoly& p, const Integer& x0) {
  if (!p.is_polynomial() && x0 != 1 && x0 != -1) {
    throw std::invalid_argument("eval: Laurent polynomial at a point other than +-1");
  }
  Integer sum = 0;
  for (const auto& [e, c] : p.terms()) {
    const int k = e < 0 ? -e : e;
    sum += c * ipow(x0, k);  // x0^-k = x0^k for x0 = +-1
  }
  return sum;
}

// XYPoly

XYPoly::XYPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

XYPoly XYPoly::from_x(const XPoly& p) { return from_x(p, 0); }

XYPoly XYPoly::from_x(const XPoly& p, int y_exp) {
  XYPoly out;
  for (const auto& [e, c] : p.terms()) out.terms_.emplace(Monomial{e, y_exp}, c);
  return out;
}

XYPoly XYPoly::monomial(const Integer& coeff, int x_exp, int y_exp) {
  XYPoly p;
  p.add_term(x_exp, y_exp, coeff);
  return p;
}

void XYPoly::add_term(int x_exp, int y_exp, const Integer& coeff) {
  if (y_exp < 0) throw std::invalid_argument("XYPoly: negative Y exponent");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{x_exp, y_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer XYPoly::coeff(int x_exp, int y_exp) const {
  auto it = terms_.find(Monomial{x_exp, y_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

bool XYPoly::is_polynomial() const {
  for (const auto& [m, c] : terms_)
    if (m.x < 0) return false;
  return true;
}

Degree XYPoly::deg_x() const {
  if (terms_.empty()) return Degree::neg_inf();
  int d = terms_.begin()->first.x;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x);
  return d;
}

Degree XYPoly::deg_y() const { return terms_.empty() ? Degree::neg_inf() : Degree(terms_.rbegin()->first.y); }

XPoly XYPoly::coeff_y(int j) const {
  XPoly out;
  for (auto it = terms_.lower_bound(Monomial{std::numeric_limits<int>::min(), j});
       it != terms_.end() && it->first.y == j; ++it)
    out.add_term(it->first.x, it->second);
  return out;
}

XYPoly XYPoly::times_x_power(int k) const {
  XYPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Monomial{m.x + k, m.y}, c);
  return out;
}

XYPoly XYPoly::times_y_power(int k) const {
  XYPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m.x, m.y + k, c);
  return out;
}

XYPoly& XYPoly::operator+=(const XYPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, c);
  return *this;
}

XYPoly& XYPoly::operator-=(const XYPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, -c);
  return *this;
}

XYPoly operator*(const XYPoly& a, const XYPoly& b) {
  XYPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.x + mb.x, ma.y + mb.y, ca * cb);
  return out;
}

XYPoly operator-(const XYPoly& a) {
  XYPoly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string XYPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono = power('X', it->first.x, false);
    const std::string ypart = power('Y', it->first.y, false);
    if (!ypart.empty()) mono = mono.empty() ? ypart : mono + "*" + ypart;
    append_term(os, first, it->second, mono, false);
    first = false;
  }
  return os.str();
}

std::string XYPoly::to_latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono = power('X', it->first.x, true);
    const std::string ypart = power('Y', it->first.y, true);
    if (!ypart.empty()) mono = mono.empty() ? ypart : mono + " " + ypart;
    append_term(os, first, it->second, mono, true);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const XYPoly& p) { return os << p.to_string(); }

XYPoly pow(const XYPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  XYPoly r(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

XYPoly substitute_y_scaled(const XYPoly& p, int k) {
  XYPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m.x + k * m.y, m.y, c);
  return out;
}

XYPoly shift_x(const XYPoly& p, int c) {
  if (!p.is_polynomial()) throw std::invalid_argument("shift_x: Laurent polynomial");
  XYPoly out;
  const auto dy = p.deg_y();
  if (!dy.is_finite()) return out;
  for (int j = 0; j <= dy.value(); ++j) out += XYPoly::from_x(shift_x(p.coeff_y(j), c), j);
  return out;
}

XYPoly expand_in_x_minus_1(const XYPoly& p) {
  if (!p.is_polynomial()) throw std::invalid_argument("expand_in_x_minus_1: Laurent polynomial");
  return shift_x(p, 1);
}

XYPoly from_x_minus_1_basis(const XYPoly& coeffs) { return shift_x(coeffs, -1); }

XPoly eval_x(const XYPoly& p, const Integer& x0) {
  XPoly out;
  const auto dy = p.deg_y();
  if (!dy.is_finite()) return out;
  for (int j = 0; j <= dy.value(); ++j) out.add_term(j, eval(p.coeff_y(j), x0));
  return out;
}

XPoly eval_y(const XYPoly& p, const Integer& y0) {
  XPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m.x, c * ipow(y0, m.y));
  return out;
}

YSeries2 YSeries2::inverse() const {
  if (c0 != XPoly(1) && c0 != XPoly(-1)) {
    throw std::domain_error("YSeries2::inverse: constant term must be +-1");
  }
  // (c0 + c1 Y)^-1 = c0 - c1 Y  when c0^2 = 1
  return {c0, -c1};
}

}  // namespace classpoly
