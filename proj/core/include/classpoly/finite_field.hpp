#ifndef CLASSPOLY_FINITE_FIELD_HPP
#define CLASSPOLY_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace classpoly {

/// GF(q) for q a prime below 64 or q in {4, 8, 9}. Elements are 0..q-1;
/// for q = p^e with e > 1 the element sum c_i p^i stands for sum c_i t^i
/// modulo the fixed irreducible polynomial returned by modulus():
///   GF(4) = F2[t]/(t^2+t+1), GF(8) = F2[t]/(t^3+t+1), GF(9) = F3[t]/(t^2+1).
class FiniteField {
 public:
  /// Throws std::invalid_argument for unsupported q.
  static FiniteField make(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }
  /// Coefficients of the modulus, constant term first; {} for prime fields.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return e_ == 1 ? (a + b) % q_ : add_[a * q_ + b]; }
  int neg(int a) const { return e_ == 1 ? (q_ - a) % q_ : neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return e_ == 1 ? (a * b) % q_ : mul_[a * q_ + b]; }
  /// Throws std::domain_error for 0.
  int inv(int a) const;

  /// Exhaustive check of the field axioms on the element table.
  bool check_axioms() const;

 private:
  FiniteField() = default;
  int q_ = 0;
  int p_ = 0;
  int e_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

}  // namespace classpoly

#endif  // CLASSPOLY_FINITE_FIELD_HPP
