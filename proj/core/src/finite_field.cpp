#include "classpoly/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace classpoly {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> digits(int a, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i, a /= p) d[i] = a % p;
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

// Product of two residues in F_p[t]/(modulus), modulus monic of degree e.
int poly_mulmod(int a, int b, int p, int e, const std::vector<int>& modulus) {
  const auto da = digits(a, p, e);
  const auto db = digits(b, p, e);
  std::vector<int> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int k = 2 * e - 2; k >= e; --k) {
    const int c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    // t^k = t^(k-e) * t^e and t^e = -(modulus without its leading term)
    for (int i = 0; i < e; ++i) prod[k - e + i] = ((prod[k - e + i] - c * modulus[i]) % p + p) % p;
  }
  prod.resize(e);
  return undigits(prod, p);
}

}  // namespace

FiniteField FiniteField::make(int q) {
  FiniteField f;
  f.q_ = q;
  if (q < 64 && is_prime(q)) {
    f.p_ = q;
    f.e_ = 1;
  } else if (q == 4) {
    f.p_ = 2;
    f.e_ = 2;
    f.modulus_ = {1, 1, 1};
  } else if (q == 8) {
    f.p_ = 2;
    f.e_ = 3;
    f.modulus_ = {1, 1, 0, 1};
  } else if (q == 9) {
    f.p_ = 3;
    f.e_ = 2;
    f.modulus_ = {1, 0, 1};
  } else {
    throw std::invalid_argument("unsupported field order " + std::to_string(q) +
                                " (primes below 64 and 4, 8, 9 are supported)");
  }

  const auto size = static_cast<std::size_t>(q);
  f.inv_.assign(size, 0);
  f.neg_.assign(size, 0);
  if (f.e_ > 1) {
    f.add_.resize(size * size);
    f.mul_.resize(size * size);
    for (int a = 0; a < q; ++a) {
      const auto da = digits(a, f.p_, f.e_);
      for (int b = 0; b < q; ++b) {
        const auto db = digits(b, f.p_, f.e_);
        std::vector<int> s(f.e_);
        for (int i = 0; i < f.e_; ++i) s[i] = (da[i] + db[i]) % f.p_;
        f.add_[a * q + b] = static_cast<std::uint8_t>(undigits(s, f.p_));
        f.mul_[a * q + b] = static_cast<std::uint8_t>(poly_mulmod(a, b, f.p_, f.e_, f.modulus_));
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (f.add(a, b) == 0) f.neg_[a] = static_cast<std::uint8_t>(b);
      if (a != 0 && f.mul(a, b) == 1) f.inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
  if (q <= 9 && !f.check_axioms()) throw std::logic_error("field tables for q=" + std::to_string(q) + " are not a field");
  return f;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

bool FiniteField::check_axioms() const {
  const int q = q_;
  for (int a = 0; a < q; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || add(a, neg(a)) != 0) return false;
    if (a != 0 && mul(a, inv_[a]) != 1) return false;
    for (int b = 0; b < q; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
      for (int c = 0; c < q; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace classpoly
