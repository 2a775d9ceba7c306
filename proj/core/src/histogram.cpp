#include "classpoly/histogram.hpp"

#include <stdexcept>

namespace classpoly {

void ClassHistogram::add(const Integer& size, const Integer& count) {
  if (size <= 0 || count < 0) throw std::invalid_argument("ClassHistogram: bad entry");
  if (count == 0) return;
  entries_[size] += count;
}

Integer ClassHistogram::count(const Integer& size) const {
  auto it = entries_.find(size);
  return it == entries_.end() ? Integer(0) : it->second;
}

Integer ClassHistogram::mass() const {
  Integer total = 0;
  for (const auto& [size, count] : entries_) total += size * count;
  return total;
}

Integer ClassHistogram::class_number() const {
  Integer total = 0;
  for (const auto& [size, count] : entries_) total += count;
  return total;
}

std::ostream& operator<<(std::ostream& os, const ClassHistogram& h) {
  os << '{';
  bool first = true;
  for (const auto& [size, count] : h.entries()) {
    if (!first) os << ", ";
    os << size << ':' << count;
    first = false;
  }
  return os << '}';
}

ClassHistogram dirichlet_convolution(const ClassHistogram& a, const ClassHistogram& b) {
  ClassHistogram out;
  for (const auto& [sa, ca] : a.entries())
    for (const auto& [sb, cb] : b.entries()) out.add(sa * sb, ca * cb);
  return out;
}

DirichletPoly class_zeta(const ClassHistogram& h) {
  DirichletPoly z;
  for (const auto& [size, count] : h.entries()) z.terms.emplace_back(size, count);
  return z;
}

ClassHistogram histogram_from_class_size_polynomial(const XYPoly& F, int q) {
  ClassHistogram h;
  const XPoly at_q = eval_x(F, q);
  for (const auto& [i, count] : at_q.terms()) {
    if (count < 0) throw std::domain_error("class-size polynomial has a negative value at q");
    h.add(ipow(Integer(q), i), count);
  }
  return h;
}

}  // namespace classpoly
