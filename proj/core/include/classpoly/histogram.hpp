#ifndef CLASSPOLY_HISTOGRAM_HPP
#define CLASSPOLY_HISTOGRAM_HPP

#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "classpoly/poly.hpp"

namespace classpoly {

/// Number of conjugacy classes of each size in a finite group.
class ClassHistogram {
 public:
  using Entries = std::map<Integer, Integer>;  // class size -> count

  void add(const Integer& size, const Integer& count);
  const Entries& entries() const { return entries_; }
  Integer count(const Integer& size) const;
  /// Sum of size * count, i.e. the group order.
  Integer mass() const;
  /// Number of classes.
  Integer class_number() const;
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const ClassHistogram&, const ClassHistogram&) = default;

 private:
  Entries entries_;
};

std::ostream& operator<<(std::ostream& os, const ClassHistogram& h);

/// Class histogram of a direct product: sizes multiply, counts multiply.
ClassHistogram dirichlet_convolution(const ClassHistogram& a, const ClassHistogram& b);

/// Sum of cc_e e^{-s}, terms in strictly increasing e.
struct DirichletPoly {
  std::vector<std::pair<Integer, Integer>> terms;
  friend bool operator==(const DirichletPoly&, const DirichletPoly&) = default;
};

DirichletPoly class_zeta(const ClassHistogram& h);

/// Histogram read off F(q, Y): the coefficient of Y^i counts classes of size q^i.
ClassHistogram histogram_from_class_size_polynomial(const XYPoly& F, int q);

}  // namespace classpoly

#endif  // CLASSPOLY_HISTOGRAM_HPP
