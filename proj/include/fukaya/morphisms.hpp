#pragma once

#include <complex>
#include <map>
#include <string>
#include <tuple>

#include "fukaya/objects.hpp"
#include "fukaya/rational.hpp"

namespace fukaya {

enum class HomKind { Zero, Transversal, Isomorphic };

// Shape of the morphism space hom(a, b) at tilt theta.
//
// Transversal pairs meet in |p_ab| points; every basis element carries the
// same degree, 0 when slope(a) < slope(b) and 1 otherwise. Isomorphic pairs
// have a one-dimensional space in each degree (a unit-like element and its
// pairing partner). Parallel-but-not-isomorphic pairs have no morphisms.
struct HomInfo {
  HomKind kind = HomKind::Zero;
  int degree = -1;     // transversal basis degree; -1 when not applicable
  long long dim = 0;   // number of basis elements of each occurring degree
  PairData pd;
};

HomInfo hom_info(const Lagrangian& a, const Lagrangian& b, const Rat& theta);

// A basis morphism. Transversal elements are indexed by a label
// j in [0, |p_ab|) enumerating the intersection points; elements of an
// isomorphic pair are flagged iso and exist in degrees 0 and 1.
struct BasisMorphism {
  Lagrangian src, dst;
  int degree = 0;
  bool iso = false;
  long long label = 0;

  std::string str() const;
  friend bool operator==(const BasisMorphism& x, const BasisMorphism& y) {
    return x.src == y.src && x.dst == y.dst && x.degree == y.degree &&
           x.iso == y.iso && x.label == y.label;
  }
};

BasisMorphism make_transversal(const Lagrangian& a, const Lagrangian& b,
                               long long label, const Rat& theta);
BasisMorphism make_iso(const Lagrangian& a, const Lagrangian& b, int degree);

// The intersection point on the torus underlying a transversal basis
// element, with coordinates reduced to [0, 1)^2. Exact.
Vec2 basis_point(const BasisMorphism& v);

// Position of a torus point along the cycle of `a` in units of the cycle
// parameter l (period 1), reduced to [0, 1). Throws unless the point lies
// on the cycle.
Rat cycle_position(const Lagrangian& a, const Vec2& torus_point);

// The basis element of hom(dst, src) pairing to 1 with v. For transversal v
// this is the element located at the same torus point.
BasisMorphism dual_basis(const BasisMorphism& v, const Rat& theta);

// The odd symmetric pairing on basis elements: 1 when y is dual to x
// (in particular |x| + |y| == 1), else 0.
int eta_pair(const BasisMorphism& x, const BasisMorphism& y, const Rat& theta);

// A finite linear combination of basis morphisms inside one hom space.
struct Element {
  Lagrangian src, dst;
  // key: (degree, iso flag, label)
  std::map<std::tuple<int, bool, long long>, std::complex<double>> coef;

  void add(const BasisMorphism& v, std::complex<double> c);
  double norm() const;                    // max |coefficient|
  Element& operator*=(std::complex<double> s);
  Element& operator+=(const Element& other);
  std::string str() const;
};

}  // namespace fukaya
