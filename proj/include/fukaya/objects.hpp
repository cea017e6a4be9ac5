#pragma once

#include <string>

#include "fukaya/rational.hpp"

namespace fukaya {

// An object of the category: an affine line q*y = p*x + alpha on the torus
// R^2/Z^2 together with a flat connection parameter beta along its cycle.
// (q, p) is the primitive tangent direction, normalized so q >= 0 and
// (q, p) = (0, 1) for vertical... q == 0 forces p == 1. The cycle is
// parametrized as W(l) = W(0) + l * (q, p), so l has period exactly 1.
struct Lagrangian {
  long long q = 1;
  long long p = 0;
  Rat alpha{0};
  Rat beta{0};

  // Throws InvalidInput unless (q, p) is primitive and normalized.
  void validate() const;

  // Reduces an arbitrary nonzero direction to the normalized form, flipping
  // orientation if needed. A flip reverses the cycle parameter, so alpha and
  // beta change sign with it.
  static Lagrangian normalized(long long q, long long p, Rat alpha, Rat beta);

  friend bool operator==(const Lagrangian& a, const Lagrangian& b) {
    return a.q == b.q && a.p == b.p && a.alpha == b.alpha && a.beta == b.beta;
  }

  std::string str() const;
};

// True when a and b have the same slope and their alpha and beta offsets
// differ by integers: such objects are isomorphic and their hom spaces are
// spanned by a unit-like pair rather than by intersection points.
bool is_isomorphic(const Lagrangian& a, const Lagrangian& b);

// Slope comparison in the tilted coordinate x^theta = x + theta * y.
// The tilted direction of (q, p) is (q + p*theta, p); slopes are compared as
// angles mod pi in the window (-pi/2, pi/2], the vertical direction sitting
// at the top. Returns -1, 0, +1. Exact.
int slope_compare(const Lagrangian& a, const Lagrangian& b, const Rat& theta);

// Unimodular integer 2x2 matrix [[a11, a12], [a21, a22]].
struct SL2Z {
  long long a11 = 1, a12 = 0, a21 = 0, a22 = 1;

  long long det() const { return a11 * a22 - a12 * a21; }
  SL2Z inverse() const { return {a22, -a12, -a21, a11}; }
  friend SL2Z operator*(const SL2Z& x, const SL2Z& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  friend bool operator==(const SL2Z& x, const SL2Z& y) {
    return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
  }
};

// Canonical completion of the primitive column (q, p) to a determinant-one
// matrix [[q, s], [p, r]]: among all valid (s, r) the one minimizing |s|,
// ties broken toward s >= 0; for q == 0 the completion is [[0, -1], [1, 0]].
SL2Z complete_to_sl2z(const Lagrangian& a);

// Relative data of an ordered pair: M_ab = M_a^{-1} * M_b, recorded as
// q_ab = M_ab[0][0], s_ab = M_ab[0][1], p_ab = M_ab[1][0], r_ab = M_ab[1][1].
// p_ab = q_a p_b - p_a q_b is the signed intersection number.
struct PairData {
  long long q_ab = 0, s_ab = 0, p_ab = 0, r_ab = 0;
};
PairData pair_data(const Lagrangian& a, const Lagrangian& b);

// Image of an object under the linear torus automorphism g (acting on column
// vectors (x, y)): direction maps to g * (q, p), alpha and beta ride along,
// with a normalization flip when the image direction leaves the q >= 0 cone.
Lagrangian sl2z_apply(const SL2Z& g, const Lagrangian& a);

// The tilt parameter matching g: comparisons of g-transformed objects under
// the new tilt reproduce comparisons of the originals under theta, provided
// no slope crosses the vertical seam of the window.
Rat sl2z_apply_theta(const SL2Z& g, const Rat& theta);

}  // namespace fukaya
