#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fukaya/a_infinity.hpp"
#include "fukaya/config.hpp"
#include "fukaya/morphisms.hpp"
#include "fukaya/objects.hpp"

namespace fukaya {

struct ShiftedObject {
  Lagrangian obj;
  int shift = 0;
};

// A finite one-sided twisted complex: formal sum of shifted objects with a
// strictly upper-triangular connection. connection[i][j] is a combination
// in hom(obj_i, obj_j) of plain degree 1 - shift_i + shift_j.
struct TwistedComplex {
  std::vector<ShiftedObject> summands;
  std::vector<std::vector<Element>> connection;

  int size() const { return static_cast<int>(summands.size()); }
  void validate(const Rat& theta) const;

  // Single summand, zero connection.
  static TwistedComplex direct(const Lagrangian& a, int shift = 0);
};

// Matrix morphism between twisted complexes. `degree` is the grading of the
// morphism as a whole; entry (i, j) then lives in the plain hom space
// hom(src_i, dst_j) in degree  degree - shift(src_i) + shift(dst_j).
// Rows index source summands, columns target summands.
struct TwMorphism {
  TwistedComplex src, dst;
  int degree = 0;
  std::vector<std::vector<Element>> entry;

  void validate(const Rat& theta) const;
  double max_norm() const;  // max over entries of the coefficient sup-norm

  static TwMorphism zero(const TwistedComplex& from, const TwistedComplex& to, int degree);
};

// Residual of the quadratic closure condition on the connection: the max
// coefficient norm of  sum_k products of k connection entries along strictly
// increasing index paths (finite by triangularity).
double mc_residual(const TwistedComplex& tc, const EngineConfig& cfg);

// n-ary product on the twisted category: sums products of the chain entries
// with arbitrarily many connection insertions between consecutive arguments.
// Products of the underlying morphisms are taken in the degree-shifted
// normalization, with the global sign (-1)^{(number of arguments) * shift of
// the leading summand}. Inner endpoints must agree summand-by-summand.
TwMorphism tw_product(const std::vector<TwMorphism>& chain, const EngineConfig& cfg);

// The differential of the twisted category (the n = 1 product, nontrivial
// only through connection insertions since the underlying category has no
// differential).
TwMorphism tw_differential(const TwMorphism& g, const EngineConfig& cfg);

// Mapping cone of a closed morphism w given with the summands of its source
// unshifted and entries one degree up (i.e. w is degree 0 out of the
// shifted-down source). Throws NotClosed when the differential residual of
// w exceeds tol.
TwistedComplex cone(const TwMorphism& w, const EngineConfig& cfg);

struct IsoCertificate {
  bool accepted = false;
  std::complex<double> scalar{0.0, 0.0};
  double closed_residual = 0.0;    // max differential residual of g1, g2
  double identity_deviation = 0.0; // max deviation of the two products from
                                   // a common scalar multiple of identity
  std::string reason;
};

// Tests whether degree-0 morphisms g1: X -> Y, g2: Y -> X exhibit X and Y as
// isomorphic in the zeroth-cohomology category: both must be closed and both
// round trips must be the same nonzero scalar multiple of the identity
// connection-wise. The scalar is reported in raw unit-basis coefficients of
// the degree-shifted products.
IsoCertificate check_isomorphism_pair(const TwMorphism& g1, const TwMorphism& g2,
                                      const EngineConfig& cfg);

// The standard cone scenario: a = (1,0,0,0), c = (1,1,0,0), the cone over
// the degree-1 generator of hom(c, a), and the canonical degree-0 generator
// pair against the candidate object b = (2,1,alpha,beta).
struct ConeScenario {
  Lagrangian a, b, c;
  TwistedComplex cone_ca;
  TwMorphism g1;  // (b,0) -> cone
  TwMorphism g2;  // cone -> (b,0)
};

ConeScenario build_cone_scenario(const Rat& alpha, const Rat& beta, const EngineConfig& cfg);

}  // namespace fukaya
