#include "fukaya/objects.hpp"

#include <cstdlib>
#include <numeric>

#include "fukaya/errors.hpp"

namespace fukaya {

void Lagrangian::validate() const {
  long long g = std::gcd(std::llabs(q), std::llabs(p));
  if (g != 1) throw InvalidInput("object direction (" + std::to_string(q) + "," + std::to_string(p) + ") is not primitive");
  if (q < 0) throw InvalidInput("object direction must have q >= 0");
  if (q == 0 && p != 1) throw InvalidInput("horizontal-degenerate direction must be (0, 1)");
}

Lagrangian Lagrangian::normalized(long long q, long long p, Rat alpha, Rat beta) {
  if (q == 0 && p == 0) throw InvalidInput("zero direction");
  long long g = std::gcd(std::llabs(q), std::llabs(p));
  if (g != 1) throw InvalidInput("object direction is not primitive");
  if (q < 0 || (q == 0 && p < 0)) {
    q = -q;
    p = -p;
    alpha = -alpha;
    beta = -beta;
  }
  Lagrangian a{q, p, alpha, beta};
  a.validate();
  return a;
}

std::string Lagrangian::str() const {
  return "(" + std::to_string(q) + "," + std::to_string(p) + ";" + alpha.str() + "," + beta.str() + ")";
}

bool is_isomorphic(const Lagrangian& a, const Lagrangian& b) {
  return a.q == b.q && a.p == b.p && (a.alpha - b.alpha).is_integer() &&
         (a.beta - b.beta).is_integer();
}

int slope_compare(const Lagrangian& a, const Lagrangian& b, const Rat& theta) {
  // Tilted slope key of (q, p): the ratio p / (q + p*theta), with the
  // direction tilting to vertical treated as +infinity. With q >= 0 the
  // key determines the angle mod pi in (-pi/2, pi/2] monotonically.
  Rat wa = Rat(a.q) + Rat(a.p) * theta;
  Rat wb = Rat(b.q) + Rat(b.p) * theta;
  bool va = wa.is_zero();
  bool vb = wb.is_zero();
  if (va && vb) return 0;
  if (va) return 1;
  if (vb) return -1;
  Rat ka = Rat(a.p) / wa;
  Rat kb = Rat(b.p) / wb;
  if (ka == kb) return 0;
  return ka < kb ? -1 : 1;
}

SL2Z complete_to_sl2z(const Lagrangian& a) {
  if (a.q == 0) return SL2Z{0, -1, 1, 0};
  // Need s with s * p == -1 (mod q); r = (1 + s p) / q is then integral.
  long long q = a.q;
  long long pm = mod_floor(a.p, q);
  ExtGcd e = ext_gcd(pm, q);  // e.u * pm == 1 (mod q) since gcd == 1
  long long s0 = mod_floor(-e.u, q);
  long long s = s0;
  long long s1 = s0 - q;
  if (std::llabs(s1) < std::llabs(s0)) s = s1;
  // (|s1| == |s0| can only happen for q even with s0 == q/2; keep s0 >= 0.)
  long long r = (1 + s * a.p) / q;
  SL2Z m{q, s, a.p, r};
  if (m.det() != 1 || (1 + s * a.p) % q != 0) throw std::logic_error("sl2z completion failed");
  return m;
}

PairData pair_data(const Lagrangian& a, const Lagrangian& b) {
  SL2Z ma = complete_to_sl2z(a);
  SL2Z mb = complete_to_sl2z(b);
  SL2Z mab = ma.inverse() * mb;
  return PairData{mab.a11, mab.a12, mab.a21, mab.a22};
}

Lagrangian sl2z_apply(const SL2Z& g, const Lagrangian& a) {
  if (g.det() != 1) throw InvalidInput("torus automorphism must have determinant one");
  long long q2 = g.a11 * a.q + g.a12 * a.p;
  long long p2 = g.a21 * a.q + g.a22 * a.p;
  return Lagrangian::normalized(q2, p2, a.alpha, a.beta);
}

Rat sl2z_apply_theta(const SL2Z& g, const Rat& theta) {
  Rat den = Rat(g.a22) - theta * Rat(g.a21);
  if (den.is_zero()) throw UnsupportedPattern("tilt transform degenerates for this automorphism");
  return (theta * Rat(g.a11) - Rat(g.a12)) / den;
}

}  // namespace fukaya
