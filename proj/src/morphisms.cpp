#include "fukaya/morphisms.hpp"

#include <cmath>
#include <cstdlib>

#include "fukaya/errors.hpp"

namespace fukaya {

HomInfo hom_info(const Lagrangian& a, const Lagrangian& b, const Rat& theta) {
  a.validate();
  b.validate();
  HomInfo info;
  info.pd = pair_data(a, b);
  int cmp = slope_compare(a, b, theta);
  if (cmp == 0) {
    if (is_isomorphic(a, b)) {
      info.kind = HomKind::Isomorphic;
      info.dim = 1;
    } else {
      info.kind = HomKind::Zero;
    }
    return info;
  }
  info.kind = HomKind::Transversal;
  info.degree = cmp < 0 ? 0 : 1;
  info.dim = std::llabs(info.pd.p_ab);
  return info;
}

BasisMorphism make_transversal(const Lagrangian& a, const Lagrangian& b,
                               long long label, const Rat& theta) {
  HomInfo info = hom_info(a, b, theta);
  if (info.kind != HomKind::Transversal)
    throw InvalidInput("hom(" + a.str() + ", " + b.str() + ") is not transversal");
  return BasisMorphism{a, b, info.degree, false, mod_floor(label, info.dim)};
}

BasisMorphism make_iso(const Lagrangian& a, const Lagrangian& b, int degree) {
  if (!is_isomorphic(a, b))
    throw InvalidInput("hom(" + a.str() + ", " + b.str() + ") is not an isomorphic pair");
  if (degree != 0 && degree != 1) throw InvalidInput("degree must be 0 or 1");
  return BasisMorphism{a, b, degree, true, 0};
}

std::string BasisMorphism::str() const {
  if (iso) return std::string(degree == 0 ? "u0[" : "u1[") + src.str() + "->" + dst.str() + "]";
  return "v" + std::to_string(label) + "^" + std::to_string(degree) + "[" + src.str() + "->" +
         dst.str() + "]";
}

Vec2 basis_point(const BasisMorphism& v) {
  if (v.iso) throw UnsupportedPattern("unit-like morphisms carry no intersection point");
  const Lagrangian& a = v.src;
  const Lagrangian& b = v.dst;
  PairData pd = pair_data(a, b);
  if (pd.p_ab == 0) throw std::logic_error("transversal pair with p_ab == 0");
  Rat j{v.label};
  Rat den{pd.p_ab};
  Rat x = (Rat(b.q) * a.alpha - Rat(a.q) * b.alpha + Rat(a.q) * Rat(pd.q_ab) * j) / den;
  Rat y = (Rat(b.p) * a.alpha - Rat(a.p) * b.alpha + Rat(a.p) * Rat(pd.q_ab) * j) / den;
  return Vec2{x, y}.mod1();
}

namespace {

// A fixed point of the cycle of `a`, used as origin for the parameter l.
Vec2 cycle_origin(const Lagrangian& a) {
  if (a.q != 0) return Vec2{Rat(0), a.alpha / Rat(a.q)};
  return Vec2{-a.alpha, Rat(0)};  // q == 0, p == 1: the line x = -alpha
}

}  // namespace

Rat cycle_position(const Lagrangian& a, const Vec2& torus_point) {
  Vec2 c = torus_point - cycle_origin(a);
  Rat w = Rat(a.p) * c.x - Rat(a.q) * c.y;
  if (!w.is_integer())
    throw InvalidInput("point (" + torus_point.x.str() + "," + torus_point.y.str() +
                       ") does not lie on the cycle of " + a.str());
  long long wi = static_cast<long long>(w.num());
  ExtGcd e = ext_gcd(a.q, a.p);  // e.u * q + e.v * p == 1
  // Solve q*k - p*j == w via (k, j) = (u*w, -v*w).
  long long k = e.u * wi;
  long long j = -e.v * wi;
  Rat l = a.q != 0 ? (c.x + Rat(j)) / Rat(a.q) : (c.y + Rat(k)) / Rat(a.p);
  return l.frac();
}

BasisMorphism dual_basis(const BasisMorphism& v, const Rat& theta) {
  if (v.iso) return BasisMorphism{v.dst, v.src, 1 - v.degree, true, 0};
  PairData pd = pair_data(v.src, v.dst);
  long long dim = std::llabs(pd.p_ab);
  BasisMorphism d = make_transversal(v.dst, v.src, mod_floor(-pd.q_ab * v.label, dim), theta);
  if (basis_point(d) != basis_point(v))
    throw std::logic_error("dual label does not share the intersection point");
  return d;
}

int eta_pair(const BasisMorphism& x, const BasisMorphism& y, const Rat& theta) {
  if (!(x.dst == y.src) || !(y.dst == x.src)) return 0;
  if (x.degree + y.degree != 1) return 0;
  if (x.iso != y.iso) return 0;
  if (x.iso) return 1;
  return dual_basis(x, theta).label == y.label ? 1 : 0;
}

void Element::add(const BasisMorphism& v, std::complex<double> c) {
  if (!(v.src == src) || !(v.dst == dst))
    throw std::logic_error("element term lies in a different hom space");
  coef[{v.degree, v.iso, v.label}] += c;
}

double Element::norm() const {
  double m = 0.0;
  for (const auto& [k, c] : coef) m = std::max(m, std::abs(c));
  return m;
}

Element& Element::operator*=(std::complex<double> s) {
  for (auto& [k, c] : coef) c *= s;
  return *this;
}

Element& Element::operator+=(const Element& other) {
  if (!(other.src == src) || !(other.dst == dst))
    throw std::logic_error("cannot add elements of different hom spaces");
  for (const auto& [k, c] : other.coef) coef[k] += c;
  return *this;
}

std::string Element::str() const {
  std::string s;
  for (const auto& [k, c] : coef) {
    const auto& [deg, iso, label] = k;
    s += (s.empty() ? "" : " + ") + std::to_string(c.real()) + (c.imag() < 0 ? "-" : "+") +
         std::to_string(std::abs(c.imag())) + "i * " +
         (iso ? (deg == 0 ? std::string("u0") : std::string("u1"))
              : "v" + std::to_string(label) + "^" + std::to_string(deg));
  }
  return s.empty() ? "0" : s;
}

}  // namespace fukaya
