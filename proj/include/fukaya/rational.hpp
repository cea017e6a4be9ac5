#pragma once

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fukaya {

using int128 = __int128;

// Exact rational arithmetic on 128-bit integers.
//
// Every operation reduces by gcd, so numerators and denominators stay near
// the scale of the input data (small fractions, or dyadic rationals coming
// from doubles with ~2^52 denominators). All geometric predicates in the
// library (convexity, collinearity, lattice membership, vertex ordering)
// go through this type so that classification of lattice chains is exact.
// Additions and multiplications are overflow-checked and throw rather than
// silently wrapping.

namespace detail {

inline int128 iabs(int128 v) { return v < 0 ? -v : v; }

inline int128 igcd(int128 a, int128 b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: add overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: mul overflow");
  return r;
}

inline std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace detail

class Rat {
 public:
  constexpr Rat() = default;
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(int n) : num_(n), den_(1) {}        // NOLINT
  Rat(int128 n, int128 d) : num_(n), den_(d) { normalize(); }

  // Exact conversion: every finite double is a dyadic rational.
  static Rat from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational: non-finite double");
    if (x == 0.0) return Rat(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // 53 mantissa bits always fit.
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rat r(mant, 1);
    while (exp > 0) {
      r = r * Rat(2);
      --exp;
    }
    while (exp < 0) {
      r = r / Rat(2);
      ++exp;
    }
    return r;
  }

  // Parses "3", "-3/4", "0.125" (decimal fractions are exact).
  static Rat parse(std::string_view s);

  int128 num() const { return num_; }
  int128 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    int128 g = detail::igcd(a.den_, b.den_);
    int128 ad = a.den_ / g;
    int128 bd = b.den_ / g;
    int128 n = detail::checked_add(detail::checked_mul(a.num_, bd),
                                   detail::checked_mul(b.num_, ad));
    int128 d = detail::checked_mul(a.den_, bd);
    return Rat(n, d);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    int128 g1 = detail::igcd(a.num_, b.den_);
    int128 g2 = detail::igcd(b.num_, a.den_);
    int128 n = detail::checked_mul(a.num_ / g1, b.num_ / g2);
    int128 d = detail::checked_mul(a.den_ / g2, b.den_ / g1);
    return Rat(n, d);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational: division by zero");
    Rat inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    if (inv.den_ < 0) {
      inv.num_ = -inv.num_;
      inv.den_ = -inv.den_;
    }
    return a * inv;
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return detail::checked_mul(a.num_, b.den_) < detail::checked_mul(b.num_, a.den_);
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  // Largest integer <= value.
  int128 floor() const {
    int128 q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  // Fractional part in [0, 1).
  Rat frac() const { return *this - Rat(floor(), 1); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    std::string s = detail::int128_to_string(num_);
    if (den_ != 1) {
      s.push_back('/');
      s += detail::int128_to_string(den_);
    }
    return s;
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    int128 g = detail::igcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  int128 num_ = 0;
  int128 den_ = 1;
};

inline Rat Rat::parse(std::string_view s) {
  auto fail = [&] { throw std::invalid_argument("rational: cannot parse '" + std::string(s) + "'"); };
  if (s.empty()) fail();
  size_t slash = s.find('/');
  auto parse_int = [&](std::string_view t) -> int128 {
    if (t.empty()) fail();
    bool neg = false;
    size_t i = 0;
    if (t[0] == '+' || t[0] == '-') {
      neg = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) fail();
    int128 v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') fail();
      v = detail::checked_add(detail::checked_mul(v, 10), t[i] - '0');
    }
    return neg ? -v : v;
  };
  if (slash != std::string_view::npos) {
    return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }
  size_t dot = s.find('.');
  if (dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    int128 i = ip.empty() || ip == "-" || ip == "+" ? 0 : parse_int(ip);
    int128 scale = 1;
    int128 f = 0;
    for (char c : fp) {
      if (c < '0' || c > '9') fail();
      f = detail::checked_add(detail::checked_mul(f, 10), c - '0');
      scale = detail::checked_mul(scale, 10);
    }
    Rat r = Rat(detail::iabs(i), 1) + Rat(f, scale);
    return neg ? -r : r;
  }
  return Rat(parse_int(s), 1);
}

// Planar vectors/points with exact coordinates.
struct Vec2 {
  Rat x, y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }

  bool is_lattice() const { return x.is_integer() && y.is_integer(); }
  Vec2 mod1() const { return {x.frac(), y.frac()}; }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// Extended Euclid on 64-bit: returns g = gcd(a,b) and (u,v) with u*a + v*b = g.
struct ExtGcd {
  long long g, u, v;
};
inline ExtGcd ext_gcd(long long a, long long b) {
  if (b == 0) return {a < 0 ? -a : a, a < 0 ? -1LL : 1LL, 0};
  ExtGcd s = ext_gcd(b, a % b);
  return {s.g, s.v, s.u - (a / b) * s.v};
}

// Floor-convention modulo: result in [0, m) for m > 0.
inline long long mod_floor(long long a, long long m) {
  long long r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace fukaya
