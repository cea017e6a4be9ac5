#include "fukaya/r_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fukaya/errors.hpp"

namespace fukaya {

namespace {

// Pascal triangle row cache for small arguments.
Rat binomial(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  Rat r(1);
  for (int i = 0; i < k; ++i) r = r * Rat(n - i) / Rat(i + 1);
  return r;
}

constexpr int kMaxBernoulli = 40;

const std::vector<Rat>& bernoulli_table() {
  static const std::vector<Rat> table = [] {
    std::vector<Rat> b(kMaxBernoulli + 1);
    b[0] = Rat(1);
    for (int m = 1; m <= kMaxBernoulli; ++m) {
      // sum_{j=0}^{m} C(m+1, j) B_j = 0  for m >= 1
      Rat acc(0);
      for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * b[j];
      b[m] = -acc / binomial(m + 1, m);
    }
    return b;
  }();
  return table;
}

}  // namespace

Rat bernoulli_number(int d) {
  if (d < 0 || d > kMaxBernoulli) throw std::invalid_argument("bernoulli_number: order out of range");
  return bernoulli_table()[d];
}

Rat bernoulli_poly(int d, const Rat& x) {
  // B_d(x) = sum_k C(d, k) B_{d-k} x^k
  Rat acc(0);
  Rat xk(1);
  for (int k = 0; k <= d; ++k) {
    acc += binomial(d, k) * bernoulli_number(d - k) * xk;
    xk *= x;
  }
  return acc;
}

double r_function(int d, const Rat& x) {
  if (d < 1) throw std::invalid_argument("r_function: order must be >= 1");
  if (d == 1 && x.is_integer()) return 0.0;  // series midpoint at the jump
  Rat frac = x.frac();
  Rat value = bernoulli_poly(d, frac) / [&] {
    Rat f(1);
    for (int i = 2; i <= d; ++i) f *= Rat(i);
    return f;
  }();
  double v = value.to_double();
  return (d % 2 == 0) ? -v : v;  // (-1)^{d+1}
}

double r_function(int d, double x) {
  // Evaluated directly in floating point: squeezing an arbitrary double
  // through the exact rational type would blow up its denominator.
  if (d < 1) throw std::invalid_argument("r_function: order must be >= 1");
  double frac = x - std::floor(x);
  if (frac >= 1.0) frac = 0.0;  // floor roundoff at the seam
  if (d == 1 && frac == 0.0) return 0.0;
  double acc = 0.0;
  double xk = 1.0;
  for (int k = 0; k <= d; ++k) {
    acc += binomial(d, k).to_double() * bernoulli_number(d - k).to_double() * xk;
    xk *= frac;
  }
  double fact = 1.0;
  for (int i = 2; i <= d; ++i) fact *= i;
  double v = acc / fact;
  return (d % 2 == 0) ? -v : v;  // (-1)^{d+1}
}

double r_function_series(int d, double x, int nmax) {
  // sum over n and -n: for d even the pair gives 2*(-1)^{d/2} cos(2 pi n x) / (2 pi n)^d,
  // for d odd -2*(-1)^{(d-1)/2} sin(2 pi n x) / (2 pi n)^d.
  double acc = 0.0;
  for (int n = 1; n <= nmax; ++n) {
    double w = 2.0 * std::numbers::pi * n;
    double mag = std::pow(w, -d);
    if (d % 2 == 0) {
      double s = (d / 2) % 2 == 0 ? 1.0 : -1.0;
      acc += 2.0 * s * mag * std::cos(w * x);
    } else {
      double s = ((d - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
      acc -= 2.0 * s * mag * std::sin(w * x);
    }
  }
  return acc;
}

std::complex<double> corner_factor(const std::vector<Rat>& nodes, const Rat& delta) {
  if (nodes.empty()) throw std::invalid_argument("corner_factor: need at least one node");
  const int b = static_cast<int>(nodes.size()) - 1;
  const double two_pi = 2.0 * std::numbers::pi;
  const double d = delta.to_double();
  if (b == 0) {
    double ph = two_pi * nodes[0].to_double() * d;
    return {std::cos(ph), std::sin(ph)};
  }
  if (delta.is_zero()) return 0.0;

  // Confluent divided differences of f(t) = e^{2 pi i t delta}. Nodes are
  // sorted so equal values are adjacent; a block of m+1 equal nodes uses
  // f^{(m)}(t)/m! = (2 pi i delta)^m / m! * f(t).
  std::vector<Rat> xs = nodes;
  std::sort(xs.begin(), xs.end());
  const int n = static_cast<int>(xs.size());
  const std::complex<double> i2pid{0.0, two_pi * d};
  auto f = [&](const Rat& t) {
    double ph = two_pi * t.to_double() * d;
    return std::complex<double>{std::cos(ph), std::sin(ph)};
  };
  // dd[i][j] holds the divided difference over xs[i..i+j].
  std::vector<std::vector<std::complex<double>>> dd(n, std::vector<std::complex<double>>(n));
  for (int i = 0; i < n; ++i) dd[i][0] = f(xs[i]);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i + j < n; ++i) {
      if (xs[i] == xs[i + j]) {
        std::complex<double> deriv = f(xs[i]);
        double fact = 1.0;
        for (int m = 1; m <= j; ++m) {
          deriv *= i2pid;
          fact *= m;
        }
        dd[i][j] = deriv / fact;
      } else {
        dd[i][j] = (dd[i + 1][j - 1] - dd[i][j - 1]) / ((xs[i + j] - xs[i]).to_double());
      }
    }
  }
  std::complex<double> result = dd[0][n - 1];
  // (sign delta)^b (2 pi i)^{-b}
  const std::complex<double> inv2pii{0.0, -1.0 / two_pi};  // 1/(2 pi i)
  for (int k = 0; k < b; ++k) result *= inv2pii;
  if (delta.sign() < 0 && b % 2 == 1) result = -result;
  return result;
}

}  // namespace fukaya
