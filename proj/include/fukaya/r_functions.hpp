#pragma once

#include <complex>
#include <vector>

#include "fukaya/rational.hpp"

namespace fukaya {

// Bernoulli number B_d (B_1 = -1/2 convention), exact.
Rat bernoulli_number(int d);

// Bernoulli polynomial B_d evaluated at x, exact.
Rat bernoulli_poly(int d, const Rat& x);

// The periodic kernel r^d, d >= 1, defined by the Fourier series
//   r^d(x) = sum_{n != 0} (2 pi i n)^{-d} e^{-2 pi i n x}.
// Closed form: r^d(x) = (-1)^{d+1} B_d({x}) / d!, except that for d == 1 the
// series converges to 0 at integers (the sawtooth midpoint), not to B_1(0).
// These satisfy (r^{d+1})' = -r^d away from the jump locus.
double r_function(int d, const Rat& x);
double r_function(int d, double x);

// Symmetric partial sum of the defining series over 0 < |n| <= nmax.
// Slowly convergent for d == 1; used as an independent cross-check.
double r_function_series(int d, double x, int nmax);

// Weight attached to a corner of a lattice chain: for node values
// (beta_0, ..., beta_b) and corner displacement delta (in cycle-parameter
// units) this is
//   (sign delta)^b (2 pi i)^{-b} [beta_0, ..., beta_b] f,    f(t) = e^{2 pi i t delta},
// where [...] is the confluent divided difference (repeated nodes take
// derivative values). For b == 0 it reduces to the holonomy phase
// e^{2 pi i beta_0 delta}; when all nodes coincide it equals
// |delta|^b / b! * e^{2 pi i beta delta}; for delta == 0 and b >= 1 it
// vanishes. Continuous in the nodes.
std::complex<double> corner_factor(const std::vector<Rat>& nodes, const Rat& delta);

}  // namespace fukaya
