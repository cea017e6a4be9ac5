#include "fukaya/structure_constants.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "fukaya/errors.hpp"

namespace fukaya {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> cis(double t) { return {std::cos(t), std::sin(t)}; }

}  // namespace

StructureConstant script_F(const TransversalCycle& cyc, const EngineConfig& cfg,
                           const ChainSink& sink) {
  StructureConstant out;
  out.polygon_part = transversal_sum(cyc, cfg, &out.diag, sink);
  out.correction_part = line_correction(cyc, cfg);
  out.value = out.polygon_part + out.correction_part;
  return out;
}

std::complex<double> m2_closed_form(const Lagrangian& a, const Lagrangian& b,
                                    const Lagrangian& c, long long j_ab, long long j_bc,
                                    long long j_ca, const EngineConfig& cfg,
                                    SumDiagnostics* diag) {
  cfg.validate();
  a.validate();
  b.validate();
  c.validate();
  PairData ab = pair_data(a, b);
  PairData bc = pair_data(b, c);
  PairData ca = pair_data(c, a);
  PairData cb = pair_data(c, b);
  if (ab.p_ab == 0 || bc.p_ab == 0 || ca.p_ab == 0)
    throw InvalidInput("triple product in closed form needs pairwise transversal objects");
  // The quadratic form below is positive definite exactly when the cyclic
  // slope order has a single descent, which is also the grading that admits
  // a degree-one cyclic triple product.
  long long ppp = ab.p_ab * bc.p_ab * ca.p_ab;
  if (ppp >= 0)
    throw InvalidInput("triple does not carry a degree-one cyclic product (divergent form)");

  // Lattice support: p_ab * m + q_cb * j_ca + q_ab * j_ab + j_bc = 0 mod p_bc.
  const long long modn = std::llabs(bc.p_ab);
  long long rhs = mod_floor(-(cb.q_ab * j_ca + ab.q_ab * j_ab + j_bc), modn);
  ExtGcd eg = ext_gcd(mod_floor(ab.p_ab, modn), modn);
  if (rhs % eg.g != 0) {
    if (diag) *diag = SumDiagnostics{0, 0, 0, 0.0};
    return {0.0, 0.0};
  }
  const long long period = modn / eg.g;
  long long m0 = mod_floor(eg.u * (rhs / eg.g), period);

  const Rat alpha_abc =
      Rat(bc.p_ab) * a.alpha + Rat(ca.p_ab) * b.alpha + Rat(ab.p_ab) * c.alpha;
  // The holonomy along the m-th triangle's boundary: each side's displacement
  // in cycle units is (l - alpha_abc) * p_opposite / (p_ab p_bc p_ca), so the
  // total beta weight carries the same 1/(p_ab p_bc p_ca) as the area does.
  const Rat beta_abc = (Rat(bc.p_ab) * a.beta + Rat(ca.p_ab) * b.beta +
                        Rat(ab.p_ab) * c.beta) /
                       Rat(-ppp);
  const double beta_abc_d = beta_abc.to_double();
  const Rat lin = Rat(ca.p_ab) * Rat(ab.q_ab) * Rat(j_ab) - Rat(ab.p_ab) * Rat(j_ca);
  const Rat slope = Rat(ca.p_ab) * Rat(ab.p_ab);
  const Rat denom = Rat(-2) * Rat(ppp);

  // Center the shell walk on the vertex of the parabola so the adaptive stop
  // rule sees monotone Gaussian decay on both flanks.
  double m_vertex = ((alpha_abc - lin) / slope).to_double();
  long long k_center = std::llround((m_vertex - static_cast<double>(m0)) /
                                    static_cast<double>(period));

  auto term = [&](long long k) {
    Rat m = Rat(m0) + Rat(k) * Rat(period);
    Rat x = slope * m + lin - alpha_abc;
    Rat quad = x * x / denom;  // enclosed area of the m-th triangle
    std::complex<double> gauss =
        std::exp(std::complex<double>{0.0, kTwoPi} * cfg.rho * (2.0 * quad.to_double()));
    return gauss * cis(-kTwoPi * beta_abc_d * x.to_double());
  };

  std::complex<double> total{0.0, 0.0};
  long long terms = 0;
  double prev_max = std::numeric_limits<double>::infinity();
  for (int s = 0;; ++s) {
    if (s > cfg.max_shell)
      throw TruncationCapExceeded("closed-form lattice sum did not settle within " +
                                  std::to_string(cfg.max_shell) + " shells");
    double shell_max = 0.0;
    if (s == 0) {
      std::complex<double> t = term(k_center);
      total += t;
      ++terms;
      shell_max = std::abs(t);
    } else {
      for (long long k : {k_center - s, k_center + s}) {
        std::complex<double> t = term(k);
        total += t;
        ++terms;
        shell_max = std::max(shell_max, std::abs(t));
      }
    }
    if (diag) {
      diag->shells_used = s + 1;
      diag->chains_closed = terms;
      diag->chains_contributing = terms;
      diag->tail = std::isinf(prev_max) ? shell_max : std::max(shell_max, prev_max);
    }
    if (s + 1 >= cfg.min_shell && shell_max < cfg.tail_tol && prev_max < cfg.tail_tol) break;
    prev_max = shell_max;
  }
  return total;
}

namespace {

// Shared shell walk for the scalar theta series and its beta derivative.
std::complex<double> theta_walk(double alpha, double beta, std::complex<double> rho,
                                double tail_tol, bool weight_by_linear) {
  if (!(rho.imag() > 0.0)) throw InvalidInput("theta series needs Im(rho) > 0");
  if (!(tail_tol > 0.0)) throw InvalidInput("tail tolerance must be positive");
  auto term = [&](long long m) {
    double u = alpha + static_cast<double>(m);
    std::complex<double> t =
        std::exp(std::complex<double>{0.0, kTwoPi} * rho * (u * u)) * cis(kTwoPi * beta * u);
    return weight_by_linear ? u * t : t;
  };
  long long center = std::llround(-alpha);
  std::complex<double> total = term(center);
  double prev_max = std::numeric_limits<double>::infinity();
  for (int s = 1;; ++s) {
    if (s > 100000) throw TruncationCapExceeded("theta series did not settle");
    double shell_max = 0.0;
    for (long long m : {center - s, center + s}) {
      std::complex<double> t = term(m);
      total += t;
      shell_max = std::max(shell_max, std::abs(t));
    }
    if (s >= 4 && shell_max < tail_tol && prev_max < tail_tol) break;
    prev_max = shell_max;
  }
  return total;
}

}  // namespace

std::complex<double> theta_series(double alpha, double beta, std::complex<double> rho,
                                  double tail_tol) {
  return theta_walk(alpha, beta, rho, tail_tol, false);
}

std::complex<double> theta_series_dbeta(double alpha, double beta, std::complex<double> rho,
                                        double tail_tol) {
  return theta_walk(alpha, beta, rho, tail_tol, true);
}

}  // namespace fukaya
