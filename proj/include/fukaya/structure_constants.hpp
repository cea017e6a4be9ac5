#pragma once

#include <complex>

#include "fukaya/config.hpp"
#include "fukaya/objects.hpp"
#include "fukaya/polygons.hpp"

namespace fukaya {

// One structure constant with its breakdown: the polygon-series part, the
// line-locus correction part, and the truncation diagnostics of the series.
struct StructureConstant {
  std::complex<double> value{0.0, 0.0};
  std::complex<double> polygon_part{0.0, 0.0};
  std::complex<double> correction_part{0.0, 0.0};
  SumDiagnostics diag;
};

// Full evaluation: polygon series plus correction, breakdown retained.
// The optional sink observes every contributing lattice chain (debug dumps).
StructureConstant script_F(const TransversalCycle& cyc, const EngineConfig& cfg,
                           const ChainSink& sink = {});

// Triple-product coefficient for basis morphisms v_ab^{j_ab}, v_bc^{j_bc},
// v_ca^{j_ca} of three pairwise transversal objects, evaluated as a single
// theta-like lattice sum over one integer (no polygon enumeration).  Serves
// as the independent cross-check for the enumerating engine and powers the
// theta-scan front end.
std::complex<double> m2_closed_form(const Lagrangian& a, const Lagrangian& b,
                                    const Lagrangian& c, long long j_ab, long long j_bc,
                                    long long j_ca, const EngineConfig& cfg,
                                    SumDiagnostics* diag = nullptr);

// sum_m exp(2 pi i rho (alpha+m)^2 + 2 pi i beta (alpha+m)), the value of the
// standard slope-(0, 1/2, 1) triple product as a function of the middle
// object's shift parameters.
std::complex<double> theta_series(double alpha, double beta, std::complex<double> rho,
                                  double tail_tol = 1e-16);

// (1/2 pi i) d/d beta of theta_series, i.e. sum_m (alpha+m) exp(...).
std::complex<double> theta_series_dbeta(double alpha, double beta, std::complex<double> rho,
                                        double tail_tol = 1e-16);

}  // namespace fukaya
