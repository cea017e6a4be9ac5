#pragma once

#include <complex>
#include <cstdint>

#include "fukaya/rational.hpp"

namespace fukaya {

// Evaluation parameters shared by every lattice sum in the library.
//
// tail_tol drives the adaptive shell cutoff: enumeration of a sum stops once
// two consecutive shells contribute terms below it in absolute value.
// min_shell guards against congruence-sparse families whose early shells are
// empty by arithmetic accident rather than by decay; max_shell is the hard
// cap after which TruncationCapExceeded is thrown.
struct EngineConfig {
  std::complex<double> rho{0.0, 1.0};  // modulus; Im(rho) > 0 required
  Rat theta{0};                        // foliation tilt used for slope order
  double tol = 1e-10;                  // comparison tolerance for verifiers
  double tail_tol = 1e-16;             // shell stop threshold
  int min_shell = 8;
  int max_shell = 64;
  std::uint64_t seed = 1;

  void validate() const;
};

}  // namespace fukaya
