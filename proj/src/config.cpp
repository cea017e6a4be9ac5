#include "fukaya/config.hpp"

#include "fukaya/errors.hpp"

namespace fukaya {

void EngineConfig::validate() const {
  if (!(rho.imag() > 0.0)) throw InvalidInput("rho must have positive imaginary part");
  if (!(tol > 0.0) || !(tail_tol > 0.0)) throw InvalidInput("tolerances must be positive");
  if (min_shell < 1 || max_shell < min_shell) throw InvalidInput("invalid shell bounds");
}

}  // namespace fukaya
