#pragma once

#include <complex>
#include <vector>

#include "fukaya/config.hpp"
#include "fukaya/morphisms.hpp"
#include "fukaya/polygons.hpp"
#include "fukaya/structure_constants.hpp"

namespace fukaya {

using Word = std::vector<BasisMorphism>;

// Checks dst(w_i) == src(w_{i+1}); with cyclic = true also dst(last) == src(first).
void validate_word(const Word& w, bool cyclic);

// Cyclic evaluation map: the pairing of the (N-1)-ary product of the first
// N-1 entries with the last one. Invariant (up to sign) under cyclic
// rotation; vanishes unless total degree is N - 2.
std::complex<double> phi(const Word& w, const EngineConfig& cfg);

// Same evaluation with the series/correction breakdown and truncation
// diagnostics retained (rotation signs applied to every part). The optional
// sink observes the contributing lattice chains.
StructureConstant phi_detail(const Word& w, const EngineConfig& cfg,
                             const ChainSink& sink = {});

// The sign (-1)^* relating phi(w_1, ..., w_N) = s * phi(w_2, ..., w_N, w_1).
int rotation_sign(const Word& w);

// N-ary product of composable morphisms, as an element of hom(src, dst).
Element product(const Word& w, const EngineConfig& cfg);

// The product resolved into basis coefficients with per-coefficient
// breakdowns: one entry for every basis element of the admissible output
// degree (zero coefficients included). The optional sink is invoked with the
// basis element currently being paired and each of its contributing chains.
struct ProductTerm {
  BasisMorphism basis;
  StructureConstant sc;
};
std::vector<ProductTerm> product_terms(
    const Word& w, const EngineConfig& cfg,
    const std::function<void(const BasisMorphism&, const ChainRecord&)>& sink = {});

// Defect of the quadratic relations on the given chain: the max coefficient
// norm of  sum_{k+l=n+1} sum_j (-1)^* m_k(w_1..w_j, m_l(w_{j+1}..), .., w_n).
double ainfty_residual(const Word& w, const EngineConfig& cfg);

// Defect of cyclic symmetry on a cyclically composable word:
// | eta(m(w_1..w_n), w_{n+1}) - (-1)^* eta(m(w_2..w_{n+1}), w_1) |.
double cyclicity_defect(const Word& w, const EngineConfig& cfg);

// Suspended-product sign: the (q, p)-type twist relating the product of
// degree-shifted inputs to the plain product; exposed for the twisted module
// and tested against hand-computed small cases.
int suspension_sign(const std::vector<int>& degrees);

}  // namespace fukaya
