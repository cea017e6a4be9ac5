#include "fukaya/a_infinity.hpp"

#include <algorithm>
#include <cmath>

#include "fukaya/errors.hpp"

namespace fukaya {

namespace {

int word_degree(const Word& w) {
  int s = 0;
  for (const BasisMorphism& x : w) s += x.degree;
  return s;
}

// Re-express a morphism with an isomorphic source object: the basis of the
// new hom space is matched through the shared intersection points.
BasisMorphism transport_src(const BasisMorphism& x, const Lagrangian& new_src, const Rat& theta) {
  if (x.src == new_src) return x;
  if (x.iso) return make_iso(new_src, x.dst, x.degree);
  HomInfo info = hom_info(new_src, x.dst, theta);
  if (info.kind != HomKind::Transversal)
    throw std::logic_error("transport target is not transversal");
  Vec2 p = basis_point(x);
  for (long long j = 0; j < info.dim; ++j) {
    BasisMorphism cand = make_transversal(new_src, x.dst, j, theta);
    if (basis_point(cand) == p) return cand;
  }
  throw std::logic_error("transport found no matching intersection point");
}

}  // namespace

void validate_word(const Word& w, bool cyclic) {
  if (w.empty()) throw InvalidInput("empty word");
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (!(w[i].dst == w[i + 1].src))
      throw InvalidInput("word is not composable at position " + std::to_string(i + 1));
  }
  if (cyclic && !(w.back().dst == w.front().src))
    throw InvalidInput("word is not cyclically composable");
}

int rotation_sign(const Word& w) {
  int n = static_cast<int>(w.size());
  int rest = word_degree(w) - w[0].degree;
  int star = (n - 1) + w[0].degree * rest;
  return star % 2 == 0 ? 1 : -1;
}

StructureConstant phi_detail(const Word& w0, const EngineConfig& cfg, const ChainSink& sink) {
  cfg.validate();
  validate_word(w0, true);
  StructureConstant out;
  const int N = static_cast<int>(w0.size());
  if (N < 3) return out;
  if (word_degree(w0) != N - 2) return out;

  // Strict unit rules: an even unit-like entry composes as the identity in a
  // triple evaluation and annihilates all longer ones.
  int unit_pos = -1;
  for (int i = 0; i < N; ++i) {
    if (w0[i].iso && w0[i].degree == 0) {
      unit_pos = i;
      break;
    }
  }
  if (unit_pos >= 0) {
    if (N != 3) return out;
    Word w = w0;
    int sign = 1;
    for (int r = 0; r < unit_pos; ++r) {
      sign *= rotation_sign(w);
      std::rotate(w.begin(), w.begin() + 1, w.end());
    }
    BasisMorphism t = transport_src(w[1], w[0].src, cfg.theta);
    out.polygon_part = static_cast<double>(sign * eta_pair(t, w[2], cfg.theta));
    out.value = out.polygon_part;
    return out;
  }

  // Rotate a transversal entry into the anchor (last) slot.
  Word w = w0;
  int sign = 1;
  int guard = 0;
  while (w.back().iso) {
    if (++guard > N) return out;  // no transversal entry at all
    sign *= rotation_sign(w);
    std::rotate(w.begin(), w.begin() + 1, w.end());
  }

  // Fold odd unit-like insertions into the node lists of their corners.
  std::vector<int> tpos;
  for (int i = 0; i < N; ++i)
    if (!w[i].iso) tpos.push_back(i);
  const int m = static_cast<int>(tpos.size());
  if (m < 2) return out;

  TransversalCycle cyc;
  for (int k = 0; k < m; ++k) {
    const BasisMorphism& e = w[tpos[k]];
    const BasisMorphism& prev = w[tpos[(k + m - 1) % m]];
    Corner corner;
    corner.obj = prev.dst;
    corner.nodes.push_back(prev.dst.beta);
    for (int i = (tpos[(k + m - 1) % m] + 1) % N; i != tpos[k]; i = (i + 1) % N)
      corner.nodes.push_back(w[i].dst.beta);
    cyc.corners.push_back(std::move(corner));
    cyc.points.push_back(basis_point(e));
    cyc.degrees.push_back(e.degree);
  }

  out = script_F(cyc, cfg, sink);
  double s = static_cast<double>(sign);
  out.polygon_part *= s;
  out.correction_part *= s;
  out.value *= s;
  return out;
}

std::complex<double> phi(const Word& w, const EngineConfig& cfg) {
  return phi_detail(w, cfg).value;
}

std::vector<ProductTerm> product_terms(
    const Word& w, const EngineConfig& cfg,
    const std::function<void(const BasisMorphism&, const ChainRecord&)>& sink) {
  cfg.validate();
  validate_word(w, false);
  const int n = static_cast<int>(w.size());
  std::vector<ProductTerm> terms;
  if (n < 2) return terms;  // the differential vanishes on this model

  const Lagrangian& src = w.front().src;
  const Lagrangian& dst = w.back().dst;
  HomInfo info = hom_info(src, dst, cfg.theta);
  if (info.kind == HomKind::Zero) return terms;
  int out_deg = word_degree(w) + 2 - n;
  if (out_deg < 0 || out_deg > 1) return terms;

  std::vector<BasisMorphism> basis;
  if (info.kind == HomKind::Transversal) {
    if (info.degree != out_deg) return terms;
    for (long long j = 0; j < info.dim; ++j)
      basis.push_back(make_transversal(src, dst, j, cfg.theta));
  } else {
    basis.push_back(make_iso(src, dst, out_deg));
  }

  for (const BasisMorphism& v : basis) {
    Word ext = w;
    ext.push_back(dual_basis(v, cfg.theta));
    ChainSink tagged;
    if (sink) tagged = [&](const ChainRecord& rec) { sink(v, rec); };
    terms.push_back({v, phi_detail(ext, cfg, tagged)});
  }
  return terms;
}

Element product(const Word& w, const EngineConfig& cfg) {
  validate_word(w, false);
  Element out{w.front().src, w.back().dst, {}};
  for (const ProductTerm& t : product_terms(w, cfg))
    if (t.sc.value != std::complex<double>{0.0, 0.0}) out.add(t.basis, t.sc.value);
  return out;
}

double ainfty_residual(const Word& w, const EngineConfig& cfg) {
  validate_word(w, false);
  const int n = static_cast<int>(w.size());
  Element total{w.front().src, w.back().dst, {}};
  for (int l = 2; l <= n - 1; ++l) {
    for (int j = 0; j + l <= n; ++j) {
      Word inner(w.begin() + j, w.begin() + j + l);
      Element mid = product(inner, cfg);
      if (mid.coef.empty()) continue;
      int pre_deg = 0;
      for (int t = 0; t < j; ++t) pre_deg += w[t].degree;
      int star = (j + 1) * (l + 1) + l * pre_deg;
      double sgn = star % 2 == 0 ? 1.0 : -1.0;
      for (const auto& [key, c] : mid.coef) {
        if (std::abs(c) == 0.0) continue;
        const auto& [deg, iso, label] = key;
        BasisMorphism mids{mid.src, mid.dst, deg, iso, label};
        Word outer;
        outer.reserve(n - l + 1);
        outer.insert(outer.end(), w.begin(), w.begin() + j);
        outer.push_back(mids);
        outer.insert(outer.end(), w.begin() + j + l, w.end());
        Element term = product(outer, cfg);
        term *= sgn * c;
        total += term;
      }
    }
  }
  return total.norm();
}

double cyclicity_defect(const Word& w, const EngineConfig& cfg) {
  validate_word(w, true);
  std::complex<double> lhs = phi(w, cfg);
  int s = rotation_sign(w);
  Word r = w;
  std::rotate(r.begin(), r.begin() + 1, r.end());
  std::complex<double> rhs = phi(r, cfg);
  return std::abs(lhs - static_cast<double>(s) * rhs);
}

int suspension_sign(const std::vector<int>& degrees) {
  int n = static_cast<int>(degrees.size());
  int star = 0;
  for (int i = 0; i < n - 1; ++i) star += (n - 1 - i) * (degrees[i] - 1);
  return ((star % 2) + 2) % 2 == 0 ? 1 : -1;
}

}  // namespace fukaya
