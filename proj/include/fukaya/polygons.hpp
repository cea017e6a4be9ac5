#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "fukaya/config.hpp"
#include "fukaya/morphisms.hpp"
#include "fukaya/objects.hpp"
#include "fukaya/rational.hpp"

namespace fukaya {

// One corner of a cyclic transversal word. The corner of index i carries the
// edge arriving at entry i; its node list holds the holonomy (beta) values of
// the object chain sitting at that corner: a single value for a plain corner,
// b+1 values when b odd unit-like morphisms are inserted there.
struct Corner {
  Lagrangian obj;
  std::vector<Rat> nodes;

  int insertions() const { return static_cast<int>(nodes.size()) - 1; }
};

// Geometric data of a cyclically composable word of transversal morphisms:
// entry i is a morphism from corners[i].obj to corners[i+1].obj located at
// the torus point points[i], of degree degrees[i].
struct TransversalCycle {
  std::vector<Corner> corners;
  std::vector<Vec2> points;
  std::vector<int> degrees;

  int size() const { return static_cast<int>(corners.size()); }
  void validate(const Rat& theta) const;
};

struct SumDiagnostics {
  int shells_used = 0;
  long long chains_closed = 0;
  long long chains_contributing = 0;
  double tail = 0.0;
};

// One closed lattice chain as seen by the enumeration, reported through the
// optional observer of transversal_sum: vertices after collapsing coincident
// neighbours, the classification, the orientation sign, the shoelace area,
// the per-entry displacements in cycle units, and the multiplicity weight V.
// Point and polygon chains are reported when they contribute; straight-line
// chains are reported with sigma = 0 and V = 0 since their weight belongs to
// line_correction, not to the series.
struct ChainRecord {
  std::vector<Vec2> vertices;
  const char* cls = "";  // "point" | "line" | "polygon"
  int sigma = 0;
  Rat area{0};
  std::vector<Rat> delta_l;
  double V = 0.0;
};
using ChainSink = std::function<void(const ChainRecord&)>;

// Tilted abscissa used for slope windows and extremum bookkeeping.
inline Rat x_theta(const Vec2& v, const Rat& theta) { return v.x + theta * v.y; }

// Sum over closed clockwise-convex lattice chains bounded by the cycle
// lifts (polygon contributions plus the constant-chain term). Straight-line
// degenerations are excluded here; line_correction accounts for them.
std::complex<double> transversal_sum(const TransversalCycle& cyc, const EngineConfig& cfg,
                                     SumDiagnostics* diag = nullptr,
                                     const ChainSink& sink = {});

// Correction accounting for chains collapsing onto a straight line, which
// exist when two corners carry isomorphic objects and the entries between
// them bunch into two groups of coinciding points. Evaluated from torus data
// only (no lift enumeration); vanishes for generic words.
std::complex<double> line_correction(const TransversalCycle& cyc, const EngineConfig& cfg);

}  // namespace fukaya
