#include "fukaya/polygons.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <vector>

#include "fukaya/errors.hpp"
#include "fukaya/r_functions.hpp"

namespace fukaya {

namespace {

Vec2 direction(const Lagrangian& a) { return Vec2{Rat(a.q), Rat(a.p)}; }

// Solve w2 - w1 == delta * dir exactly (dir primitive, nonzero).
Rat edge_delta(const Vec2& w1, const Vec2& w2, const Vec2& dir) {
  Vec2 d = w2 - w1;
  Rat delta = !dir.x.is_zero() ? d.x / dir.x : d.y / dir.y;
  if (d.x != delta * dir.x || d.y != delta * dir.y)
    throw std::logic_error("edge displacement not parallel to its cycle");
  return delta;
}

// The lift of torus point P on the lattice line through W with tangent obj,
// re-centered to the lift nearest W. W must itself lift a point of the
// cycle of obj, which guarantees existence.
Vec2 base_lift(const Vec2& P, const Vec2& W, const Lagrangian& obj) {
  Vec2 c = P - W;
  Rat w = Rat(obj.p) * c.x - Rat(obj.q) * c.y;
  if (!w.is_integer()) throw std::logic_error("entry point does not lift onto the edge line");
  long long wi = static_cast<long long>(w.num());
  ExtGcd e = ext_gcd(obj.q, obj.p);  // u*q + v*p == 1
  long long k = e.u * wi;            // q*k - p*j == w with (k, j) = (u*w, -v*w)
  long long j = -e.v * wi;
  Rat t = obj.q != 0 ? (c.x + Rat(j)) / Rat(obj.q) : (c.y + Rat(k)) / Rat(obj.p);
  Rat tc = t - Rat((t + Rat(1, 2)).floor(), 1);
  Vec2 dir = direction(obj);
  return W + tc * dir;
}

struct Run {
  Vec2 vertex;
  std::vector<int> entries;
};

// Cyclic run-length compression of the chain's vertex sequence.
std::vector<Run> compress_runs(const std::vector<Vec2>& lifts) {
  const int m = static_cast<int>(lifts.size());
  int start = -1;
  for (int i = 0; i < m; ++i) {
    if (lifts[i] != lifts[(i + m - 1) % m]) {
      start = i;
      break;
    }
  }
  std::vector<Run> runs;
  if (start < 0) {  // all vertices coincide
    runs.push_back({lifts[0], {}});
    for (int i = 0; i < m; ++i) runs[0].entries.push_back(i);
    return runs;
  }
  for (int k = 0; k < m; ++k) {
    int i = (start + k) % m;
    if (runs.empty() || !(lifts[i] == runs.back().vertex)) runs.push_back({lifts[i], {}});
    runs.back().entries.push_back(i);
  }
  return runs;
}

bool dir_upper(const Vec2& d) { return d.y.sign() > 0 || (d.y.is_zero() && d.x.sign() < 0); }

struct Evaluator {
  const TransversalCycle& cyc;
  const EngineConfig& cfg;
  int m;
  std::vector<Vec2> dirs;
  int deg0_first = -1, deg0_second = -1;
  std::vector<Vec2> lifts;
  const ChainSink* sink = nullptr;

  std::complex<double> shell_sum{0.0, 0.0};
  double shell_max = 0.0;
  long long closed = 0;
  long long contributing = 0;
  int shell = 0;

  explicit Evaluator(const TransversalCycle& c, const EngineConfig& g) : cyc(c), cfg(g), m(c.size()) {
    dirs.reserve(m);
    for (const Corner& k : c.corners) dirs.push_back(direction(k.obj));
    for (int i = 0; i < m; ++i) {
      if (cyc.degrees[i] == 0) {
        if (deg0_first < 0)
          deg0_first = i;
        else
          deg0_second = i;
      }
    }
    lifts.assign(m, Vec2{});
    lifts[m - 1] = cyc.points[m - 1];  // anchor at the fundamental lift
  }

  void run_shell(int s) {
    shell = s;
    shell_sum = {0.0, 0.0};
    shell_max = 0.0;
    descend(0, false);
  }

  void descend(int level, bool boundary_hit) {
    if (level == m - 2) {
      if (shell == 0 || boundary_hit) close_chain();
      return;
    }
    const Vec2& prev = level == 0 ? lifts[m - 1] : lifts[level - 1];
    Vec2 base = base_lift(cyc.points[level], prev, cyc.corners[level].obj);
    for (long long t = -shell; t <= shell; ++t) {
      lifts[level] = base + Rat(t) * dirs[level];
      descend(level + 1, boundary_hit || std::llabs(t) == static_cast<long long>(shell));
    }
  }

  // Entries 0..m-3 are chosen; entry m-2 is forced by intersecting the edge
  // lines of corners m-2 and m-1, and must land on a lift of its point.
  void close_chain() {
    const Vec2& from = m == 3 ? lifts[0] : lifts[m - 3];
    const Vec2& d1 = dirs[m - 2];
    const Vec2& d2 = dirs[m - 1];
    Rat den = cross(d1, d2);
    if (den.is_zero()) throw std::logic_error("adjacent corners with parallel cycles");
    Vec2 rhs = lifts[m - 1] - from;
    Rat u = cross(rhs, d2) / den;
    Vec2 X = from + u * d1;
    if (!(X - cyc.points[m - 2]).is_lattice()) return;
    lifts[m - 2] = X;
    ++closed;
    std::complex<double> t = chain_term();
    double a = std::abs(t);
    if (a != 0.0) {
      ++contributing;
      shell_sum += t;
      if (a > shell_max) shell_max = a;
    }
  }

  std::complex<double> corner_factors() const {
    std::complex<double> f{1.0, 0.0};
    for (int i = 0; i < m && f != std::complex<double>{0.0, 0.0}; ++i) {
      Rat delta = edge_delta(lifts[(i + m - 1) % m], lifts[i], dirs[i]);
      f *= corner_factor(cyc.corners[i].nodes, delta);
    }
    return f;
  }

  std::vector<Rat> entry_deltas() const {
    std::vector<Rat> d;
    d.reserve(m);
    for (int i = 0; i < m; ++i)
      d.push_back(edge_delta(lifts[(i + m - 1) % m], lifts[i], dirs[i]));
    return d;
  }

  void report(const char* cls, const std::vector<Run>& runs, int sigma, Rat area,
              double V) const {
    ChainRecord rec;
    for (const Run& r : runs) rec.vertices.push_back(r.vertex);
    rec.cls = cls;
    rec.sigma = sigma;
    rec.area = std::move(area);
    rec.delta_l = entry_deltas();
    rec.V = V;
    (*sink)(rec);
  }

  std::complex<double> chain_term() const {
    std::vector<Run> runs = compress_runs(lifts);
    const int R = static_cast<int>(runs.size());
    if (R == 1) {
      // Constant chain: contributes only for triple products, weight one,
      // and dies whenever an insertion sits at any corner (zero displacement).
      if (m != 3) return 0.0;
      std::complex<double> f = corner_factors();  // all deltas vanish: 0 or 1
      if (sink && f != std::complex<double>{0.0, 0.0}) report("point", runs, 1, Rat(0), 1.0);
      return f;
    }
    if (R == 2) {
      // Straight-line degeneration: see line_correction.
      if (sink) report("line", runs, 0, Rat(0), 0.0);
      return 0.0;
    }

    // Convexity: clockwise turns only, no reversals, single revolution.
    std::vector<Vec2> edges(R);
    for (int r = 0; r < R; ++r) edges[r] = runs[(r + 1) % R].vertex - runs[r].vertex;
    int winding = 0;
    for (int r = 0; r < R; ++r) {
      const Vec2& e1 = edges[r];
      const Vec2& e2 = edges[(r + 1) % R];
      Rat c = cross(e1, e2);
      if (c.sign() > 0) return 0.0;
      if (c.is_zero() && dot(e1, e2).sign() < 0) return 0.0;
      if (dir_upper(e1) && !dir_upper(e2)) ++winding;
    }
    if (winding != 1) return 0.0;

    // Locate the two even entries; they must sit at the tilted extrema.
    int run_of_first = -1, run_of_second = -1;
    for (int r = 0; r < R; ++r) {
      for (int e : runs[r].entries) {
        if (e == deg0_first) run_of_first = r;
        if (e == deg0_second) run_of_second = r;
      }
    }
    if (run_of_first == run_of_second) return 0.0;  // extrema cannot coincide
    Rat x1 = x_theta(runs[run_of_first].vertex, cfg.theta);
    Rat x2 = x_theta(runs[run_of_second].vertex, cfg.theta);
    if (x1 == x2)
      throw UnsupportedPattern("chain extrema share the tilted abscissa; perturb theta");
    int sigma = x1 < x2 ? -1 : 1;
    const Rat& xlo = x1 < x2 ? x1 : x2;
    const Rat& xhi = x1 < x2 ? x2 : x1;
    for (int r = 0; r < R; ++r) {
      Rat xv = x_theta(runs[r].vertex, cfg.theta);
      if (xv < xlo || xv > xhi) return 0.0;  // even entries failed to be extremal
    }

    Rat shoelace(0);
    for (int r = 0; r < R; ++r) shoelace += cross(runs[r].vertex, runs[(r + 1) % R].vertex);
    Rat area = -shoelace / Rat(2);
    if (area.sign() <= 0) throw std::logic_error("clockwise chain with non-positive area");

    double mult = 1.0;
    for (int r = 0; r < R; ++r) {
      int c = static_cast<int>(runs[r].entries.size());
      bool extremal = r == run_of_first || r == run_of_second;
      double den = 1.0;
      if (extremal) {
        for (int i = 1; i < c; ++i) den *= 2.0 * i;  // 2^{c-1} (c-1)!
      } else {
        for (int i = 2; i <= c; ++i) den *= i;  // c!
      }
      mult /= den;
    }

    std::complex<double> f = corner_factors();
    if (f == std::complex<double>{0.0, 0.0}) return 0.0;

    // rho couples to twice the enclosed area: the standard slope-(0,1/2,1)
    // triangle family then sums to exp(2 pi i rho (alpha+m)^2 + ...), the
    // normalization the closed-form oracle and the theta-scan both use.
    const double two_pi = 2.0 * std::numbers::pi;
    std::complex<double> expo = std::exp(std::complex<double>{0.0, two_pi} * cfg.rho *
                                         std::complex<double>{2.0 * area.to_double(), 0.0});
    double sign = (sigma < 0 && (m - 1) % 2 == 1) ? -1.0 : 1.0;
    if (sink) report("polygon", runs, sigma, area, mult);
    return sign * mult * expo * f;
  }
};

}  // namespace

void TransversalCycle::validate(const Rat& theta) const {
  const int m = size();
  if (m < 1 || static_cast<int>(points.size()) != m || static_cast<int>(degrees.size()) != m)
    throw InvalidInput("inconsistent cycle data");
  for (int i = 0; i < m; ++i) {
    const Lagrangian& a = corners[i].obj;
    const Lagrangian& b = corners[(i + 1) % m].obj;
    a.validate();
    if (corners[i].nodes.empty()) throw InvalidInput("corner without holonomy nodes");
    int cmp = slope_compare(a, b, theta);
    if (cmp == 0) throw InvalidInput("adjacent corners must carry transversal objects");
    int expect = cmp < 0 ? 0 : 1;
    if (degrees[i] != expect) throw InvalidInput("entry degree does not match slope order");
    cycle_position(a, points[i]);             // throws if off the cycle
    cycle_position(b, points[i]);
  }
}

std::complex<double> transversal_sum(const TransversalCycle& cyc, const EngineConfig& cfg,
                                     SumDiagnostics* diag, const ChainSink& sink) {
  cfg.validate();
  cyc.validate(cfg.theta);
  const int m = cyc.size();
  if (m < 3) return 0.0;
  int even_entries = 0;
  for (int d : cyc.degrees) even_entries += d == 0 ? 1 : 0;
  if (even_entries != 2) return 0.0;  // grading selection

  Evaluator ev(cyc, cfg);
  if (sink) ev.sink = &sink;
  std::complex<double> total{0.0, 0.0};
  double prev_max = std::numeric_limits<double>::infinity();
  for (int s = 0;; ++s) {
    if (s > cfg.max_shell)
      throw TruncationCapExceeded("lattice sum did not settle within " +
                                  std::to_string(cfg.max_shell) + " shells");
    ev.run_shell(s);
    total += ev.shell_sum;
    if (diag) {
      diag->shells_used = s + 1;
      diag->chains_closed = ev.closed;
      diag->chains_contributing = ev.contributing;
      diag->tail = std::isinf(prev_max) ? ev.shell_max : std::max(ev.shell_max, prev_max);
    }
    if (s + 1 >= cfg.min_shell && ev.shell_max < cfg.tail_tol && prev_max < cfg.tail_tol) break;
    prev_max = ev.shell_max;
  }
  return total;
}

std::complex<double> line_correction(const TransversalCycle& cyc, const EngineConfig& cfg) {
  cfg.validate();
  cyc.validate(cfg.theta);
  const int m = cyc.size();
  if (m < 2) return 0.0;

  // Positions of the two even entries (grading guarantees exactly two for
  // any word with a nonzero evaluation; bail out otherwise).
  int k1 = -1, k2 = -1;
  for (int i = 0; i < m; ++i) {
    if (cyc.degrees[i] == 0) {
      if (k1 < 0)
        k1 = i;
      else if (k2 < 0)
        k2 = i;
      else
        return 0.0;
    }
  }
  if (k2 < 0) return 0.0;

  int b_total = 0;
  for (const Corner& c : cyc.corners) b_total += c.insertions();

  double result = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!is_isomorphic(cyc.corners[i].obj, cyc.corners[j].obj)) continue;
      if (cyc.corners[i].insertions() + cyc.corners[j].insertions() != b_total) continue;

      // Entries must bunch into two groups of coinciding points, one group
      // per side of the transition pair.
      bool ok = true;
      for (int e = i; e + 1 < j && ok; ++e) ok = cyc.points[e] == cyc.points[e + 1];
      for (int e = j; ok; ++e) {
        int cur = e % m;
        int nxt = (e + 1) % m;
        if (nxt == i) break;
        ok = cyc.points[cur] == cyc.points[nxt];
      }
      if (!ok) continue;

      // The two even entries must straddle the transitions; the displacement
      // argument is read at the earlier transition corner of this (anchored)
      // presentation — rotations then pick the partner corner, whose reversed
      // displacement restores cyclicity through the oddness of the kernel.
      bool i_inside = k1 < i && i <= k2;
      bool j_inside = k1 < j && j <= k2;
      if (i_inside == j_inside) continue;
      int c = i;

      // All holonomy nodes participating in the degeneration must agree mod 1
      // (isomorphic carriers only shift beta by integers, which the periodic
      // kernel cannot see); anything else would need kernel blends.
      const Rat& node0 = cyc.corners[i].nodes[0];
      for (const Rat& nd : cyc.corners[i].nodes)
        if (!(nd - node0).is_integer())
          throw UnsupportedPattern("line correction with unequal holonomy nodes");
      for (const Rat& nd : cyc.corners[j].nodes)
        if (!(nd - node0).is_integer())
          throw UnsupportedPattern("line correction with unequal holonomy nodes");

      const Lagrangian& lc = cyc.corners[c].obj;
      Rat delta = cycle_position(lc, cyc.points[c]) - cycle_position(lc, cyc.points[(c + m - 1) % m]);
      // The kernel argument is measured in the direction of increasing tilted
      // abscissa so that it stays coherent with the extremum-order sign of the
      // polygon series (tilted-vertical carriers count as pointing up). The
      // stored orientation of the carrier may run the other way.
      Rat tilt_w = Rat(lc.q) + Rat(lc.p) * cfg.theta;
      if (tilt_w < Rat(0) || (tilt_w == Rat(0) && lc.p < 0)) delta = -delta;

      double V = 1.0;
      int cA = j - i;
      int cB = m - cA;
      for (int t = 2; t <= cA; ++t) V /= t;
      for (int t = 2; t <= cB; ++t) V /= t;

      double binom = 1.0;  // b_total! / (b_i! b_j!)
      {
        int bi = cyc.corners[i].insertions();
        for (int t = 1; t <= b_total; ++t) binom *= t;
        for (int t = 1; t <= bi; ++t) binom /= t;
        for (int t = 1; t <= b_total - bi; ++t) binom /= t;
      }

      result -= 4.0 * V * binom * r_function(b_total + 1, delta);
    }
  }
  return result;
}

}  // namespace fukaya
