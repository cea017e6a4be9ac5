#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fukaya/errors.hpp"
#include "fukaya/polygons.hpp"
#include "fukaya/r_functions.hpp"
#include "fukaya/structure_constants.hpp"

using namespace fukaya;

namespace {

// The slope-(0, 1/2, 1) triangle family with middle offset alpha: the sum
// over its lattice chains is the classical series in (alpha + m)^2.
TransversalCycle standard_family(const Rat& alpha) {
  Lagrangian a{1, 0, Rat(0), Rat(0)};
  Lagrangian b{2, 1, alpha, Rat(0)};
  Lagrangian c{1, 1, Rat(0), Rat(0)};
  TransversalCycle cyc;
  cyc.corners = {{a, {Rat(0)}}, {b, {Rat(0)}}, {c, {Rat(0)}}};
  cyc.points = {Vec2{-alpha, Rat(0)}.mod1(), Vec2{alpha, alpha}.mod1(), Vec2{Rat(0), Rat(0)}};
  cyc.degrees = {0, 0, 1};
  return cyc;
}

// Two isomorphic horizontal carriers x, x~ connected through a vertical and
// a diagonal spectator; both point groups coincide, so the straight-line
// locus is populated.
TransversalCycle carrier_pair_cycle(int insertions_at_x = 0, const Rat& odd_node = Rat(2, 7)) {
  Lagrangian x{1, 0, Rat(1, 3), Rat(2, 7)};
  Lagrangian xt{1, 0, Rat(4, 3), Rat(2, 7)};
  Lagrangian a{0, 1, Rat(1, 5), Rat(3, 11)};
  Lagrangian b{1, 1, Rat(2, 9), Rat(5, 13)};
  std::vector<Rat> xnodes{Rat(2, 7)};
  for (int i = 0; i < insertions_at_x; ++i) xnodes.push_back(odd_node);
  if (insertions_at_x % 2) xnodes.push_back(Rat(2, 7));
  TransversalCycle cyc;
  cyc.corners = {{x, xnodes}, {a, {Rat(3, 11)}}, {xt, {Rat(2, 7)}}, {b, {Rat(5, 13)}}};
  cyc.points = {Vec2{Rat(4, 5), Rat(1, 3)}, Vec2{Rat(4, 5), Rat(1, 3)},
                Vec2{Rat(1, 9), Rat(1, 3)}, Vec2{Rat(1, 9), Rat(1, 3)}};
  cyc.degrees = {0, 1, 0, 1};
  return cyc;
}

}  // namespace

TEST_CASE("cycle validation rejects malformed data") {
  TransversalCycle good = standard_family(Rat(3, 10));
  CHECK_NOTHROW(good.validate(Rat(0)));

  TransversalCycle bad = good;
  bad.points.pop_back();
  CHECK_THROWS_AS(bad.validate(Rat(0)), InvalidInput);

  bad = good;
  bad.corners[1].nodes.clear();
  CHECK_THROWS_AS(bad.validate(Rat(0)), InvalidInput);

  bad = good;
  bad.corners[1].obj = Lagrangian{1, 0, Rat(1, 2), Rat(0)};  // parallel to corner 0
  CHECK_THROWS_AS(bad.validate(Rat(0)), InvalidInput);

  bad = good;
  bad.degrees = {1, 0, 1};  // contradicts the slope order
  CHECK_THROWS_AS(bad.validate(Rat(0)), InvalidInput);

  bad = good;
  bad.points[0] = Vec2{Rat(1, 11), Rat(1, 11)};  // off both cycles
  CHECK_THROWS_AS(bad.validate(Rat(0)), InvalidInput);
}

TEST_CASE("triangle family sums to the classical series") {
  EngineConfig cfg;  // rho = i
  Rat alpha(3, 10);
  TransversalCycle cyc = standard_family(alpha);
  SumDiagnostics diag;
  std::complex<double> total = transversal_sum(cyc, cfg, &diag);
  std::complex<double> expect = theta_series(0.3, 0.0, cfg.rho);
  CHECK(std::abs(total - expect) < 1e-13);
  CHECK(diag.shells_used >= cfg.min_shell);
  CHECK(diag.chains_contributing > 0);
  CHECK(diag.tail < cfg.tail_tol);
  // No isomorphic corners anywhere: the line locus is empty.
  CHECK(line_correction(cyc, cfg) == 0.0);
}

TEST_CASE("chain observer sees each family member exactly once") {
  EngineConfig cfg;
  Rat alpha(3, 10);
  TransversalCycle cyc = standard_family(alpha);
  std::vector<ChainRecord> records;
  std::complex<double> total =
      transversal_sum(cyc, cfg, nullptr, [&](const ChainRecord& r) { records.push_back(r); });

  std::set<std::pair<__int128, __int128>> seen;
  std::complex<double> rebuilt{0.0, 0.0};
  for (const ChainRecord& r : records) {
    CHECK(r.cls == std::string("polygon"));
    CHECK(r.vertices.size() == 3);
    CHECK(r.sigma != 0);
    CHECK(r.V == 1.0);
    CHECK(r.delta_l.size() == 3);
    // area = (alpha + m)^2 / 2 for some integer m, i.e. 200*area is an odd
    // perfect square congruent to 9 mod 20.
    Rat scaled = r.area * Rat(200);
    CHECK(scaled.is_integer());
    long long s = static_cast<long long>(scaled.num());
    auto root = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(s))));
    CHECK(root * root == s);
    CHECK((root % 10 == 3 || root % 10 == 7));
    CHECK(seen.insert({r.area.num(), r.area.den()}).second);  // no duplicates
    rebuilt += std::exp(std::complex<double>{0.0, 2.0 * std::numbers::pi} * cfg.rho *
                        (2.0 * r.area.to_double()));
  }
  CHECK(records.size() >= 8);
  CHECK(std::abs(rebuilt - total) < 1e-13);
}

TEST_CASE("coincident entry points contribute the constant chain") {
  // Three lines through the origin: the point chain survives with weight one.
  Lagrangian a{1, 0, Rat(0), Rat(1, 5)};
  Lagrangian b{1, 1, Rat(0), Rat(1, 7)};
  Lagrangian c{1, 2, Rat(0), Rat(2, 5)};
  TransversalCycle cyc;
  cyc.corners = {{a, {a.beta}}, {b, {b.beta}}, {c, {c.beta}}};
  cyc.points = {Vec2{Rat(0), Rat(0)}, Vec2{Rat(0), Rat(0)}, Vec2{Rat(0), Rat(0)}};
  cyc.degrees = {0, 0, 1};
  EngineConfig cfg;
  int point_records = 0;
  std::complex<double> total =
      transversal_sum(cyc, cfg, nullptr, [&](const ChainRecord& r) {
        if (r.cls == std::string("point")) {
          ++point_records;
          CHECK(r.vertices.size() == 1);
          CHECK(r.sigma == 1);
          CHECK(r.V == 1.0);
          for (const Rat& d : r.delta_l) CHECK(d == Rat(0));
        }
      });
  CHECK(point_records == 1);
  CHECK(std::abs(total) > 0.9);  // dominated by the weight-one constant chain
}

TEST_CASE("grading gate: words without exactly two even entries vanish") {
  Lagrangian a{1, 2, Rat(0), Rat(0)};
  Lagrangian b{1, 1, Rat(1, 3), Rat(0)};
  Lagrangian c{1, 0, Rat(1, 7), Rat(0)};
  TransversalCycle cyc;
  cyc.corners = {{a, {Rat(0)}}, {b, {Rat(0)}}, {c, {Rat(0)}}};
  cyc.points = {Vec2{Rat(1, 3), Rat(2, 3)}, Vec2{Rat(17, 21), Rat(1, 7)},
                Vec2{Rat(1, 14), Rat(1, 7)}};
  cyc.degrees = {1, 1, 0};
  EngineConfig cfg;
  CHECK(transversal_sum(cyc, cfg) == std::complex<double>{0.0, 0.0});
  CHECK(line_correction(cyc, cfg) == 0.0);
}

TEST_CASE("straight-line chains are excluded from the series and observed") {
  EngineConfig cfg;
  cfg.rho = {0.3, 1.1};
  TransversalCycle cyc = carrier_pair_cycle();
  int line_records = 0;
  std::complex<double> total =
      transversal_sum(cyc, cfg, nullptr, [&](const ChainRecord& r) {
        if (r.cls == std::string("line")) {
          ++line_records;
          CHECK(r.sigma == 0);
          CHECK(r.V == 0.0);
          CHECK(r.vertices.size() == 2);
        }
      });
  CHECK(line_records > 0);
  CHECK(std::isfinite(std::abs(total)));
}

TEST_CASE("line locus weight: carrier pair with plain corners") {
  EngineConfig cfg;
  TransversalCycle cyc = carrier_pair_cycle();
  // Both groups have two entries, displacement 4/5 - 1/9 = 31/45 read at the
  // earlier carrier: -4 * (1/2!2!) * saw(31/45) = -(31/45 - 1/2) = -17/90.
  std::complex<double> r = line_correction(cyc, cfg);
  CHECK(std::abs(r - std::complex<double>{-17.0 / 90.0, 0.0}) < 1e-14);
}

TEST_CASE("line locus weight: insertions raise the kernel order") {
  EngineConfig cfg;
  TransversalCycle cyc = carrier_pair_cycle(2, Rat(2, 7) + Rat(1));
  double expect = -4.0 * 0.25 * 1.0 * r_function(3, Rat(31, 45));
  CHECK(std::abs(line_correction(cyc, cfg) - std::complex<double>{expect, 0.0}) < 1e-12);
}

TEST_CASE("line locus with genuinely distinct holonomies is unsupported") {
  EngineConfig cfg;
  TransversalCycle cyc = carrier_pair_cycle(2, Rat(3, 7));
  CHECK_THROWS_AS(line_correction(cyc, cfg), UnsupportedPattern);
}

TEST_CASE("short cycles are trivially zero") {
  Lagrangian a{1, 0, Rat(0), Rat(0)};
  Lagrangian b{0, 1, Rat(1, 4), Rat(0)};
  TransversalCycle cyc;
  cyc.corners = {{a, {Rat(0)}}, {b, {Rat(0)}}};
  cyc.points = {Vec2{Rat(3, 4), Rat(0)}, Vec2{Rat(3, 4), Rat(0)}};
  cyc.degrees = {0, 1};
  EngineConfig cfg;
  CHECK(transversal_sum(cyc, cfg) == std::complex<double>{0.0, 0.0});
  CHECK(line_correction(cyc, cfg) == 0.0);
}

TEST_CASE("truncation cap aborts instead of returning a bad sum") {
  EngineConfig cfg;
  cfg.rho = {0.3, 0.002};  // nearly real: shells decay extremely slowly
  cfg.max_shell = 2;
  TransversalCycle cyc = standard_family(Rat(3, 10));
  CHECK_THROWS_AS(transversal_sum(cyc, cfg), TruncationCapExceeded);
}
