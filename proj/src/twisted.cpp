#include "fukaya/twisted.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <utility>

#include "fukaya/errors.hpp"

namespace fukaya {

namespace {

bool same_summands(const TwistedComplex& x, const TwistedComplex& y) {
  if (x.size() != y.size()) return false;
  for (int i = 0; i < x.size(); ++i)
    if (!(x.summands[i].obj == y.summands[i].obj) ||
        x.summands[i].shift != y.summands[i].shift)
      return false;
  return true;
}

bool entry_nonzero(const Element& e) {
  for (const auto& [key, c] : e.coef)
    if (std::abs(c) != 0.0) return true;
  return false;
}

int parity_sign(long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

// Degree-shifted product of a list of combinations: expands multilinearly,
// applies the suspension twist per basis word, and multiplies the plain
// n-ary product by the word's coefficient.
Element graded_product(const std::vector<const Element*>& args, const Lagrangian& src,
                       const Lagrangian& dst, const EngineConfig& cfg) {
  Element out{src, dst, {}};
  Word word(args.size());
  std::vector<int> degrees(args.size());
  std::function<void(size_t, std::complex<double>)> expand =
      [&](size_t pos, std::complex<double> coef) {
        if (pos == args.size()) {
          int sgn = suspension_sign(degrees);
          Element p = product(word, cfg);
          p *= coef * static_cast<double>(sgn);
          out += p;
          return;
        }
        const Element& e = *args[pos];
        for (const auto& [key, c] : e.coef) {
          if (std::abs(c) == 0.0) continue;
          const auto& [deg, iso, label] = key;
          word[pos] = iso ? make_iso(e.src, e.dst, deg)
                          : make_transversal(e.src, e.dst, label, cfg.theta);
          degrees[pos] = deg;
          expand(pos + 1, coef * c);
        }
      };
  expand(0, {1.0, 0.0});
  return out;
}

}  // namespace

TwistedComplex TwistedComplex::direct(const Lagrangian& a, int shift) {
  TwistedComplex tc;
  tc.summands.push_back({a, shift});
  tc.connection.assign(1, std::vector<Element>(1, Element{a, a, {}}));
  return tc;
}

void TwistedComplex::validate(const Rat& theta) const {
  const int l = size();
  if (l == 0) throw InvalidInput("twisted complex without summands");
  if (l > 8) throw InvalidInput("twisted complex too large (more than 8 summands)");
  if (static_cast<int>(connection.size()) != l)
    throw InvalidInput("connection matrix has wrong shape");
  for (int i = 0; i < l; ++i) {
    summands[i].obj.validate();
    if (static_cast<int>(connection[i].size()) != l)
      throw InvalidInput("connection matrix has wrong shape");
    for (int j = 0; j < l; ++j) {
      const Element& e = connection[i][j];
      if (j <= i && entry_nonzero(e))
        throw InvalidInput("connection must be strictly upper triangular");
      if (!entry_nonzero(e)) continue;
      if (!(e.src == summands[i].obj) || !(e.dst == summands[j].obj))
        throw InvalidInput("connection entry lives in the wrong hom space");
      int want = 1 - summands[i].shift + summands[j].shift;
      for (const auto& [key, c] : e.coef) {
        if (std::abs(c) == 0.0) continue;
        if (std::get<0>(key) != want)
          throw InvalidInput("connection entry has wrong degree for its shifts");
      }
      (void)theta;
    }
  }
}

TwMorphism TwMorphism::zero(const TwistedComplex& from, const TwistedComplex& to, int degree) {
  TwMorphism g;
  g.src = from;
  g.dst = to;
  g.degree = degree;
  g.entry.assign(from.size(), {});
  for (int i = 0; i < from.size(); ++i)
    for (int j = 0; j < to.size(); ++j)
      g.entry[i].push_back(Element{from.summands[i].obj, to.summands[j].obj, {}});
  return g;
}

void TwMorphism::validate(const Rat& theta) const {
  src.validate(theta);
  dst.validate(theta);
  if (static_cast<int>(entry.size()) != src.size())
    throw InvalidInput("morphism matrix has wrong shape");
  for (int i = 0; i < src.size(); ++i) {
    if (static_cast<int>(entry[i].size()) != dst.size())
      throw InvalidInput("morphism matrix has wrong shape");
    for (int j = 0; j < dst.size(); ++j) {
      const Element& e = entry[i][j];
      if (!entry_nonzero(e)) continue;
      if (!(e.src == src.summands[i].obj) || !(e.dst == dst.summands[j].obj))
        throw InvalidInput("morphism entry lives in the wrong hom space");
      int want = degree - src.summands[i].shift + dst.summands[j].shift;
      for (const auto& [key, c] : e.coef) {
        if (std::abs(c) == 0.0) continue;
        if (std::get<0>(key) != want)
          throw InvalidInput("morphism entry has wrong degree for its shifts");
      }
    }
  }
}

double TwMorphism::max_norm() const {
  double m = 0.0;
  for (const auto& row : entry)
    for (const Element& e : row) m = std::max(m, e.norm());
  return m;
}

namespace {

// Walks strictly increasing connection paths inside complex `tc` starting at
// summand `at`, collecting entries into `args`, and calls `sink(at)` at every
// stop (including the empty walk).
void walk_connection(const TwistedComplex& tc, int at, std::vector<const Element*>& args,
                     const std::function<void(int)>& sink) {
  sink(at);
  for (int next = at + 1; next < tc.size(); ++next) {
    const Element& step = tc.connection[at][next];
    if (!entry_nonzero(step)) continue;
    args.push_back(&step);
    walk_connection(tc, next, args, sink);
    args.pop_back();
  }
}

}  // namespace

TwMorphism tw_product(const std::vector<TwMorphism>& chain, const EngineConfig& cfg) {
  cfg.validate();
  if (chain.empty()) throw InvalidInput("empty product chain");
  const int n = static_cast<int>(chain.size());
  for (int k = 0; k + 1 < n; ++k)
    if (!same_summands(chain[k].dst, chain[k + 1].src))
      throw InvalidInput("product chain endpoints do not match");
  for (const TwMorphism& g : chain) g.validate(cfg.theta);

  const TwistedComplex& X = chain.front().src;
  const TwistedComplex& Y = chain.back().dst;
  int degree = 2 - n;
  for (const TwMorphism& g : chain) degree += g.degree;
  TwMorphism out = TwMorphism::zero(X, Y, degree);

  // Depth-first over: insertions in X, entry of chain[0], insertions in its
  // target, entry of chain[1], ... , insertions in Y.
  std::vector<const Element*> args;
  for (int start = 0; start < X.size(); ++start) {
    const int r1 = X.summands[start].shift;
    std::function<void(int, int)> advance = [&](int k, int at) {
      // k = number of chain entries consumed; `at` = current summand index
      // in the complex chain[k-1].dst (or X when k = 0).
      const TwistedComplex& here = k == 0 ? X : chain[k - 1].dst;
      walk_connection(here, at, args, [&](int stop) {
        if (k == n) {
          std::complex<double> sgn{
              static_cast<double>(parity_sign(static_cast<long long>(args.size()) * r1)), 0.0};
          Element val = graded_product(args, X.summands[start].obj,
                                       Y.summands[stop].obj, cfg);
          val *= sgn;
          out.entry[start][stop] += val;
          return;
        }
        const TwistedComplex& to = chain[k].dst;
        for (int j = 0; j < to.size(); ++j) {
          const Element& e = chain[k].entry[stop][j];
          if (!entry_nonzero(e)) continue;
          args.push_back(&e);
          advance(k + 1, j);
          args.pop_back();
        }
      });
    };
    advance(0, start);
  }
  return out;
}

TwMorphism tw_differential(const TwMorphism& g, const EngineConfig& cfg) {
  return tw_product({g}, cfg);
}

double mc_residual(const TwistedComplex& tc, const EngineConfig& cfg) {
  cfg.validate();
  tc.validate(cfg.theta);
  double res = 0.0;
  std::vector<const Element*> args;
  for (int start = 0; start < tc.size(); ++start) {
    const int r1 = tc.summands[start].shift;
    walk_connection(tc, start, args, [&](int stop) {
      if (args.empty()) return;  // need at least one factor
      Element val = graded_product(args, tc.summands[start].obj,
                                   tc.summands[stop].obj, cfg);
      val *= std::complex<double>{
          static_cast<double>(parity_sign(static_cast<long long>(args.size()) * r1)), 0.0};
      res = std::max(res, val.norm());
    });
  }
  return res;
}

TwistedComplex cone(const TwMorphism& w, const EngineConfig& cfg) {
  cfg.validate();
  w.validate(cfg.theta);
  if (w.degree != 1)
    throw InvalidInput("cone expects a morphism of degree 0 out of the shifted-down source");
  double res = tw_differential(w, cfg).max_norm();
  if (res > cfg.tol)
    throw NotClosed("cone of a non-closed morphism (residual " + std::to_string(res) + ")");

  const int lc = w.src.size(), la = w.dst.size();
  TwistedComplex out;
  out.summands = w.src.summands;
  out.summands.insert(out.summands.end(), w.dst.summands.begin(), w.dst.summands.end());
  const int l = lc + la;
  out.connection.assign(l, {});
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      out.connection[i].push_back(
          Element{out.summands[i].obj, out.summands[j].obj, {}});
  for (int i = 0; i < lc; ++i)
    for (int j = 0; j < lc; ++j) out.connection[i][j] = w.src.connection[i][j];
  for (int i = 0; i < la; ++i)
    for (int j = 0; j < la; ++j) out.connection[lc + i][lc + j] = w.dst.connection[i][j];
  for (int i = 0; i < lc; ++i)
    for (int j = 0; j < la; ++j) out.connection[i][lc + j] = w.entry[i][j];
  out.validate(cfg.theta);
  return out;
}

namespace {

// Deviation of a square matrix morphism from scalar * (unit basis diagonal);
// returns the scalar read off the first diagonal entry.
std::pair<std::complex<double>, double> identity_deviation(const TwMorphism& p) {
  std::complex<double> scalar{0.0, 0.0};
  double dev = 0.0;
  for (int i = 0; i < p.src.size(); ++i) {
    for (int j = 0; j < p.dst.size(); ++j) {
      const Element& e = p.entry[i][j];
      for (const auto& [key, c] : e.coef) {
        bool is_unit = i == j && std::get<0>(key) == 0 && std::get<1>(key);
        if (!is_unit) {
          dev = std::max(dev, std::abs(c));
          continue;
        }
        if (i == 0)
          scalar = c;
        else
          dev = std::max(dev, std::abs(c - scalar));
      }
    }
  }
  return {scalar, dev};
}

}  // namespace

IsoCertificate check_isomorphism_pair(const TwMorphism& g1, const TwMorphism& g2,
                                      const EngineConfig& cfg) {
  cfg.validate();
  g1.validate(cfg.theta);
  g2.validate(cfg.theta);
  IsoCertificate cert;
  if (!same_summands(g1.dst, g2.src) || !same_summands(g2.dst, g1.src)) {
    cert.reason = "endpoints do not form a round trip";
    return cert;
  }
  if (g1.degree != 0 || g2.degree != 0) {
    cert.reason = "generators must have degree 0";
    return cert;
  }
  cert.closed_residual = std::max(tw_differential(g1, cfg).max_norm(),
                                  tw_differential(g2, cfg).max_norm());
  if (cert.closed_residual > cfg.tol) {
    cert.reason = "generator is not closed";
    return cert;
  }
  TwMorphism p = tw_product({g1, g2}, cfg);
  TwMorphism q = tw_product({g2, g1}, cfg);
  auto [sp, devp] = identity_deviation(p);
  auto [sq, devq] = identity_deviation(q);
  cert.scalar = sp;
  cert.identity_deviation = std::max({devp, devq, std::abs(sp - sq)});
  if (cert.identity_deviation > cfg.tol) {
    cert.reason = "round trips are not equal scalar multiples of identity";
    return cert;
  }
  if (std::abs(sp) <= cfg.tol) {
    cert.reason = "round-trip scalar vanishes";
    return cert;
  }
  cert.accepted = true;
  cert.reason = "isomorphism certified";
  return cert;
}

ConeScenario build_cone_scenario(const Rat& alpha, const Rat& beta, const EngineConfig& cfg) {
  ConeScenario sc;
  sc.a = Lagrangian{1, 0, Rat(0), Rat(0)};
  sc.c = Lagrangian{1, 1, Rat(0), Rat(0)};
  sc.b = Lagrangian{2, 1, alpha, beta};

  TwistedComplex C = TwistedComplex::direct(sc.c);
  TwistedComplex A = TwistedComplex::direct(sc.a);
  TwMorphism vca = TwMorphism::zero(C, A, 1);
  vca.entry[0][0].add(make_transversal(sc.c, sc.a, 0, cfg.theta), {1.0, 0.0});
  sc.cone_ca = cone(vca, cfg);

  TwistedComplex B = TwistedComplex::direct(sc.b);
  sc.g1 = TwMorphism::zero(B, sc.cone_ca, 0);
  sc.g1.entry[0][0].add(make_transversal(sc.b, sc.c, 0, cfg.theta), {1.0, 0.0});
  sc.g2 = TwMorphism::zero(sc.cone_ca, B, 0);
  sc.g2.entry[1][0].add(make_transversal(sc.a, sc.b, 0, cfg.theta), {1.0, 0.0});
  return sc;
}

}  // namespace fukaya
