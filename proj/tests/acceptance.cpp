// Acceptance suite: one PASS/FAIL line per criterion. Expected values come
// from the closed-form oracles in ih::localcalc, from the independent
// reference computations in oracle.hpp, or from cross-checks between two
// independent computations by the engine.

#include "ih/localcalc.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace ih;

namespace {

class Criterion {
public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    ++cases_;
    if (ok) return;
    if (failures_.size() < 8) failures_.push_back(what);
    ++failed_;
  }

  template <class Fn>
  void guard(const std::string& what, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      check(false, what + ": threw " + e.what());
    }
  }

  bool report(double seconds) const {
    const bool ok = failed_ == 0 && cases_ > 0;
    for (const auto& f : failures_) std::cout << "    " << f << "\n";
    if (failed_ > failures_.size())
      std::cout << "    ... " << failed_ - failures_.size() << " more\n";
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number_ << "  " << title_
              << "  [" << cases_ - failed_ << "/" << cases_ << " cases, " << timing
              << "]\n";
    return ok;
  }

private:
  int number_;
  std::string title_;
  std::size_t cases_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string show(const GradedModule& m) { return m.to_string(); }

std::string show(const oracle::Graded& g) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << (i ? ", " : "") << g[i].betti;
    for (auto t : g[i].torsion) out << "+Z/" << t;
  }
  out << ")";
  return out.str();
}

const std::vector<CoefficientMode> kModes{CoefficientMode::G0, CoefficientMode::Full};

std::string label(const std::string& space, const Perversity& p, CoefficientMode mode,
                  const std::string& ring = "Z") {
  return space + " p=" + p.to_string() + " " + to_string(mode) + " " + ring;
}

// Every traditional perversity of length n with entries in [0, n].
std::vector<Perversity> traditional_perversities(int n) {
  std::vector<Perversity> out;
  std::vector<int> v(n, 0);
  std::function<void(int)> fill = [&](int k) {
    if (k == n) {
      if (classify(v) == PerversityKind::Traditional) out.emplace_back(v);
      return;
    }
    for (int value = 0; value <= n; ++value) {
      v[k] = value;
      fill(k + 1);
    }
  };
  fill(0);
  return out;
}

// ------------------------------------------------------------ criteria

void ordinary_reduction(Criterion& c) {
  for (const char* name : {"sphere2", "torus", "rp2", "klein"}) {
    const auto x = builtin(name);
    const auto expected = oracle::simplicial_homology(x);
    auto ps = traditional_perversities(x.formal_dim());
    for (const char* family : {"zero", "lower-middle", "upper-middle", "top"})
      ps.push_back(test::named(family, x.formal_dim()));
    for (const auto& p : ps)
      for (auto mode : kModes) {
        const auto what = label(name, p, mode);
        c.guard(what, [&] {
          const auto got = test::to_oracle(intersection_homology(x, p, test::integers(mode)));
          c.check(got == expected, what + ": " + show(got) + " vs oracle " + show(expected));
        });
      }
  }
  // the example quoted for rp2
  const auto rp2 = oracle::simplicial_homology(builtin("rp2"));
  c.check(rp2.size() == 2 && rp2[1].torsion == std::vector<long long>{2},
          "oracle rp2 H1 torsion [2]");
}

void superperverse_sphere(Criterion& c) {
  const auto x = builtin("s2-marked-1");
  const auto super = test::named("gm-super", 2);
  c.guard("s2-marked-1", [&] {
    const auto g0 = intersection_homology(x, super, test::integers());
    c.check(g0[0].is_zero(), "gm-super g0 H0 = " + g0[0].to_string() + ", expected 0");
    const auto full = intersection_homology(x, super, test::integers(CoefficientMode::Full));
    c.check(full[0] == ModuleGroup{1, {}},
            "gm-super full H0 = " + full[0].to_string() + ", expected Z");
    const auto zero = intersection_homology(x, test::named("zero", 2), test::integers());
    c.check(zero == GradedModule::free({1, 0, 1}), "zero g0 = " + show(zero) + ", expected (Z, 0, Z)");
  });
}

void multipoint(Criterion& c) {
  const auto super = test::named("gm-super", 2);
  for (int m : {2, 3}) {
    const std::string name = "s2-marked-" + std::to_string(m);
    c.guard(name, [&] {
      const auto x = builtin(name);
      const auto coarse = intersection_homology(x, super, test::integers());
      const auto fine = intersection_homology(barycentric_subdivide(x), super, test::integers());
      for (const auto* h : {&coarse, &fine}) {
        const std::string which = h == &coarse ? name : "sd " + name;
        c.check((*h)[1] == ModuleGroup{static_cast<std::size_t>(m - 1), {}},
                which + " IH1 = " + (*h)[1].to_string() + ", expected free of rank " +
                    std::to_string(m - 1));
        c.check((*h)[0].is_zero(), which + " IH0 = " + (*h)[0].to_string());
      }
      c.check(coarse == fine, name + ": triangulations disagree " + show(coarse) + " vs " +
                                  show(fine));
    });
  }
}

struct ConeCase {
  FilteredComplex link;
  FilteredComplex cone;
  std::set<Simplex> base;
  std::string name;
};

std::vector<ConeCase> cone_grid() {
  std::vector<ConeCase> out;
  for (const char* name : {"sphere1", "torus", "rp2"}) {
    ConeCase k{builtin(name), {}, {}, name};
    k.cone = ih::cone(k.link);
    k.base = test::cone_base(k.cone);
    out.push_back(std::move(k));
  }
  return out;
}

void cone_formula(Criterion& c, bool closed) {
  for (const auto& k : cone_grid()) {
    const int n = k.cone.formal_dim();
    for (const char* pname : {"zero", "lower-middle", "top", "gm-super"}) {
      const auto p = test::named(pname, n);
      for (const char* ring : {"Z", "Q", "F2"}) {
        const auto what = label("cone " + k.name, p, CoefficientMode::G0, ring);
        c.guard(what, [&] {
          const auto sys = test::constant(Ring::parse(ring));
          const auto link = intersection_homology(k.link, p.restricted(n - 1), sys);
          const auto expected = closed ? localcalc::cone_closed_support(link, n, p)
                                       : localcalc::cone_compact(link, n, p);
          const auto got = closed ? relative_homology(k.cone, k.base, p, sys)
                                  : intersection_homology(k.cone, p, sys);
          c.check(got == expected, what + ": chains " + show(got) + " vs formula " + show(expected));
        });
      }
    }
  }
}

void subdivision(Criterion& c) {
  for (const auto& name : builtin_names()) {
    const auto x = builtin(name);
    const auto sd = barycentric_subdivide(x);
    for (const char* pname : {"zero", "gm-super"}) {
      const auto p = test::named(pname, x.formal_dim());
      for (auto mode : kModes) {
        const auto what = label(name, p, mode);
        c.guard(what, [&] {
          const auto a = intersection_homology(x, p, test::integers(mode));
          const auto b = intersection_homology(sd, p, test::integers(mode));
          c.check(a == b, what + ": " + show(a) + " but subdivided " + show(b));
        });
      }
    }
  }
}

void homotopy(Criterion& c) {
  for (const char* name : {"s2-marked-1", "cone-torus"}) {
    const auto x = builtin(name);
    const auto prod = product_with_graph(x, LineGraph::path(3));
    for (const char* pname : {"zero", "gm-super"})
      for (auto mode : kModes) {
        const auto p = test::named(pname, x.formal_dim());
        const auto what = label(name, p, mode);
        c.guard(what, [&] {
          const auto a = intersection_homology(x, p, test::integers(mode));
          const auto b = intersection_homology(prod, test::named(pname, prod.formal_dim()),
                                               test::integers(mode));
          c.check(a == b, what + ": " + show(a) + " but X x I gives " + show(b));
        });
      }
  }
}

void excision(Criterion& c) {
  const auto x = builtin("s2-marked-1");
  const Vertex v = 1;  // regular
  const auto a = closed_star(x, v);
  const auto rest = complement_of_open_star(x, v);
  const auto x_minus_v = subcomplex(x, rest);
  std::set<Simplex> a_minus_v;
  for (const auto& s : a)
    if (rest.count(s)) a_minus_v.insert(s);
  for (const char* pname : {"zero", "gm-super"})
    for (auto mode : kModes) {
      const auto p = test::named(pname, 2);
      const auto what = label("s2-marked-1", p, mode);
      c.guard(what, [&] {
        const auto whole = relative_homology(x, a, p, test::integers(mode));
        const auto excised = relative_homology(x_minus_v, a_minus_v, p, test::integers(mode));
        c.check(whole == excised, what + ": IH(X,A) " + show(whole) + " vs IH(X-V,A-V) " +
                                      show(excised));
      });
    }
}

void exactness(Criterion& c) {
  const auto ct = builtin("cone-torus");
  const auto sm = builtin("s2-marked-1");
  const std::vector<std::tuple<std::string, FilteredComplex, std::set<Simplex>>> pairs{
      {"(cT2, T2)", ct, test::cone_base(ct)}, {"(s2-marked-1, star 0)", sm, closed_star(sm, 0)}};
  for (const auto& [name, x, a] : pairs)
    for (const char* pname : {"zero", "lower-middle", "gm-super"})
      for (const char* ring : {"Q", "F2", "Z"}) {
        const auto p = test::named(pname, x.formal_dim());
        const auto what = label(name, p, CoefficientMode::G0, ring);
        c.guard(what, [&] {
          const auto r = les_check(x, a, p, test::constant(Ring::parse(ring)));
          std::string detail;
          for (const auto& f : r.failures()) detail += " " + f;
          c.check(r.exact() && !r.nodes.empty(), what + ":" + detail);
          c.check(r.rank_only == (std::string(ring) == "Z"), what + ": wrong comparison kind");
        });
      }
}

void duality(Criterion& c) {
  const auto x = builtin("susp-torus");
  const std::vector<std::pair<const char*, const char*>> pairs{{"zero", "top"},
                                                               {"lower-middle", "upper-middle"}};
  for (const auto& [pn, qn] : pairs) {
    const auto p = test::named(pn, 3), q = test::named(qn, 3);
    const auto what = std::string("susp-torus ") + pn + "/" + qn;
    c.guard(what, [&] {
      c.check(complement(p, 3) == q, what + ": not complementary");
      const auto sys = test::constant(Ring::rationals());
      const auto hp = intersection_homology(x, p, sys);
      const auto hq = intersection_homology(x, q, sys);
      for (std::size_t i = 0; i <= 3; ++i)
        c.check(hp[i].betti == hq[3 - i].betti,
                what + ": betti_" + std::to_string(i) + " = " + std::to_string(hp[i].betti) +
                    " but dual betti_" + std::to_string(3 - i) + " = " +
                    std::to_string(hq[3 - i].betti));
    });
  }
}

// ----------------------------------------------------- structural suite

struct Gauge {
  // random 2x2 unimodular integer matrix and its inverse
  Matrix<Rational> g, inv;
};

Gauge random_gauge(std::mt19937& rng) {
  Gauge out{Matrix<Rational>::identity(2, Rational(0), Rational(1)),
            Matrix<Rational>::identity(2, Rational(0), Rational(1))};
  std::uniform_int_distribution<int> step(0, 3), amount(-2, 2);
  const auto mul = [](const Matrix<Rational>& a, const Matrix<Rational>& b) {
    Matrix<Rational> m(2, 2, Rational(0));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return m;
  };
  for (int k = 0; k < 4; ++k) {
    Matrix<Rational> e = Matrix<Rational>::identity(2, Rational(0), Rational(1));
    Matrix<Rational> e_inv = e;
    const int t = amount(rng);
    switch (step(rng)) {
      case 0: e(0, 1) = t; e_inv(0, 1) = -t; break;
      case 1: e(1, 0) = t; e_inv(1, 0) = -t; break;
      case 2: e(0, 0) = -1; e_inv(0, 0) = -1; break;
      default: e(0, 0) = e(1, 1) = 0; e(0, 1) = e(1, 0) = 1; e_inv = e; break;
    }
    out.g = mul(e, out.g);
    out.inv = mul(out.inv, e_inv);
  }
  return out;
}

FilteredComplex random_complex(std::mt19937& rng) {
  std::uniform_int_distribution<int> facet_count(2, 6), dim(1, 3), vertex(0, 7);
  std::vector<std::vector<Vertex>> facets;
  const int count = facet_count(rng);
  for (int f = 0; f < count; ++f) {
    std::set<Vertex> vs;
    const int d = dim(rng);
    while (static_cast<int>(vs.size()) < d + 1) vs.insert(vertex(rng));
    facets.emplace_back(vs.begin(), vs.end());
  }
  const auto closure = build_complex(facets);
  const int n = closure.formal_dim();
  std::map<int, std::vector<std::vector<Vertex>>> gens;
  std::uniform_int_distribution<int> level(0, n - 1), marks(0, 3);
  std::vector<Simplex> all;
  for (const auto& [s, j] : closure.skeleton_map())
    if (s.dimension() < n) all.push_back(s);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  const int m = marks(rng);
  for (int k = 0; k < m; ++k) {
    const Simplex& s = all[pick(rng)];
    const int j = std::max(level(rng), s.dimension());
    if (j < n) gens[j].push_back(s.vertices());
  }
  return build_complex(facets, gens, n);
}

// Gauge transports T(s -> f) = g(f) g(s)^{-1} on every regular incidence.
TransportMap gauge_transports(const FilteredComplex& x, std::mt19937& rng) {
  std::map<Simplex, Gauge> gauge;
  for (const auto& [s, j] : x.skeleton_map())
    if (j == x.formal_dim()) gauge.emplace(s, random_gauge(rng));
  TransportMap t;
  for (const auto& [s, g] : gauge) {
    if (s.dimension() == 0) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Simplex f = s.facet(i);
      auto it = gauge.find(f);
      if (it == gauge.end()) continue;
      Matrix<Rational> m(2, 2, Rational(0));
      for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col)
          m(r, col) = it->second.g(r, 0) * g.inv(0, col) + it->second.g(r, 1) * g.inv(1, col);
      t.emplace(Incidence{s, f}, m);
    }
  }
  return t;
}

template <class R>
bool ambient_squares_to_zero(const R& ring, const FilteredComplex& x, const CoefficientSystem& sys) {
  for (int i = 2; i <= x.max_dimension(); ++i) {
    const auto a = ambient_boundary(ring, x, sys, i - 1);
    const auto b = ambient_boundary(ring, x, sys, i);
    if (!linalg::is_zero_matrix(ring, linalg::to_dense(ring, linalg::multiply(ring, a, b))))
      return false;
  }
  return true;
}

void structural(Criterion& c) {
  std::mt19937 rng(20240611);
  const IntegerRing z;
  std::uniform_int_distribution<int> pval(-1, 3);
  std::vector<FilteredComplex> samples;

  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_complex(rng);
    samples.push_back(x);
    std::vector<int> values(x.formal_dim());
    for (auto& v : values) v = pval(rng);
    const Perversity p(values);
    const auto what = "random #" + std::to_string(trial) + " p=" + p.to_string();
    c.guard(what, [&] {
      const auto local = build_local_system(x, gauge_transports(x, rng), Ring::integers(), 2);
      const auto full = test::constant(Ring::integers(), CoefficientMode::Full, 2);
      for (const auto* sys : {&local, &full}) {
        const auto tag = what + " " + to_string(sys->mode());
        c.check(ambient_squares_to_zero(z, x, *sys), tag + ": ambient boundary squares nonzero");
        c.check(boundary_squares_to_zero(build_ic_complex(z, x, p, *sys).chains()),
                tag + ": IC boundary squares nonzero");
      }
    });
  }

  // corrupted transport sets must be rejected
  int corrupted = 0;
  for (int attempt = 0; corrupted < 20 && attempt < 2000; ++attempt) {
    const auto x = random_complex(rng);
    auto t = gauge_transports(x, rng);
    std::vector<Incidence> targets;
    for (const auto& [inc, m] : t) {
      if (inc.first.dimension() < 2) continue;
      for (std::size_t i = 0; i < inc.second.size(); ++i)
        if (x.skeleton(inc.second.facet(i)) == x.formal_dim()) {
          targets.push_back(inc);
          break;
        }
    }
    if (targets.empty()) continue;
    const Incidence victim = targets[rng() % targets.size()];
    Matrix<Rational>& m = t.at(victim);
    if (corrupted % 2 == 0) {
      // still unimodular, breaks only the cocycle condition
      for (int r = 0; r < 2; ++r) m(0, r) += m(1, r);
    } else {
      // determinant doubles: not invertible over Z
      for (int r = 0; r < 2; ++r) m(0, r) *= 2;
    }
    bool rejected = false;
    try {
      build_local_system(x, t, Ring::integers(), 2);
    } catch (const CoefficientError&) {
      rejected = true;
    }
    c.check(rejected, "corrupted transport set #" + std::to_string(corrupted) + " accepted (" +
                          victim.first.to_string() + "->" + victim.second.to_string() + ")");
    ++corrupted;
  }
  c.check(corrupted == 20, "could only build " + std::to_string(corrupted) + " corrupted sets");

  // loose perversities that allow every simplex
  for (const auto& name : builtin_names()) samples.push_back(builtin(name));
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& x = samples[k];
    const int n = x.formal_dim();
    std::vector<int> values(n);
    for (int i = 1; i <= n; ++i) values[i - 1] = 2 * i + 3;
    const Perversity p(values);
    const auto what = "saturation sample #" + std::to_string(k);
    c.guard(what, [&] {
      if (n >= 2) c.check(p.kind() == PerversityKind::Loose, what + ": perversity not loose");
      const auto full = test::to_oracle(intersection_homology(x, p, test::integers(CoefficientMode::Full)));
      const auto expect_full = oracle::simplicial_homology(x);
      c.check(full == expect_full, what + " full: " + show(full) + " vs H(X) " + show(expect_full));
      const auto g0 = test::to_oracle(intersection_homology(x, p, test::integers()));
      const auto expect_g0 = oracle::simplicial_homology(x, n - 1);
      c.check(g0 == expect_g0, what + " g0: " + show(g0) + " vs H(X, X^{n-1}) " + show(expect_g0));
    });
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"ordinary homology reduction", ordinary_reduction},
      {"superperverse sphere example", superperverse_sphere},
      {"multi-point refinement", multipoint},
      {"compact cone formula", [](Criterion& c) { cone_formula(c, false); }},
      {"closed-support cone identification", [](Criterion& c) { cone_formula(c, true); }},
      {"subdivision invariance", subdivision},
      {"homotopy invariance surrogate", homotopy},
      {"excision surrogate", excision},
      {"long exact sequence exactness", exactness},
      {"duality Betti symmetry", duality},
      {"structural invariants", structural},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c(static_cast<int>(i + 1), criteria[i].first);
    const auto start = std::chrono::steady_clock::now();
    c.guard("criterion body", [&] { criteria[i].second(c); });
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    if (!c.report(took.count())) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << "\n";
  return failed ? 1 : 0;
}
