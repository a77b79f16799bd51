#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ih/coefficients.hpp"
#include "support.hpp"

using namespace ih;

namespace {

Matrix<Rational> scalar(long v) { return Matrix<Rational>(1, 1, Rational(v)); }

// S^2 as the suspension of a square 0-1-2-3; the two suspension points are
// the only singular simplices.
struct Pillow {
  FilteredComplex x = suspension(build_complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  Vertex north = 4, south = 5;

  Pillow() {
    REQUIRE(x.skeleton(Simplex{north}) == 0);
    REQUIRE(x.skeleton(Simplex{south}) == 0);
  }

  // Cut along the meridian through vertex 0: every incidence crossing from
  // the sector 0-3 into the cut picks up the factor `v`.
  TransportMap cut(long v) const {
    TransportMap t;
    t[{Simplex{0, 3, north}, Simplex{0, north}}] = scalar(v);
    t[{Simplex{0, 3, south}, Simplex{0, south}}] = scalar(v);
    t[{Simplex{0, 3}, Simplex{0}}] = scalar(v);
    return t;
  }
};

}  // namespace

TEST_CASE("constant systems") {
  const auto z0 = CoefficientSystem::constant(Ring::integers(), CoefficientMode::G0, 1);
  CHECK(z0.is_constant());
  CHECK(z0.ring().name() == "Z");
  CHECK(to_string(z0.mode()) == "g0");
  const auto king = CoefficientSystem::constant(Ring::integers(), CoefficientMode::Full, 1);
  CHECK(to_string(king.mode()) == "full");
  const auto f2 = CoefficientSystem::constant(Ring::parse("F2"), CoefficientMode::G0, 1);
  CHECK(f2.ring().name() == "Fp:2");
  CHECK(f2.transport(Simplex{0, 1}, Simplex{0}) == nullptr);
  CHECK_THROWS_AS(CoefficientSystem::constant(Ring::integers(), CoefficientMode::G0, 0),
                  CoefficientError);
  CHECK_THROWS_AS(Ring::parse("Fp:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mode("king"), std::invalid_argument);
}

TEST_CASE("identity transports give the constant system") {
  const Pillow s;
  TransportMap t;
  t[{Simplex{0, 1, s.north}, Simplex{0, 1}}] = scalar(1);
  const auto sys = build_local_system(s.x, t, Ring::integers(), 1);
  const auto p = test::named("zero", 2);
  CHECK(intersection_homology(s.x, p, sys) == intersection_homology(s.x, p, test::integers()));
}

TEST_CASE("meridian cut with monodromy -1") {
  const Pillow s;
  const auto sys = build_local_system(s.x, s.cut(-1), Ring::integers(), 1);
  CHECK(!sys.is_constant());
  CHECK(sys.mode() == CoefficientMode::G0);
  CHECK(!find_cocycle_violation(s.x, sys));

  const auto p = test::named("zero", 2);
  // the allowable part is the equator circle with monodromy -1
  const auto h = intersection_homology(s.x, p, sys);
  CHECK(h[0].betti == 0);
  CHECK(h[0].torsion == std::vector<Integer>{2});
  CHECK(h[1].is_zero());
  CHECK(h[2].is_zero());

  const auto q = build_local_system(s.x, s.cut(-1), Ring::rationals(), 1);
  CHECK(intersection_homology(s.x, p, q).is_zero());
  // over F_2 the sign is invisible
  const auto f2 = build_local_system(s.x, s.cut(-1), Ring::parse("F2"), 1);
  CHECK(intersection_homology(s.x, p, f2) ==
        intersection_homology(s.x, p, test::constant(Ring::parse("F2"))));
}

TEST_CASE("single flipped incidence breaks the cocycle condition") {
  const Pillow s;
  TransportMap t;
  t[{Simplex{0, 3, s.north}, Simplex{0, s.north}}] = scalar(-1);
  CHECK_THROWS_AS(build_local_system(s.x, t, Ring::integers(), 1), CoefficientError);
}

TEST_CASE("transports must be invertible over the ring") {
  const Pillow s;
  CHECK_THROWS_AS(build_local_system(s.x, s.cut(2), Ring::integers(), 1), CoefficientError);
  CHECK_NOTHROW(build_local_system(s.x, s.cut(2), Ring::rationals(), 1));
  CHECK_THROWS_AS(build_local_system(s.x, s.cut(2), Ring::parse("F2"), 1), CoefficientError);
  CHECK_NOTHROW(build_local_system(s.x, s.cut(2), Ring::parse("Fp:3"), 1));
}

TEST_CASE("transports only on regular facet incidences") {
  const Pillow s;
  TransportMap singular;
  singular[{Simplex{0, s.north}, Simplex{s.north}}] = scalar(-1);
  CHECK_THROWS_AS(build_local_system(s.x, singular, Ring::integers(), 1), CoefficientError);
  TransportMap not_facet;
  not_facet[{Simplex{0, 1, s.north}, Simplex{0}}] = scalar(-1);
  CHECK_THROWS_AS(build_local_system(s.x, not_facet, Ring::integers(), 1), CoefficientError);
  TransportMap wrong_shape;
  wrong_shape[{Simplex{0, 1, s.north}, Simplex{0, 1}}] = scalar(1);
  CHECK_THROWS_AS(build_local_system(s.x, wrong_shape, Ring::integers(), 2), CoefficientError);
}

TEST_CASE("rank-2 gauge system") {
  // T(sigma -> tau) = g(tau) g(sigma)^{-1} with g = [[1,1],[0,1]] on the
  // simplices containing vertex 0 and the identity elsewhere.
  const Pillow s;
  Matrix<Rational> g(2, 2, Rational(0)), g_inv(2, 2, Rational(0));
  g(0, 0) = g(1, 1) = g(0, 1) = 1;
  g_inv(0, 0) = g_inv(1, 1) = 1;
  g_inv(0, 1) = -1;
  TransportMap t;
  for (const auto& [sigma, j] : s.x.skeleton_map()) {
    if (j < 2 || sigma.dimension() == 0) continue;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      const Simplex tau = sigma.facet(i);
      if (s.x.skeleton(tau) < 2) continue;
      const bool a = sigma.contains(0), b = tau.contains(0);
      if (a == b) continue;
      t[{sigma, tau}] = a ? g_inv : g;
    }
  }
  const auto sys = build_local_system(s.x, t, Ring::integers(), 2);
  for (const char* name : {"zero", "gm-super"}) {
    const auto p = test::named(name, 2);
    CHECK(intersection_homology(s.x, p, sys) ==
          intersection_homology(s.x, p, test::constant(Ring::integers(),
                                                        CoefficientMode::G0, 2)));
  }
}
