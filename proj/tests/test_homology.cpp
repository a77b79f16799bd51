#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ih/homology.hpp"
#include "support.hpp"

using namespace ih;

TEST_CASE("ordinary homology of closed surfaces") {
  const auto p = test::named("zero", 2);
  const auto t = intersection_homology(builtin("torus"), p, test::integers());
  CHECK(t == GradedModule::free({1, 2, 1}));
  const auto rp2 = intersection_homology(builtin("rp2"), p, test::integers());
  CHECK(rp2[0] == ModuleGroup{1, {}});
  CHECK(rp2[1] == ModuleGroup{0, {Integer(2)}});
  CHECK(rp2[2].is_zero());
  const auto k = intersection_homology(builtin("klein"), p, test::integers());
  CHECK(k[1] == ModuleGroup{1, {Integer(2)}});
  CHECK(k[2].is_zero());
  for (const char* name : {"torus", "rp2", "klein", "sphere3"}) {
    const auto x = builtin(name);
    CHECK(test::to_oracle(intersection_homology(x, test::named("zero", x.formal_dim()),
                                                test::integers())) ==
          oracle::simplicial_homology(x));
  }
}

TEST_CASE("rp2 over other rings") {
  const auto x = builtin("rp2");
  const auto p = test::named("zero", 2);
  CHECK(intersection_homology(x, p, test::constant(Ring::rationals())) ==
        GradedModule::free({1}));
  CHECK(intersection_homology(x, p, test::constant(Ring::parse("F2"))) ==
        GradedModule::free({1, 1, 1}));
  CHECK(intersection_homology(x, p, test::constant(Ring::parse("Fp:3"))) ==
        GradedModule::free({1}));
}

TEST_CASE("marked sphere") {
  const auto x = builtin("s2-marked-1");
  const auto super = test::named("gm-super", 2);
  CHECK(intersection_homology(x, super, test::integers())[0].betti == 0);
  CHECK(intersection_homology(x, super, test::integers(CoefficientMode::Full)) ==
        GradedModule::free({1, 0, 1}));
  CHECK(intersection_homology(x, test::named("zero", 2), test::integers()) ==
        GradedModule::free({1, 0, 1}));
}

TEST_CASE("stalk rank multiplies bettis and torsion") {
  const auto x = builtin("rp2");
  const auto h = intersection_homology(x, test::named("zero", 2),
                                       test::constant(Ring::integers(), CoefficientMode::G0, 2));
  CHECK(h[0].betti == 2);
  CHECK(h[1].torsion == std::vector<Integer>{2, 2});
}

TEST_CASE("relative homology") {
  const auto x = builtin("sphere2");
  const auto p = test::named("zero", 2);
  // (S^2, closed star of a vertex) ~ (S^2, disk)
  CHECK(relative_homology(x, closed_star(x, 0), p, test::integers()) ==
        GradedModule::free({0, 0, 1}));
  const auto c = builtin("cone-torus");
  const auto p3 = test::named("lower-middle", 3);
  const auto rel = relative_homology(c, test::cone_base(c), p3, test::integers());
  CHECK(rel == GradedModule::free({0, 0, 0, 1}));
}

TEST_CASE("long exact sequences") {
  const auto c = builtin("cone-torus");
  for (const char* ring : {"Q", "F2", "Z"}) {
    const auto r = les_check(c, test::cone_base(c), test::named("lower-middle", 3),
                             test::constant(Ring::parse(ring)));
    CHECK(r.exact());
    CHECK(r.failures().empty());
    CHECK(r.rank_only == (std::string(ring) == "Z"));
    CHECK(r.nodes.size() == 3 * 4);
  }
  const auto x = builtin("s2-marked-1");
  const auto r = les_check(x, closed_star(x, 0), test::named("gm-super", 2),
                           test::constant(Ring::rationals()));
  CHECK(r.exact());
}

TEST_CASE("non-complex input is rejected") {
  ChainComplex<IntegerRing> c{IntegerRing{}, {1, 1}, {}};
  SparseMatrix<Integer> d0(0, 1), d1(1, 0);
  d1.push_column({{0, Integer(1)}});
  c.boundary = {d0, d1};
  CHECK(homology(c).is_zero());
  // a 3-term complex with d1 * d2 != 0
  ChainComplex<IntegerRing> bad{IntegerRing{}, {1, 1, 1}, {}};
  SparseMatrix<Integer> e1(1, 0), e2(1, 0);
  e1.push_column({{0, Integer(1)}});
  e2.push_column({{0, Integer(1)}});
  bad.boundary = {d0, e1, e2};
  CHECK_THROWS_AS(homology(bad), InvariantViolation);
}
