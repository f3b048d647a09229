#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dessins/classify.hpp"
#include "dessins/numth.hpp"
#include "dessins/ops.hpp"

using namespace dessins;

namespace {

bool same_invariants(const DessinInvariants& a, const DessinInvariants& b) {
  return a.type == b.type && a.euler_characteristic == b.euler_characteristic &&
         a.genus == b.genus && a.core_order == b.core_order && a.core_exponent == b.core_exponent &&
         a.black_vertices == b.black_vertices && a.white_vertices == b.white_vertices &&
         a.faces == b.faces && a.symmetric == b.symmetric && a.reflexible == b.reflexible &&
         a.totally_symmetric == b.totally_symmetric && a.nilpotency_class == b.nilpotency_class &&
         a.graph.descriptor() == b.graph.descriptor() && a.graph.edges == b.graph.edges;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("cyclic dessin construction") {
  CHECK_NOTHROW(cyclic_dessin({6, 1, 5}));
  CHECK_NOTHROW(cyclic_dessin({6, 2, 3}));
  CHECK_THROWS_AS(cyclic_dessin({6, 2, 4}), std::invalid_argument);
}

TEST_CASE("cyclic isomorphism criterion") {
  CHECK(cyclic_isomorphic(6, {1, 5}, {5, 1}));
  CHECK(!cyclic_isomorphic(6, {1, 2}, {2, 1}));
  CHECK(cyclic_isomorphic(6, {1, 2}, {1, 2}));
  // agrees with the group-level test
  for (long long r = 0; r < 6; ++r)
    for (long long s = 0; s < 6; ++s) {
      if (std::gcd(std::gcd(r, s), 6LL) != 1) continue;
      CHECK(cyclic_isomorphic(6, {1, 2}, {r, s}) ==
            are_isomorphic(cyclic_dessin({6, 1, 2}), cyclic_dessin({6, r, s})));
    }
}

TEST_CASE("cyclic closed invariants against the group-theoretic oracle") {
  auto spot = cyclic_closed_invariants({6, 1, 2});
  CHECK(spot.type == std::array<long long, 3>{6, 3, 2});
  CHECK(spot.genus == 1);
  CHECK(spot.graph.descriptor() == "K_{1,2}^(3)");
  auto edge = cyclic_closed_invariants({6, 0, 1});
  CHECK(edge.type == std::array<long long, 3>{1, 6, 6});
  CHECK(edge.genus == 0);
  CHECK(edge.graph.descriptor() == "K_{6,1}");

  for (long long m = 1; m <= 36; ++m)
    for (const CyclicParams& p : cyclic_classes(m))
      CHECK(same_invariants(cyclic_closed_invariants(p), invariants(cyclic_dessin(p))));
}

TEST_CASE("cyclic class counts match psi and brute force") {
  using dessins::numth::dedekind_psi;
  CHECK(cyclic_classes(1).size() == 1);
  CHECK(cyclic_classes(5).size() == 6);
  for (long long m = 1; m <= 36; ++m) {
    auto classes = cyclic_classes(m);
    CHECK(classes.size() == dedekind_psi(m));
    auto brute = classify_dessins(build_group("cyclic:" + std::to_string(m)));
    CHECK(brute.representatives.size() == classes.size());
  }
}

TEST_CASE("cyclic symmetric classes") {
  auto s6 = cyclic_symmetric_classes(6);
  REQUIRE(s6.size() == 2);
  CHECK((s6[0].r == 1 && s6[0].s == 1));
  CHECK((s6[1].r == 1 && s6[1].s == 5));
  CHECK(cyclic_symmetric_classes(8).size() == 4);
  CHECK(cyclic_symmetric_classes(1).size() == 1);
  // distinct square roots give non-isomorphic dessins
  CHECK(!cyclic_isomorphic(8, {1, 3}, {1, 5}));
  // and they are exactly the symmetric classes
  for (long long m = 1; m <= 16; ++m) {
    long long sym = 0;
    for (const CyclicParams& p : cyclic_classes(m)) sym += is_symmetric(cyclic_dessin(p));
    CHECK(sym == static_cast<long long>(cyclic_symmetric_classes(m).size()));
  }
}

TEST_CASE("cyclic wilson orbit criterion") {
  CHECK(cyclic_wilson_orbit_equal(6, {1, 5}, {1, 1}));
  CHECK(!cyclic_wilson_orbit_equal(6, {1, 2}, {1, 3}));
  CHECK(cyclic_wilson_orbit_equal(6, {1, 2}, {1, 2}));
}

TEST_CASE("abelian p-dessin realization") {
  AbelianPParams flagged{2, 1, 3, 2, 3};
  Dessin d = abelian_p_dessin(flagged);
  const FiniteGroup& g = *d.group;
  CHECK(g.order() == 16);
  CHECK(element_order(g, d.y) == 8);
  CHECK(g.pow(d.y, 2) == g.pow(d.x, 6));  // y^2 = x^6

  // the genus emitted by the closed form must equal the Euler-Poincare value
  auto oracle = invariants(d);
  auto closed = abelian_p_closed_invariants(flagged);
  CHECK(oracle.genus == 3);
  CHECK(closed.genus == 3);
  CHECK(same_invariants(oracle, closed));

  CHECK_THROWS_AS(abelian_p_dessin({2, 2, 1, 0, 1}), std::invalid_argument);  // a > b
  CHECK_THROWS_AS(abelian_p_dessin({2, 0, 3, 4, 1}), std::invalid_argument);  // c > b-a
  CHECK_THROWS_AS(abelian_p_dessin({2, 0, 3, 2, 2}), std::invalid_argument);  // e not a unit
  CHECK_THROWS_AS(abelian_p_dessin({4, 0, 1, 0, 1}), std::invalid_argument);  // p not prime
}

TEST_CASE("abelian closed invariants against the oracle") {
  // standard embedding: c = 0 gives the simple complete bipartite graph
  auto std23 = abelian_p_closed_invariants({2, 1, 3, 0, 1});
  CHECK(std23.type == std::array<long long, 3>{8, 2, 8});
  CHECK(std23.core_order == 1);
  CHECK(std23.graph.descriptor() == "K_{2,8}");
  auto sphere = abelian_p_closed_invariants({2, 1, 1, 0, 1});
  CHECK(sphere.type == std::array<long long, 3>{2, 2, 2});
  CHECK(sphere.genus == 0);

  for (long long p : {2, 3, 5, 7})
    for (int b = 0; b <= 6; ++b)
      for (int a = 0; a <= b; ++a) {
        long long order = 1;
        for (int i = 0; i < a + b; ++i) order *= p;
        if (order > 64) continue;
        for (const AbelianPClass& cls : abelian_p_classes(p, a, b)) {
          if (cls.dual) continue;
          CHECK(same_invariants(abelian_p_closed_invariants(cls.params),
                                invariants(abelian_p_dessin(cls.params))));
        }
      }
}

TEST_CASE("abelian p-class lists") {
  using dessins::numth::dedekind_psi;
  CHECK(abelian_p_classes(2, 1, 3).size() == 6);  // psi(4)
  CHECK(abelian_p_classes(3, 0, 1).size() == 4);  // psi(3)
  CHECK(abelian_p_classes(5, 2, 2).size() == 1);
  auto only = abelian_p_classes(3, 1, 1);
  REQUIRE(only.size() == 1);
  CHECK(is_totally_symmetric(abelian_class_dessin(only[0])));

  // brute force agreement
  CHECK(classify_dessins(build_group("abelian:2,8")).representatives.size() == 6);
  CHECK(classify_dessins(build_group("cyclic:3")).representatives.size() == 4);

  // the degenerate a = 0 column reproduces the cyclic classification
  auto cyc = cyclic_classes(4);
  auto ab = abelian_p_classes(2, 0, 2);
  REQUIRE(ab.size() == cyc.size());
  for (const AbelianPClass& cls : ab) {
    Dessin d = abelian_class_dessin(cls);
    int hits = 0;
    for (const CyclicParams& p : cyc) hits += are_isomorphic(d, cyclic_dessin(p));
    CHECK(hits == 1);
  }
}

TEST_CASE("abelian wilson orbit criterion") {
  CHECK(abelian_wilson_orbit_equal({2, 1, 3, 2, 1}, {2, 1, 3, 2, 3}));
  CHECK(!abelian_wilson_orbit_equal({2, 1, 3, 1, 1}, {2, 1, 3, 2, 1}));
  CHECK(abelian_wilson_orbit_equal({2, 1, 3, 2, 3}, {2, 1, 3, 2, 3}));
  CHECK_THROWS_AS(abelian_wilson_orbit_equal({2, 1, 3, 2, 1}, {2, 1, 2, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("classify_abelian") {
  auto c6 = classify_abelian(1, 6);
  CHECK(c6.total_count == 12);
  CHECK(c6.symmetric_count == 2);
  CHECK(c6.classes.size() == 12);

  auto c24 = classify_abelian(2, 4);
  CHECK(c24.total_count == 3);
  auto brute = classify_dessins(build_group("abelian:2,4"));
  CHECK(brute.representatives.size() == 3);

  auto diag = classify_abelian(4, 4);
  REQUIRE(diag.classes.size() == 1);
  CHECK(is_totally_symmetric(diag.classes[0].representative));

  CHECK_THROWS_AS(classify_abelian(4, 6), std::invalid_argument);

  // representatives are pairwise non-isomorphic and carry correct flags
  for (const auto& entry : c6.classes) {
    CHECK(is_symmetric(entry.representative) == entry.symmetric);
    CHECK(is_reflexible(entry.representative));
  }
  for (size_t i = 0; i < c6.classes.size(); ++i)
    for (size_t j = i + 1; j < c6.classes.size(); ++j)
      CHECK(!are_isomorphic(c6.classes[i].representative, c6.classes[j].representative));
}

}  // TEST_SUITE
