#include <doctest.h>

#include <numeric>

#include "dessins/classify.hpp"
#include "dessins/ops.hpp"
#include "dessins/verify.hpp"

using namespace dessins;

namespace {

Dessin alt4_pair(const char* a, const char* b) {
  auto g = build_group("alt4");
  return new_dessin(g, g->find_label(a).value(), g->find_label(b).value());
}

}  // namespace

TEST_SUITE("ops") {

TEST_CASE("dual") {
  Dessin d = alt4_pair("(12)(34)", "(123)");
  Dessin dd = dual(dual(d));
  CHECK(dd.x == d.x);
  CHECK(dd.y == d.y);
  // the dual of the subdivided tetrahedron class is the colour-swapped class
  Dessin d2 = alt4_pair("(123)", "(12)(34)");
  CHECK(are_isomorphic(dual(d), d2));
  auto t = invariants(dual(cyclic_dessin({6, 1, 2}))).type;
  CHECK(t == std::array<long long, 3>{3, 6, 2});
}

TEST_CASE("triality") {
  Dessin d = alt4_pair("(12)(34)", "(123)");
  Dessin id = triality(d, Triality::identity);
  CHECK((id.x == d.x && id.y == d.y));
  Dessin thrice = triality(triality(triality(d, Triality::cycle_bwf), Triality::cycle_bwf),
                           Triality::cycle_bwf);
  CHECK(are_isomorphic(thrice, d));
  // tags compose as Sym(3), and the action matches up to isomorphism
  for (Triality t1 : kAllTrialities)
    for (Triality t2 : kAllTrialities)
      CHECK(are_isomorphic(triality(triality(d, t1), t2), triality(d, triality_compose(t2, t1))));
  CHECK(triality_compose(Triality::swap_bw, Triality::swap_bw) == Triality::identity);
  CHECK(triality_compose(Triality::cycle_bwf, Triality::cycle_bwf) == Triality::cycle_bfw);
}

TEST_CASE("wilson") {
  Dessin d = cyclic_dessin({6, 1, 2});
  Dessin h11 = wilson(d, {1, 1});
  CHECK((h11.x == d.x && h11.y == d.y));
  CHECK_THROWS_AS(wilson(d, {2, 1}), std::invalid_argument);  // gcd(2, o(x)) != 1

  // H_{i,j} maps the class (c, e) to the class (c, i^{-1} j e)
  AbelianPParams params{2, 1, 3, 2, 3};
  Dessin a = abelian_p_dessin(params);
  long long i = 3, j = 5;                 // units mod 8
  long long iinv = 3;                     // 3*3 = 9 == 1 (mod 8)
  long long enew = (iinv * j % 8 * params.e) % 4;  // reduced mod p^c = 4
  CHECK(are_isomorphic(wilson(a, {i, j}), abelian_p_dessin({2, 1, 3, 2, enew})));

  // the plain Wilson operation fixes every cyclic class
  for (const CyclicParams& p : cyclic_classes(8)) {
    Dessin c = cyclic_dessin(p);
    long long l = invariants(c).type[0], m = invariants(c).type[1];
    for (long long jj = 1; jj <= std::lcm(l, m); ++jj)
      if (std::gcd(jj, l) == 1 && std::gcd(jj, m) == 1)
        CHECK(are_isomorphic(wilson(c, {jj, jj}), c));
  }
}

TEST_CASE("join") {
  Dessin c2 = cyclic_dessin({2, 1, 1});
  Dessin c3 = cyclic_dessin({3, 1, 1});
  CHECK(coprime_product_check(c2, c3));
  Dessin j = join(c2, c3);
  CHECK(j.group->order() == 6);  // full product under the coprimality condition
  CHECK(are_isomorphic(j, cyclic_dessin({6, 1, 1})));

  Dessin d = alt4_pair("(123)", "(124)");
  CHECK(are_isomorphic(join(d, d), d));
  CHECK(!coprime_product_check(d, d));

  CHECK_THROWS_AS(join(d, d, 5), std::domain_error);  // order cap
}

TEST_CASE("join is commutative and associative up to isomorphism") {
  std::vector<Dessin> corpus;
  for (const char* spec : {"cyclic:4", "cyclic:6", "q8", "alt4"})
    for (const Dessin& d : classify_dessins(build_group(spec)).representatives)
      corpus.push_back(d);
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = i; j < corpus.size(); ++j) {
      if (corpus[i].group->order() * corpus[j].group->order() > 256) continue;
      Dessin ab = join(corpus[i], corpus[j]);
      CHECK(are_isomorphic(ab, join(corpus[j], corpus[i]), 256));
    }
  Dessin a = cyclic_dessin({4, 1, 2});
  Dessin b = cyclic_dessin({3, 1, 0});
  Dessin c = cyclic_dessin({2, 1, 1});
  for (const Dessin& d : classify_dessins(build_group("q8")).representatives) {
    CHECK(are_isomorphic(join(join(a, b), d), join(a, join(b, d)), 256));
    CHECK(are_isomorphic(join(join(d, c), b), join(d, join(c, b)), 256));
  }
}

TEST_CASE("sylow decomposition") {
  auto parts = sylow_decompose(cyclic_dessin({6, 1, 1}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].group->order() == 2);
  CHECK(parts[1].group->order() == 3);
  // projections of g are g^3 and g^4, which sit at indices 1 and 2 of the
  // relabeled components <g^3> and <g^2>
  CHECK(element_order(*parts[0].group, parts[0].x) == 2);
  CHECK(element_order(*parts[1].group, parts[1].x) == 3);
  CHECK(are_isomorphic(join(parts[0], parts[1]), cyclic_dessin({6, 1, 1})));

  Dessin p = cyclic_dessin({8, 1, 3});
  auto single = sylow_decompose(p);
  REQUIRE(single.size() == 1);
  CHECK(are_isomorphic(single[0], p));

  CHECK_THROWS_AS(sylow_decompose(alt4_pair("(123)", "(124)")), std::invalid_argument);
}

TEST_CASE("symmetric join of asymmetric components") {
  Dessin d1 = cyclic_dessin({6, 2, 3});
  Dessin d2 = cyclic_dessin({6, 3, 2});
  CHECK(!is_symmetric(d1));
  CHECK(!is_symmetric(d2));
  Dessin j = join(d1, d2);
  CHECK(j.group->order() == 36);
  CHECK(is_symmetric(j));
}

TEST_CASE("extended group") {
  // x = y: the m-dipole convention gives Z_m (+) Z_2
  Dessin dip = cyclic_dessin({4, 1, 1});
  CHECK(groups_isomorphic(*extended_group(dip), *build_group("product:(cyclic:4)x(cyclic:2)")));

  // odd p with a genuine transposition: the extension is not nilpotent
  auto h3 = build_group("heisenberg:3");
  int x = h3->find_label("x^1*y^0*z^0").value();
  int y = h3->find_label("x^0*y^1*z^0").value();
  Dessin hd = new_dessin(h3, x, y);
  REQUIRE(is_symmetric(hd));
  GroupPtr ext = extended_group(hd);
  CHECK(ext->order() == 54);
  CHECK(!nilpotency_class(*ext).has_value());

  CHECK_THROWS_AS(extended_group(alt4_pair("(12)(34)", "(123)")), std::invalid_argument);
}

TEST_CASE("map to dessin") {
  // abelian ambient group with central involution: R^L = R
  auto g = build_group("product:(cyclic:4)x(cyclic:2)");
  int R = 2, L = 1;  // (g^1, 0) and (g^0, 1)
  Dessin d = map_to_dessin(g, R, L);
  CHECK(d.group->order() == 4);
  CHECK(d.x == d.y);

  auto bad = build_group("cyclic:6");
  CHECK_THROWS_AS(map_to_dessin(bad, 1, 2), std::invalid_argument);  // L^2 != 1

  for (const auto& r : verify::verify_bridge(3)) CHECK(r.ok);
}

TEST_CASE("operation orbits") {
  std::vector<Dessin> one = {cyclic_dessin({6, 1, 5})};
  CHECK(operation_orbits(one, OpSet::both).size() == 1);

  std::vector<Dessin> mixed = {cyclic_dessin({6, 1, 5}), cyclic_dessin({3, 1, 1})};
  CHECK_THROWS_AS(operation_orbits(mixed, OpSet::triality), std::invalid_argument);

  // generalized-Wilson orbits of cyclic classes are cut out by the gcd test
  for (long long m : {6, 8, 12}) {
    auto classes = cyclic_classes(m);
    std::vector<Dessin> ds;
    for (const auto& p : classes) ds.push_back(cyclic_dessin(p));
    auto orbits = operation_orbits(ds, OpSet::generalized_wilson);
    for (const auto& orbit : orbits)
      for (size_t i = 0; i < orbit.size(); ++i)
        for (size_t j = 0; j < orbit.size(); ++j)
          CHECK(cyclic_wilson_orbit_equal(m, {classes[orbit[i]].r, classes[orbit[i]].s},
                                          {classes[orbit[j]].r, classes[orbit[j]].s}));
    size_t covered = 0;
    for (const auto& orbit : orbits) covered += orbit.size();
    CHECK(covered == classes.size());
    // distinct orbits have distinct gcd signatures
    for (size_t a = 0; a < orbits.size(); ++a)
      for (size_t b = a + 1; b < orbits.size(); ++b)
        CHECK(!cyclic_wilson_orbit_equal(m, {classes[orbits[a][0]].r, classes[orbits[a][0]].s},
                                         {classes[orbits[b][0]].r, classes[orbits[b][0]].s}));
  }
}

TEST_CASE("abelian wilson orbits match the closed criterion") {
  auto classes = abelian_p_classes(2, 1, 3);
  REQUIRE(classes.size() == 6);
  std::vector<Dessin> ds;
  for (const auto& c : classes) ds.push_back(abelian_class_dessin(c));
  auto orbits = operation_orbits(ds, OpSet::generalized_wilson);
  // orbits pair up classes with equal c and equal colouring
  for (const auto& orbit : orbits)
    for (size_t i = 1; i < orbit.size(); ++i) {
      CHECK(classes[orbit[0]].params.c == classes[orbit[i]].params.c);
      CHECK(classes[orbit[0]].dual == classes[orbit[i]].dual);
      CHECK(abelian_wilson_orbit_equal(classes[orbit[0]].params, classes[orbit[i]].params));
    }
  // both e-values at c = 2 fall in one orbit
  size_t biggest = 0;
  for (const auto& orbit : orbits) biggest = std::max(biggest, orbit.size());
  CHECK(biggest == 2);
}

}  // TEST_SUITE
