#include "dessins/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "dessins/classify.hpp"
#include "dessins/dessin.hpp"
#include "dessins/numth.hpp"
#include "dessins/ops.hpp"

namespace dessins::verify {

namespace {

CheckResult check(std::string name, bool ok, std::string detail) {
  return CheckResult{std::move(name), ok, std::move(detail)};
}

// "(l,m,n)/g/graph/Yes|No" signature of a class, used to match computed
// classes against frozen tables
std::string sig(const DessinInvariants& inv) {
  std::ostringstream os;
  os << "(" << inv.type[0] << "," << inv.type[1] << "," << inv.type[2] << ")/" << inv.genus << "/"
     << inv.graph.descriptor() << "/" << (inv.symmetric ? "Yes" : "No");
  return os.str();
}

long long spec_order(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: return spec.params[0];
    case GroupSpec::Kind::abelian: {
      long long n = 1;
      for (long long d : spec.params) n *= d;
      return n;
    }
    case GroupSpec::Kind::dihedral: return spec.params[0];
    case GroupSpec::Kind::quaternion8: return 8;
    case GroupSpec::Kind::alternating4: return 12;
    case GroupSpec::Kind::symmetric: {
      long long f = 1;
      for (long long i = 2; i <= spec.params[0]; ++i) f *= i;
      return f;
    }
    case GroupSpec::Kind::metacyclic: return spec.params[0] * spec.params[1];
    case GroupSpec::Kind::heisenberg: return spec.params[0] * spec.params[0] * spec.params[0];
    case GroupSpec::Kind::product: return spec_order(spec.factors[0]) * spec_order(spec.factors[1]);
  }
  return 0;
}

Dessin join_all(const std::vector<Dessin>& parts) {
  Dessin out = parts.at(0);
  for (size_t i = 1; i < parts.size(); ++i) out = join(out, parts[i]);
  return out;
}

bool graph_connected(const BipartiteGraph& g) {
  int n = g.black_count + g.white_count;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [b, w] : g.edges) parent[find(b)] = find(g.black_count + w);
  int root = find(0);
  for (int v = 1; v < n; ++v)
    if (find(v) != root) return false;
  return true;
}

}  // namespace

std::vector<GroupSpec> census_constructors(int max_order) {
  std::vector<std::string> texts;
  for (int m = 1; m <= 16; ++m) texts.push_back("cyclic:" + std::to_string(m));
  for (int n = 2; n <= 8; ++n)
    for (int m = n; n * m <= 64; m += n)
      texts.push_back("abelian:" + std::to_string(n) + "," + std::to_string(m));
  texts.emplace_back("abelian:2,2,2");
  for (int n : {4, 6, 8, 10, 12, 16, 20, 24, 32, 48, 64})
    texts.push_back("dihedral:" + std::to_string(n));
  for (const char* t : {"q8", "alt4", "sym3", "sym4", "sym5", "metacyclic:8,8,5", "metacyclic:4,4,3",
                        "metacyclic:2,8,5", "metacyclic:2,8,3", "heisenberg:3", "heisenberg:5",
                        "product:(cyclic:2)x(cyclic:3)"})
    texts.emplace_back(t);
  std::vector<GroupSpec> out;
  for (const std::string& t : texts) {
    GroupSpec spec = GroupSpec::parse(t);
    if (spec_order(spec) <= max_order) out.push_back(std::move(spec));
  }
  return out;
}

Report verify_c6() {
  Report rep;
  static const char* kRows[12] = {
      "(1,6,6)/0/K_{6,1}/No",       "(6,1,6)/0/K_{1,6}/No",       "(6,6,1)/0/K_{1,1}^(6)/Yes",
      "(6,3,2)/1/K_{1,2}^(3)/No",   "(6,2,3)/1/K_{1,3}^(2)/No",   "(3,6,2)/1/K_{2,1}^(3)/No",
      "(3,2,6)/1/K_{2,3}/No",       "(2,6,3)/1/K_{3,1}^(2)/No",   "(2,3,6)/1/K_{3,2}/No",
      "(6,6,3)/2/K_{1,1}^(6)/Yes",  "(3,6,6)/2/K_{2,1}^(3)/No",   "(6,3,6)/2/K_{1,2}^(3)/No"};

  auto brute = classify_dessins(build_group("cyclic:6"));
  rep.push_back(check("c6 class count",
                      brute.representatives.size() == 12 && numth::dedekind_psi(6) == 12,
                      std::to_string(brute.representatives.size()) + " classes, psi(6) = " +
                          numth::dedekind_psi(6).str()));

  std::multiset<std::string> want(kRows, kRows + 12), got;
  std::vector<int> table_id(brute.representatives.size(), -1);
  std::map<std::string, int> id_of;
  for (int i = 0; i < 12; ++i) id_of[kRows[i]] = i + 1;
  for (size_t i = 0; i < brute.representatives.size(); ++i) {
    std::string s = sig(invariants(brute.representatives[i]));
    got.insert(s);
    if (auto it = id_of.find(s); it != id_of.end()) table_id[i] = it->second;
  }
  rep.push_back(check("c6 table rows", got == want, "row multiset vs frozen table"));

  auto closed = cyclic_classes(6);
  bool closed_ok = closed.size() == 12;
  for (const auto& p : closed) {
    auto oracle = invariants(cyclic_dessin(p));
    auto cf = cyclic_closed_invariants(p);
    closed_ok = closed_ok && sig(oracle) == sig(cf) && oracle.core_order == cf.core_order &&
                oracle.core_exponent == cf.core_exponent && oracle.reflexible == cf.reflexible;
  }
  rep.push_back(check("c6 closed forms", closed_ok, "closed-form invariants equal brute-force"));

  auto as_id_sets = [&](const std::vector<std::vector<int>>& orbits) {
    std::set<std::set<int>> out;
    for (const auto& orb : orbits) {
      std::set<int> ids;
      for (int i : orb) ids.insert(table_id[i]);
      out.insert(std::move(ids));
    }
    return out;
  };
  auto tri = as_id_sets(operation_orbits(brute.representatives, OpSet::triality));
  std::set<std::set<int>> tri_want = {{1, 2, 3}, {4, 5, 6, 7, 8, 9}, {10, 11, 12}};
  rep.push_back(check("c6 triality orbits", tri == tri_want,
                      std::to_string(tri.size()) + " orbits (want 3, matching partition)"));

  auto wil = as_id_sets(operation_orbits(brute.representatives, OpSet::generalized_wilson));
  std::set<std::set<int>> wil_want = {{1}, {2}, {3, 10}, {4, 12}, {5}, {6, 11}, {7}, {8}, {9}};
  rep.push_back(check("c6 wilson orbits", wil == wil_want,
                      std::to_string(wil.size()) + " orbits (want 9, matching partition)"));
  return rep;
}

Report verify_alt4() {
  Report rep;
  GroupPtr g = build_group("alt4");
  auto cls = classify_dessins(g);
  long long aut = static_cast<long long>(automorphism_group(*g).size());
  rep.push_back(check("alt4 pair count", cls.pair_count == 96, std::to_string(cls.pair_count)));
  rep.push_back(check("alt4 aut order", aut == 24, std::to_string(aut)));
  rep.push_back(check("alt4 class count", cls.representatives.size() == 4,
                      std::to_string(cls.representatives.size())));

  int x = g->find_label("(12)(34)").value();
  int y = g->find_label("(123)").value();
  Dessin d1 = new_dessin(g, x, y);
  auto inv1 = invariants(d1);
  std::vector<int> black_deg(inv1.graph.black_count, 0), white_deg(inv1.graph.white_count, 0);
  for (auto [b, w] : inv1.graph.edges) {
    ++black_deg[b];
    ++white_deg[w];
  }
  bool graph_ok = inv1.graph.black_count == 6 && inv1.graph.white_count == 4 &&
                  inv1.graph.edges.size() == 12 && inv1.core_order == 1 &&
                  std::all_of(black_deg.begin(), black_deg.end(), [](int d) { return d == 2; }) &&
                  std::all_of(white_deg.begin(), white_deg.end(), [](int d) { return d == 3; });
  rep.push_back(check("alt4 ((12)(34),(123)) graph", graph_ok,
                      "6 black of degree 2, 4 white of degree 3, 12 edges, simple"));

  int sym_33 = 0, asym_refl = 0;
  for (const Dessin& d : cls.representatives) {
    auto inv = invariants(d);
    if (inv.type[0] == 3 && inv.type[1] == 3)
      sym_33 += inv.symmetric && inv.reflexible;
    else
      asym_refl += !inv.symmetric && inv.reflexible;
  }
  rep.push_back(check("alt4 class flags", sym_33 == 2 && asym_refl == 2,
                      "two symmetric reflexible (3,3,*) classes, two asymmetric reflexible"));
  return rep;
}

Report verify_q8() {
  Report rep;
  GroupPtr g = build_group("q8");
  auto cls = classify_dessins(g);
  long long aut = static_cast<long long>(automorphism_group(*g).size());
  rep.push_back(check("q8 pair count", cls.pair_count == 24, std::to_string(cls.pair_count)));
  rep.push_back(check("q8 aut order", aut == 24, std::to_string(aut)));
  rep.push_back(check("q8 class count", cls.representatives.size() == 1,
                      std::to_string(cls.representatives.size())));
  auto inv = invariants(cls.representatives.at(0));
  rep.push_back(check("q8 dessin",
                      inv.type == std::array<long long, 3>{4, 4, 4} && inv.genus == 2 &&
                          inv.totally_symmetric && inv.graph.descriptor() == "K_{2,2}^(2)",
                      sig(inv) + (inv.totally_symmetric ? " totally symmetric" : "")));
  return rep;
}

Report verify_meta64() {
  Report rep;
  GroupPtr g = build_group("metacyclic:8,8,5");
  auto cls = classify_dessins(g);
  long long aut = static_cast<long long>(automorphism_group(*g).size());
  rep.push_back(check("meta64 pair count", cls.pair_count == 1536, std::to_string(cls.pair_count)));
  rep.push_back(check("meta64 aut order", aut == 512, std::to_string(aut)));
  rep.push_back(check("meta64 class count", cls.representatives.size() == 3,
                      std::to_string(cls.representatives.size())));

  std::vector<Dessin> sym, rest;
  for (const Dessin& d : cls.representatives)
    (is_symmetric(d) ? sym : rest).push_back(d);
  bool shadow_ok = false;
  if (sym.size() == 1) {
    auto sh = invariants(shadow(sym[0]));
    shadow_ok = sh.core_order == 1 && sh.graph.descriptor() == "K_{8,8}";
  }
  rep.push_back(check("meta64 symmetric class", sym.size() == 1 && shadow_ok,
                      "one symmetric class with shadow graph K_{8,8}"));
  rep.push_back(check("meta64 dual pair",
                      rest.size() == 2 && are_isomorphic(dual(rest[0]), rest[1]) &&
                          !are_isomorphic(rest[0], rest[1]),
                      "remaining classes are colour-duals of each other"));
  return rep;
}

Report verify_heisenberg(int p) {
  Report rep;
  GroupPtr g = build_group("heisenberg:" + std::to_string(p));
  long long want_aut = static_cast<long long>(p) * p * p * (p - 1) * (p - 1) * (p + 1);
  auto cls = classify_dessins(g);
  long long aut = static_cast<long long>(automorphism_group(*g).size());
  rep.push_back(check("heisenberg aut order", aut == want_aut,
                      std::to_string(aut) + " (want " + std::to_string(want_aut) + ")"));
  rep.push_back(check("heisenberg class count", cls.representatives.size() == 1,
                      std::to_string(cls.representatives.size())));
  auto inv = invariants(cls.representatives.at(0));
  bool base = inv.totally_symmetric && inv.type == std::array<long long, 3>{p, p, p};
  rep.push_back(check("heisenberg dessin", base, sig(inv)));
  if (p == 3)
    rep.push_back(check("heisenberg p=3 embedding",
                        inv.genus == 1 && inv.graph.black_count == 9 && inv.graph.white_count == 9 &&
                            inv.graph.edges.size() == 27 && inv.core_order == 1,
                        "genus 1, simple bipartite graph on 9+9 vertices with 27 edges"));
  return rep;
}

Report verify_join144() {
  Report rep;
  GroupPtr g = build_group("alt4");
  auto cls = classify_dessins(g);
  Dessin d3, d4;
  bool found3 = false, found4 = false;
  for (const Dessin& d : cls.representatives) {
    auto inv = invariants(d);
    if (!inv.symmetric) continue;
    if (inv.type == std::array<long long, 3>{3, 3, 2}) {
      d3 = d;
      found3 = true;
    }
    if (inv.type == std::array<long long, 3>{3, 3, 3}) {
      d4 = d;
      found4 = true;
    }
  }
  rep.push_back(check("join144 factors", found3 && found4,
                      "symmetric classes of type (3,3,2) and (3,3,3) found"));
  if (!(found3 && found4)) return rep;

  rep.push_back(check("join144 coprimality", !coprime_product_check(d3, d4),
                      "coprimality condition fails, product is full anyway"));
  Dessin j = join(d3, d4);
  auto inv = invariants(j, 256);
  rep.push_back(check("join144 dessin",
                      j.group->order() == 144 && inv.type == std::array<long long, 3>{3, 3, 6} &&
                          inv.genus == 13 && inv.symmetric && inv.reflexible,
                      "order " + std::to_string(j.group->order()) + ", " + sig(inv)));
  rep.push_back(check("join144 group structure",
                      groups_isomorphic(*j.group, *build_group("product:(alt4)x(alt4)")),
                      "join group is Alt(4) x Alt(4)"));
  return rep;
}

Report verify_decomposition(const GroupSpec& spec) {
  Report rep;
  GroupPtr g = build_group(spec);
  if (!nilpotency_class(*g)) {
    rep.push_back(check("decomposition " + spec.str(), false, "group is not nilpotent"));
    return rep;
  }
  int bound = std::max(g->order(), kDefaultMaxOrder);
  auto cls = classify_dessins(g, bound);
  size_t primes = numth::factorize(g->order()).size();
  bool ok = true;
  std::string why;
  for (const Dessin& d : cls.representatives) {
    auto parts = sylow_decompose(d);
    if (parts.size() != primes) {
      ok = false;
      why = "component count mismatch";
      break;
    }
    if (parts.empty()) continue;  // trivial group: nothing to rejoin
    if (!are_isomorphic(join_all(parts), d, bound)) {
      ok = false;
      why = "rejoin is not isomorphic to the original";
      break;
    }
    if (parts.size() >= 2) {
      bool sall = true, rall = true;
      for (const Dessin& p : parts) {
        sall = sall && is_symmetric(p);
        rall = rall && is_reflexible(p);
      }
      if (is_symmetric(d, bound) != sall || is_reflexible(d, bound) != rall) {
        ok = false;
        why = "componentwise symmetry equivalence fails";
        break;
      }
    }
  }
  rep.push_back(check("decomposition " + spec.str(), ok,
                      ok ? std::to_string(cls.representatives.size()) + " dessins round-trip" : why));
  return rep;
}

Report verify_anumber(int max_m) {
  Report rep;
  bool sweep_ok = true;
  std::string why;
  int groups = 0;
  for (long long m = 1; m <= max_m && sweep_ok; ++m)
    for (long long n = 1; n <= m && sweep_ok; ++n) {
      if (m % n != 0) continue;
      ++groups;
      GroupPtr g = build_group("abelian:" + std::to_string(n) + "," + std::to_string(m));
      int bound = std::max(g->order(), kDefaultMaxOrder);
      auto brute = classify_dessins(g, bound);
      long long want = numth::to_ll(numth::dedekind_psi(m / n));
      long long want_sym = static_cast<long long>(numth::sqrt_one_units(m / n).size());
      long long got_sym = 0;
      for (const Dessin& d : brute.representatives) got_sym += is_symmetric(d, bound);
      auto closed = classify_abelian(n, m);

      if (static_cast<long long>(brute.representatives.size()) != want)
        sweep_ok = false, why = "count mismatch";
      else if (got_sym != want_sym)
        sweep_ok = false, why = "symmetric count mismatch";
      else if (closed.total_count != want || static_cast<long long>(closed.classes.size()) != want)
        sweep_ok = false, why = "closed-form count mismatch";
      else if (n == m && !is_totally_symmetric(brute.representatives.at(0), bound))
        sweep_ok = false, why = "unique class not totally symmetric";
      if (!sweep_ok) {
        why += " at (n,m) = (" + std::to_string(n) + "," + std::to_string(m) + ")";
        break;
      }
      // every closed representative is a distinct brute class
      std::vector<char> hit(brute.representatives.size(), 0);
      for (const auto& entry : closed.classes) {
        int match = -1;
        for (size_t i = 0; i < brute.representatives.size(); ++i)
          if (!hit[i] && are_isomorphic(entry.representative, brute.representatives[i], bound)) {
            match = static_cast<int>(i);
            break;
          }
        if (match < 0) {
          sweep_ok = false;
          why = "closed representative unmatched at (n,m) = (" + std::to_string(n) + "," +
                std::to_string(m) + ")";
          break;
        }
        hit[match] = 1;
      }
    }
  rep.push_back(check("anumber sweep m <= " + std::to_string(max_m), sweep_ok,
                      sweep_ok ? std::to_string(groups) + " groups match psi(m/n)" : why));

  bool pp_ok = true;
  std::string pp_why;
  for (long long p : {2, 3, 5, 7}) {
    for (int b = 0; b <= 6; ++b)
      for (int a = 0; a <= b; ++a) {
        long long order = 1;
        for (int i = 0; i < a + b; ++i) order *= p;
        if (order > 64) continue;
        auto classes = abelian_p_classes(p, a, b);
        long long pa = 1, pb = 1, pba = 1;
        for (int i = 0; i < a; ++i) pa *= p;
        for (int i = 0; i < b; ++i) pb *= p;
        for (int i = 0; i < b - a; ++i) pba *= p;
        long long psi = numth::to_ll(numth::dedekind_psi(pba));
        GroupPtr g = build_group(GroupSpec{GroupSpec::Kind::abelian, {pa, pb}, {}});
        auto brute = classify_dessins(g);
        long long sym_closed = 0;
        for (const auto& c : classes)
          sym_closed += abelian_p_closed_invariants(c.params).symmetric && !c.dual;
        long long sym_brute = 0;
        for (const Dessin& d : brute.representatives) sym_brute += is_symmetric(d);
        if (static_cast<long long>(classes.size()) != psi ||
            static_cast<long long>(brute.representatives.size()) != psi || sym_closed != sym_brute) {
          pp_ok = false;
          pp_why = "(p,a,b) = (" + std::to_string(p) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
        }
      }
  }
  rep.push_back(check("anumber per-prime lists", pp_ok,
                      pp_ok ? "closed lists match brute force for p^(a+b) <= 64" : pp_why));
  return rep;
}

Report verify_decomposition_sweep(int max_order) {
  Report rep;
  for (const GroupSpec& spec : census_constructors(max_order)) {
    GroupPtr g = build_group(spec);
    if (!nilpotency_class(*g)) continue;
    auto sub = verify_decomposition(spec);
    rep.insert(rep.end(), sub.begin(), sub.end());
  }
  // the symmetric join of two asymmetric components on Z_6 (+) Z_6
  Dessin d1 = cyclic_dessin({6, 2, 3});
  Dessin d2 = cyclic_dessin({6, 3, 2});
  Dessin j = join(d1, d2);
  rep.push_back(check("decomposition z6z6 example",
                      j.group->order() == 36 && is_symmetric(j) && !is_symmetric(d1) &&
                          !is_symmetric(d2),
                      "symmetric join of two asymmetric components"));
  return rep;
}

namespace {

// <R, L | R^{2^n} = L^2 = T^2 = [R,T] = [L,T] = 1, T := [R,L]>, realized on
// normal forms R^i T^k L^e with L R = R T L.
GroupPtr build_g2_map_group(int n) {
  int pn = 1 << n, order = pn * 4;
  std::vector<int> table(static_cast<size_t>(order) * order);
  auto idx = [&](int i, int k, int e) { return (i * 2 + k) * 2 + e; };
  for (int i1 = 0; i1 < pn; ++i1)
    for (int k1 = 0; k1 < 2; ++k1)
      for (int e1 = 0; e1 < 2; ++e1)
        for (int i2 = 0; i2 < pn; ++i2)
          for (int k2 = 0; k2 < 2; ++k2)
            for (int e2 = 0; e2 < 2; ++e2)
              table[static_cast<size_t>(idx(i1, k1, e1)) * order + idx(i2, k2, e2)] =
                  idx((i1 + i2) % pn, (k1 + k2 + i2 * e1) % 2, (e1 + e2) % 2);
  return std::make_shared<FiniteGroup>(FiniteGroup::from_table(order, std::move(table)));
}

}  // namespace

Report verify_bridge(int max_n) {
  Report rep;
  for (int n = 2; n <= max_n; ++n) {
    // first family: <R, L | R^{2^n} = L^2 = 1, [R,L] = R^{2^{n-1}}>, i.e.
    // R^L = R^{2^{n-1}+1}, which is metacyclic with g = L, h = R
    long long pn = 1LL << n, t = (1LL << (n - 1)) + 1;
    GroupPtr g1 = build_group("metacyclic:2," + std::to_string(pn) + "," + std::to_string(t));
    int R1 = 1, L1 = static_cast<int>(pn);  // h and g in the metacyclic numbering
    Dessin m1 = map_to_dessin(g1, R1, L1);
    Dessin a1 = abelian_p_dessin({2, 0, n, n, t});
    bool ok1 = nilpotency_class(*g1) == 2 && nilpotency_class(*m1.group) == 1 &&
               are_isomorphic(m1, a1);
    rep.push_back(check("bridge M1(" + std::to_string(n) + ")", ok1,
                        "map dessin is A(2;0," + std::to_string(n) + "," + std::to_string(n) + "," +
                            std::to_string(t) + "), class drops 2 -> 1"));

    GroupPtr g2 = build_g2_map_group(n);
    int R2 = 4, L2 = 1;  // indices of R^1 T^0 L^0 and R^0 T^0 L^1
    Dessin m2 = map_to_dessin(g2, R2, L2);
    Dessin a2 = abelian_p_dessin({2, 1, n, n - 1, 1});
    bool ok2 = nilpotency_class(*g2) == 2 && nilpotency_class(*m2.group) == 1 &&
               are_isomorphic(m2, a2);
    rep.push_back(check("bridge M2(" + std::to_string(n) + ")", ok2,
                        "map dessin is A(2;1," + std::to_string(n) + "," + std::to_string(n - 1) +
                            ",1), class drops 2 -> 1"));
  }
  return rep;
}

Report verify_tower(int max_a) {
  Report rep;
  for (int a = 1; a <= max_a; ++a) {
    long long q = 1LL << a;
    GroupPtr g = build_group("abelian:" + std::to_string(q) + "," + std::to_string(q));
    int x = static_cast<int>(q), y = 1;  // (1,0) and (0,1)
    Dessin d = new_dessin(g, x, y);
    GroupPtr ext = extended_group(d, g->order());
    int xy = g->mul(x, y);  // embeds at the same index in the extension
    auto z = center(*ext);
    bool center_ok = static_cast<long long>(z.size()) == q && subgroup_closure(*ext, {xy}) == z;
    auto quot = quotient_group(*ext, z);
    bool quot_ok = groups_isomorphic(*quot.group, *build_group("dihedral:" + std::to_string(2 * q)));
    bool class_ok = nilpotency_class(*ext) == a + 1;
    rep.push_back(check("tower a=" + std::to_string(a), center_ok && quot_ok && class_ok,
                        "center <xy> of order " + std::to_string(q) + ", quotient dihedral of order " +
                            std::to_string(2 * q) + ", class " + std::to_string(a + 1)));
  }
  return rep;
}

Report verify_properties(int max_order) {
  Report rep;
  for (const GroupSpec& spec : census_constructors(max_order)) {
    GroupPtr g = build_group(spec);
    auto cls = classify_dessins(g);
    long long aut = static_cast<long long>(automorphism_group(*g).size());
    bool ok = cls.pair_count ==
              aut * static_cast<long long>(cls.representatives.size());
    std::string why = ok ? "" : "orbit count times |Aut| != |P|";
    bool abelian_spec =
        spec.kind == GroupSpec::Kind::cyclic || spec.kind == GroupSpec::Kind::abelian;
    for (const Dessin& d : cls.representatives) {
      if (!ok) break;
      auto inv = invariants(d);
      long long n = g->order();
      ok = inv.genus >= 0 && inv.euler_characteristic == 2 - 2 * inv.genus &&
           static_cast<long long>(inv.graph.edges.size()) == n && graph_connected(inv.graph);
      if (!ok) {
        why = "Euler-Poincare or graph size fails";
        break;
      }
      // multiplicity between adjacent vertices equals the core order
      std::map<std::pair<int, int>, long long> mult;
      for (auto e : inv.graph.edges) ++mult[e];
      for (const auto& [e, m] : mult)
        if (m != inv.core_order) {
          ok = false;
          why = "edge multiplicity differs from core order";
        }
      if (!ok) break;
      if (inv.symmetric) {
        ok = inv.type[0] == inv.type[1] &&
             (inv.core_order == 1 ||
              (*inv.core_exponent * *inv.core_exponent) % inv.core_order == 1 % inv.core_order);
        if (!ok) {
          why = "symmetric dessin violates the core relation";
          break;
        }
      }
      if (inv.totally_symmetric && !(inv.symmetric && inv.reflexible)) {
        ok = false;
        why = "totally symmetric must imply symmetric and reflexible";
        break;
      }
      Dessin sh = shadow(d);
      auto shc = core(sh);
      ok = shc.order == 1 && (!inv.symmetric || is_symmetric(sh)) &&
           (!inv.reflexible || is_reflexible(sh));
      if (!ok) {
        why = "shadow is not simple or loses a symmetry";
        break;
      }
      if (auto c = nilpotency_class(*g); c && *c >= 2) {
        auto cbar = nilpotency_class(*sh.group);
        ok = cbar && *cbar >= *c - 1 && *cbar <= *c;
        if (!ok) {
          why = "shadow class outside [c-1, c]";
          break;
        }
      }
      if (abelian_spec) {
        ok = inv.reflexible;
        if (!ok) {
          why = "abelian dessin not reflexible";
          break;
        }
        long long l = inv.type[0], m2 = inv.type[1], L = std::lcm(l, m2);
        for (long long j = 1; j <= L && ok; ++j) {
          if (std::gcd(j, l) != 1 || std::gcd(j, m2) != 1) continue;
          ok = are_isomorphic(wilson(d, {j, j}), d);
        }
        if (!ok) {
          why = "Wilson operation moves an abelian class";
          break;
        }
      }
    }
    rep.push_back(check("properties " + spec.str(), ok,
                        ok ? std::to_string(cls.representatives.size()) + " classes checked" : why));
  }
  return rep;
}

}  // namespace dessins::verify
