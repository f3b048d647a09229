#include "dessins/ops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "dessins/numth.hpp"

namespace dessins {

namespace {

constexpr std::array<std::array<int, 3>, 6> kRoles = {{
    {0, 1, 2},  // identity
    {1, 0, 2},  // swap_bw
    {2, 1, 0},  // swap_bf
    {0, 2, 1},  // swap_wf
    {1, 2, 0},  // cycle_bwf: (x,y,z) -> (y,z,x)
    {2, 0, 1},  // cycle_bfw
}};

}  // namespace

std::array<int, 3> triality_roles(Triality t) { return kRoles[static_cast<int>(t)]; }

Triality triality_from_roles(const std::array<int, 3>& roles) {
  for (size_t i = 0; i < kRoles.size(); ++i)
    if (kRoles[i] == roles) return static_cast<Triality>(i);
  throw std::invalid_argument("triality_from_roles: not a permutation of (0,1,2)");
}

Triality triality_compose(Triality second, Triality first) {
  auto a = triality_roles(first), b = triality_roles(second);
  // applying `first` then `second`: T''[i] = T[a[b[i]]]
  return triality_from_roles({a[b[0]], a[b[1]], a[b[2]]});
}

Dessin dual(const Dessin& d) { return new_dessin(d.group, d.y, d.x); }

Dessin triality(const Dessin& d, Triality t) {
  const FiniteGroup& g = *d.group;
  std::array<int, 3> triple = {d.x, d.y, g.inv(g.mul(d.x, d.y))};
  auto roles = triality_roles(t);
  return new_dessin(d.group, triple[roles[0]], triple[roles[1]]);
}

Dessin wilson(const Dessin& d, WilsonParams params) {
  const FiniteGroup& g = *d.group;
  long long l = element_order(g, d.x), m = element_order(g, d.y);
  if (std::gcd(params.i % l, l) != 1 || std::gcd(params.j % m, m) != 1)
    throw std::invalid_argument("wilson: exponents must be coprime to the generator orders");
  return new_dessin(d.group, g.pow(d.x, params.i), g.pow(d.y, params.j));
}

Dessin join(const Dessin& a, const Dessin& b, int order_cap) {
  const FiniteGroup& g1 = *a.group;
  const FiniteGroup& g2 = *b.group;
  const long long n2 = g2.order();
  auto code = [n2](int u, int v) { return static_cast<long long>(u) * n2 + v; };

  // closure of {(x1,x2), (y1,y2)} inside G1 x G2
  std::unordered_map<long long, int> seen;
  std::vector<long long> elems;
  const std::array<std::pair<int, int>, 2> gens = {{{a.x, b.x}, {a.y, b.y}}};
  long long id = code(g1.identity(), g2.identity());
  seen.emplace(id, 0);
  elems.push_back(id);
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    int u = static_cast<int>(elems[qi] / n2), v = static_cast<int>(elems[qi] % n2);
    for (auto [s1, s2] : gens) {
      long long w = code(g1.mul(u, s1), g2.mul(v, s2));
      if (seen.emplace(w, 0).second) {
        elems.push_back(w);
        if (static_cast<int>(elems.size()) > order_cap)
          throw std::domain_error("join: closure exceeds the order cap of " + std::to_string(order_cap));
      }
    }
  }

  std::sort(elems.begin(), elems.end());
  int k = static_cast<int>(elems.size());
  for (int i = 0; i < k; ++i) seen[elems[i]] = i;

  std::vector<int> table(static_cast<size_t>(k) * k);
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    int u = static_cast<int>(elems[i] / n2), v = static_cast<int>(elems[i] % n2);
    labels[i] = "(" + g1.label(u) + "," + g2.label(v) + ")";
    for (int j = 0; j < k; ++j) {
      int p = static_cast<int>(elems[j] / n2), q = static_cast<int>(elems[j] % n2);
      table[static_cast<size_t>(i) * k + j] = seen.at(code(g1.mul(u, p), g2.mul(v, q)));
    }
  }
  auto group = std::make_shared<FiniteGroup>(FiniteGroup::from_table(k, std::move(table), std::move(labels)));
  return new_dessin(group, seen.at(code(a.x, b.x)), seen.at(code(a.y, b.y)));
}

bool coprime_product_check(const Dessin& a, const Dessin& b) {
  const FiniteGroup& g1 = *a.group;
  const FiniteGroup& g2 = *b.group;
  long long l1 = element_order(g1, a.x), m1 = element_order(g1, a.y),
            n1 = element_order(g1, g1.mul(a.x, a.y));
  long long l2 = element_order(g2, b.x), m2 = element_order(g2, b.y),
            n2 = element_order(g2, g2.mul(b.x, b.y));
  int hits = (std::gcd(l1, l2) == 1) + (std::gcd(m1, m2) == 1) + (std::gcd(n1, n2) == 1);
  return hits >= 2;
}

std::vector<Dessin> sylow_decompose(const Dessin& d) {
  const FiniteGroup& g = *d.group;
  if (!nilpotency_class(g)) throw std::invalid_argument("sylow_decompose: group is not nilpotent");
  std::vector<Dessin> out;
  for (const auto& pp : numth::factorize(g.order())) {
    long long p = numth::to_ll(pp.prime);
    int xp = sylow_projection(g, d.x, p);
    int yp = sylow_projection(g, d.y, p);
    auto sub = subgroup_as_group(g, subgroup_closure(g, {xp, yp}));
    auto pos = [&](int e) {
      return static_cast<int>(std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), e) -
                              sub.to_parent.begin());
    };
    out.push_back(new_dessin(sub.group, pos(xp), pos(yp)));
  }
  return out;
}

GroupPtr extended_group(const Dessin& d, int max_order) {
  auto tau_opt = is_symmetric(d, max_order)
                     ? extend_to_automorphism(*d.group, {d.x, d.y}, {d.y, d.x})
                     : std::nullopt;
  if (!tau_opt) throw std::invalid_argument("extended_group: dessin is not symmetric");
  const FiniteGroup& g = *d.group;
  const Automorphism& tau = *tau_opt;
  for (int a = 0; a < g.order(); ++a)
    if (tau.apply(tau.apply(a)) != a) throw std::logic_error("extended_group: transposition is not involutory");

  int n = g.order(), order = 2 * n;
  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (int eps = 0; eps < 2; ++eps)
    for (int a = 0; a < n; ++a) {
      int u = eps * n + a;
      labels[u] = eps ? g.label(a) + "*t" : g.label(a);
      for (int delta = 0; delta < 2; ++delta)
        for (int b = 0; b < n; ++b)
          table[static_cast<size_t>(u) * order + delta * n + b] =
              ((eps + delta) % 2) * n + g.mul(a, eps ? tau.apply(b) : b);
    }
  return std::make_shared<FiniteGroup>(FiniteGroup::from_table(order, std::move(table), std::move(labels)));
}

Dessin map_to_dessin(GroupPtr gamma, int R, int L) {
  const FiniteGroup& g = *gamma;
  if (g.mul(L, L) != g.identity()) throw std::invalid_argument("map_to_dessin: L must be an involution or identity");
  if (static_cast<int>(subgroup_closure(g, {R, L}).size()) != g.order())
    throw std::invalid_argument("map_to_dessin: R and L do not generate the group");
  int y0 = g.conj(R, L);  // R^L
  auto sub = subgroup_as_group(g, subgroup_closure(g, {R, y0}));
  auto pos = [&](int e) {
    return static_cast<int>(std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), e) -
                            sub.to_parent.begin());
  };
  Dessin d = new_dessin(sub.group, pos(R), pos(y0));
  // class drop: a nilpotent ambient group of class c >= 2 yields a dessin
  // group of class at most c - 1
  if (auto c = nilpotency_class(g); c && *c >= 2) {
    auto hc = nilpotency_class(*d.group);
    if (!hc || *hc > *c - 1) throw std::logic_error("map_to_dessin: class drop violated");
  }
  return d;
}

std::vector<std::vector<int>> operation_orbits(const std::vector<Dessin>& dessins, OpSet ops,
                                               int max_order) {
  if (dessins.empty()) return {};
  const FiniteGroup& g = *dessins[0].group;
  for (const Dessin& d : dessins)
    if (d.group.get() != dessins[0].group.get() && !d.group->same_table(g))
      throw std::invalid_argument("operation_orbits: dessins must share one group");

  // union-find over discovered isomorphism classes; the first |input| nodes
  // are the input dessins, intermediate classes get fresh nodes
  std::vector<Dessin> reps;
  std::vector<int> parent;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int u, int v) { parent[find(u)] = find(v); };
  auto locate = [&](const Dessin& d) -> int {
    for (size_t i = 0; i < reps.size(); ++i)
      if (are_isomorphic(reps[i], d, max_order)) return static_cast<int>(i);
    reps.push_back(d);
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(reps.size()) - 1;
  };

  std::vector<int> node(dessins.size());
  for (size_t i = 0; i < dessins.size(); ++i) node[i] = locate(dessins[i]);

  std::vector<Dessin> results;
  for (size_t qi = 0; qi < reps.size(); ++qi) {
    const Dessin d = reps[qi];
    results.clear();
    if (ops == OpSet::triality || ops == OpSet::both)
      for (Triality t : kAllTrialities) results.push_back(triality(d, t));
    if (ops == OpSet::generalized_wilson || ops == OpSet::both) {
      long long l = element_order(g, d.x), m = element_order(g, d.y);
      for (long long i = 1; i <= l; ++i) {
        if (std::gcd(i, l) != 1) continue;
        for (long long j = 1; j <= m; ++j)
          if (std::gcd(j, m) == 1) results.push_back(wilson(d, {i, j}));
      }
    }
    for (const Dessin& r : results) unite(static_cast<int>(qi), locate(r));
  }

  std::vector<std::vector<int>> orbits;
  std::vector<int> root_to_orbit(parent.size(), -1);
  for (size_t i = 0; i < dessins.size(); ++i) {
    int r = find(node[i]);
    if (root_to_orbit[r] < 0) {
      root_to_orbit[r] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[root_to_orbit[r]].push_back(static_cast<int>(i));
  }
  return orbits;
}

}  // namespace dessins
