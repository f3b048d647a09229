#include "dessins/dessin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dessins {

namespace {

std::vector<int> cyclic_subgroup(const FiniteGroup& g, int a) {
  std::vector<int> out{g.identity()};
  for (int c = a; c != g.identity(); c = g.mul(c, a)) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

void check_bound(const FiniteGroup& g, int max_order, const char* what) {
  if (g.order() > max_order)
    throw std::domain_error(std::string(what) + ": order " + std::to_string(g.order()) +
                            " exceeds search bound " + std::to_string(max_order));
}

}  // namespace

Dessin new_dessin(GroupPtr group, int x, int y) {
  if (!group) throw std::invalid_argument("new_dessin: null group");
  if (x < 0 || x >= group->order() || y < 0 || y >= group->order())
    throw std::invalid_argument("new_dessin: element index out of range");
  if (!is_generating_pair(*group, x, y)) {
    auto sub = subgroup_closure(*group, {x, y});
    throw std::invalid_argument("new_dessin: pair generates a proper subgroup of order " +
                                std::to_string(sub.size()) + " of a group of order " +
                                std::to_string(group->order()));
  }
  return Dessin{std::move(group), x, y};
}

std::string BipartiteGraph::descriptor() const {
  if (complete) {
    std::string s = "K_{" + std::to_string(complete->black) + "," + std::to_string(complete->white) + "}";
    if (complete->multiplicity > 1) s += "^(" + std::to_string(complete->multiplicity) + ")";
    return s;
  }
  return "bip(" + std::to_string(black_count) + "," + std::to_string(white_count) + ";" +
         std::to_string(edges.size()) + ")";
}

CoreInfo core(const Dessin& d) {
  const FiniteGroup& g = *d.group;
  auto cx = cyclic_subgroup(g, d.x);
  auto cy = cyclic_subgroup(g, d.y);
  std::vector<int> inter;
  std::set_intersection(cx.begin(), cx.end(), cy.begin(), cy.end(), std::back_inserter(inter));
  CoreInfo info;
  info.order = static_cast<long long>(inter.size());
  info.elements = std::move(inter);
  if (info.order > 1) {
    long long k = info.order;
    long long l = static_cast<long long>(cx.size());
    long long m = static_cast<long long>(cy.size());
    int xk = g.pow(d.x, l / k);  // generates the core
    int ym = g.pow(d.y, m / k);
    // x^{l/k} = (y^{m/k})^e for a unique unit e mod k
    int acc = g.identity();
    for (long long e = 1; e <= k; ++e) {
      acc = g.mul(acc, ym);
      if (acc == xk) {
        info.exponent = e % k;
        break;
      }
    }
    if (!info.exponent) throw std::logic_error("core: exponent not found");
  }
  return info;
}

BipartiteGraph underlying_graph(const Dessin& d) {
  const FiniteGroup& g = *d.group;
  int n = g.order();
  auto cx = cyclic_subgroup(g, d.x);
  auto cy = cyclic_subgroup(g, d.y);

  // right cosets <x>g / <y>g, numbered ascending by their least element
  auto coset_ids = [&](const std::vector<int>& sub) {
    std::vector<int> id(n, -1);
    int next = 0;
    for (int e = 0; e < n; ++e) {
      if (id[e] != -1) continue;
      for (int s : sub) id[g.mul(s, e)] = next;
      ++next;
    }
    return std::pair<std::vector<int>, int>{std::move(id), next};
  };
  auto [black_id, black_count] = coset_ids(cx);
  auto [white_id, white_count] = coset_ids(cy);

  BipartiteGraph graph;
  graph.black_count = black_count;
  graph.white_count = white_count;
  graph.edges.reserve(n);
  for (int e = 0; e < n; ++e) graph.edges.emplace_back(black_id[e], white_id[e]);
  std::sort(graph.edges.begin(), graph.edges.end());

  // complete bipartite with uniform multiplicity?
  std::vector<long long> mult(static_cast<size_t>(black_count) * white_count, 0);
  for (auto [b, w] : graph.edges) ++mult[static_cast<size_t>(b) * white_count + w];
  long long c = mult[0];
  bool complete = c > 0 && std::all_of(mult.begin(), mult.end(), [c](long long m) { return m == c; });
  if (complete) graph.complete = CompleteBipartiteTag{black_count, white_count, c};
  return graph;
}

Dessin shadow(const Dessin& d) {
  auto k = core(d);
  auto q = quotient_group(*d.group, k.elements);
  return new_dessin(q.group, q.projection[d.x], q.projection[d.y]);
}

bool is_symmetric(const Dessin& d, int max_order) {
  check_bound(*d.group, max_order, "is_symmetric");
  return extend_to_automorphism(*d.group, {d.x, d.y}, {d.y, d.x}).has_value();
}

bool is_reflexible(const Dessin& d, int max_order) {
  check_bound(*d.group, max_order, "is_reflexible");
  const FiniteGroup& g = *d.group;
  return extend_to_automorphism(g, {d.x, d.y}, {g.inv(d.x), g.inv(d.y)}).has_value();
}

bool is_totally_symmetric(const Dessin& d, int max_order) {
  check_bound(*d.group, max_order, "is_totally_symmetric");
  const FiniteGroup& g = *d.group;
  const std::array<std::pair<int, int>, 4> images = {{
      {d.y, d.x},                        // swap
      {g.inv(d.x), g.inv(d.y)},          // joint inversion
      {g.mul(d.x, d.y), d.y},            // (x, y) -> (xy, y)
      {d.x, g.mul(d.y, d.x)},            // (x, y) -> (x, yx)
  }};
  for (auto [ix, iy] : images)
    if (!extend_to_automorphism(g, {d.x, d.y}, {ix, iy})) return false;
  return true;
}

DessinInvariants invariants(const Dessin& d, int max_order) {
  const FiniteGroup& g = *d.group;
  DessinInvariants inv;
  long long n = g.order();
  long long l = element_order(g, d.x);
  long long m = element_order(g, d.y);
  long long o = element_order(g, g.mul(d.x, d.y));
  inv.type = {l, m, o};
  inv.black_vertices = n / l;
  inv.white_vertices = n / m;
  inv.faces = n / o;
  inv.euler_characteristic = inv.black_vertices + inv.white_vertices + inv.faces - n;
  if ((2 - inv.euler_characteristic) % 2 != 0 || inv.euler_characteristic > 2)
    throw std::logic_error("invariants: Euler characteristic is not that of a closed orientable surface");
  inv.genus = (2 - inv.euler_characteristic) / 2;
  auto k = core(d);
  inv.core_order = k.order;
  inv.core_exponent = k.exponent;
  inv.symmetric = is_symmetric(d, max_order);
  inv.reflexible = is_reflexible(d, max_order);
  inv.totally_symmetric = is_totally_symmetric(d, max_order);
  inv.nilpotency_class = nilpotency_class(g);
  inv.graph = underlying_graph(d);
  return inv;
}

bool are_isomorphic(const Dessin& a, const Dessin& b, int max_order) {
  check_bound(*a.group, max_order, "are_isomorphic");
  check_bound(*b.group, max_order, "are_isomorphic");
  if (a.group->order() != b.group->order()) return false;
  if (a.group.get() == b.group.get() || a.group->same_table(*b.group))
    return extend_to_automorphism(*a.group, {a.x, a.y}, {b.x, b.y}).has_value();
  return extend_to_isomorphism(*a.group, {a.x, a.y}, *b.group, {b.x, b.y}).has_value();
}

Classification classify_dessins(GroupPtr group, int max_order) {
  check_bound(*group, max_order, "classify_dessins");
  const FiniteGroup& g = *group;
  Classification out;
  auto pairs = generating_pairs(g);
  out.pair_count = static_cast<long long>(pairs.size());
  for (auto [x, y] : pairs) {
    bool placed = false;
    for (const Dessin& rep : out.representatives)
      if (extend_to_automorphism(g, {rep.x, rep.y}, {x, y})) {
        placed = true;
        break;
      }
    if (!placed) out.representatives.push_back(Dessin{group, x, y});
  }
  return out;
}

std::string graph_to_dot(const BipartiteGraph& graph) {
  std::ostringstream os;
  os << "graph dessin {\n";
  for (int b = 0; b < graph.black_count; ++b)
    os << "  b" << b << " [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
  for (int w = 0; w < graph.white_count; ++w) os << "  w" << w << " [shape=circle];\n";
  for (auto [b, w] : graph.edges) os << "  b" << b << " -- w" << w << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace dessins
