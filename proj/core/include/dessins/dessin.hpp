#pragma once

// Algebraic dessins: a finite group together with an ordered generating pair
// (x, y), plus their invariants, symmetry flags and isomorphism tests.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dessins/group.hpp"

namespace dessins {

struct Dessin {
  GroupPtr group;
  int x = 0;
  int y = 0;
};

// Validates <x, y> = G; the diagnostic carries the order of the generated
// subgroup when the pair fails to generate.
Dessin new_dessin(GroupPtr group, int x, int y);

struct CompleteBipartiteTag {
  long long black = 0, white = 0, multiplicity = 1;  // K_{black,white}^(multiplicity)
  bool operator==(const CompleteBipartiteTag&) const = default;
};

struct BipartiteGraph {
  int black_count = 0;
  int white_count = 0;
  // one entry per group element, sorted; parallel edges appear repeatedly
  std::vector<std::pair<int, int>> edges;
  std::optional<CompleteBipartiteTag> complete;

  // "K_{a,b}", "K_{a,b}^(c)", or "bip(b,w;e)" for non-complete graphs
  std::string descriptor() const;
};

struct CoreInfo {
  std::vector<int> elements;  // <x> ∩ <y>, sorted
  long long order = 1;
  // unit e mod k with x^{l/k} = y^{e m/k}; absent when k = 1
  std::optional<long long> exponent;
};

struct DessinInvariants {
  std::array<long long, 3> type{};  // (o(x), o(y), o(xy))
  long long euler_characteristic = 0;
  long long genus = 0;
  long long core_order = 1;
  std::optional<long long> core_exponent;
  long long black_vertices = 0, white_vertices = 0, faces = 0;
  bool symmetric = false, reflexible = false, totally_symmetric = false;
  std::optional<int> nilpotency_class;
  BipartiteGraph graph;
};

CoreInfo core(const Dessin& d);
BipartiteGraph underlying_graph(const Dessin& d);

// Quotient by the core: (G/K, xK, yK); always simple.
Dessin shadow(const Dessin& d);

bool is_symmetric(const Dessin& d, int max_order = kDefaultMaxOrder);
bool is_reflexible(const Dessin& d, int max_order = kDefaultMaxOrder);

// Invariance under the operation group induced by automorphisms of the free
// group on the pair. The class is fixed by the whole group iff it is fixed
// by each generator: swap, joint inversion, and the two transvections.
bool is_totally_symmetric(const Dessin& d, int max_order = kDefaultMaxOrder);

DessinInvariants invariants(const Dessin& d, int max_order = kDefaultMaxOrder);

// True iff x1 -> x2, y1 -> y2 extends to a group isomorphism.
bool are_isomorphic(const Dessin& a, const Dessin& b, int max_order = kDefaultMaxOrder);

struct Classification {
  std::vector<Dessin> representatives;  // lexicographically least pair per orbit
  long long pair_count = 0;             // |P(G)|
};

// Partitions the generating pairs into Aut(G)-orbits. Orbit membership is
// decided by pair-to-pair extension tests against the representatives, so the
// automorphism group is never materialized.
Classification classify_dessins(GroupPtr group, int max_order = kDefaultMaxOrder);

// Graph export; black nodes b<i> filled, white nodes w<j> unfilled, one edge
// line per multiplicity unit, deterministic ordering.
std::string graph_to_dot(const BipartiteGraph& graph);

}  // namespace dessins
