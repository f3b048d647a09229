#pragma once

// Finite groups as Cayley tables, constructors for the groups used across the
// project, and the structure computations (automorphisms, central series,
// quotients, Sylow projections) everything else is built on.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dessins {

// Groups above this order are refused by the searches that enumerate
// automorphisms or orbits; callers may pass an explicit larger limit.
inline constexpr int kDefaultMaxOrder = 256;

// Parseable description of a constructible group. Text grammar (one token,
// case-insensitive, no whitespace):
//   cyclic:6  abelian:2,4  dihedral:8  q8  alt4  sym4  metacyclic:8,8,5
//   heisenberg:3  product:(cyclic:2)x(cyclic:3)
struct GroupSpec {
  enum class Kind { cyclic, abelian, dihedral, quaternion8, alternating4, symmetric, metacyclic, heisenberg, product };

  Kind kind = Kind::cyclic;
  std::vector<long long> params;   // numeric parameters per variant
  std::vector<GroupSpec> factors;  // product only

  static GroupSpec parse(std::string_view text);
  std::string str() const;
};

class FiniteGroup {
 public:
  // Validates: Latin square, identity and inverse laws always; associativity
  // on all triples when order <= kDefaultMaxOrder.
  static FiniteGroup from_table(int order, std::vector<int> table,
                                std::vector<std::string> labels = {},
                                std::string spec_text = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int pow(int g, long long k) const;
  int conj(int g, int h) const { return mul(mul(inv(h), g), h); }  // g^h
  int commutator(int g, int h) const { return mul(mul(inv(g), inv(h)), mul(g, h)); }

  const std::string& label(int g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find_label(std::string_view label) const;

  // Textual GroupSpec this table was built from; empty for derived tables.
  const std::string& spec_text() const { return spec_text_; }

  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }
  const std::vector<int>& table() const { return table_; }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::string spec_text_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Builds the Cayley table for a spec. Element orderings are canonical per
// variant (documented in group.cpp), so identical specs give identical tables.
GroupPtr build_group(const GroupSpec& spec);
GroupPtr build_group(std::string_view spec_text);

int element_order(const FiniteGroup& g, int a);
long long group_exponent(const FiniteGroup& g);

// Least subset containing `seed` closed under products and inverses; sorted.
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed);

bool is_generating_pair(const FiniteGroup& g, int x, int y);

// All ordered generating pairs, in row-major order of (x, y).
std::vector<std::pair<int, int>> generating_pairs(const FiniteGroup& g);

struct Automorphism {
  std::vector<int> map;  // element index -> image index
  int apply(int g) const { return map[g]; }
  bool operator==(const Automorphism&) const = default;
};

// The unique automorphism with sources[i] -> targets[i], if one exists.
// Requires `sources` to generate g (rejected otherwise).
std::optional<Automorphism> extend_to_automorphism(const FiniteGroup& g,
                                                   const std::vector<int>& sources,
                                                   const std::vector<int>& targets);

// The unique isomorphism src -> dst with sources[i] -> targets[i], if any;
// `sources` must generate src.
std::optional<std::vector<int>> extend_to_isomorphism(const FiniteGroup& src,
                                                      const std::vector<int>& sources,
                                                      const FiniteGroup& dst,
                                                      const std::vector<int>& targets);

// Full automorphism group, sorted with the identity first. Enumerates images
// of a fixed generating tuple, pruning candidates by element order and by the
// order of the generated subgroup, then verifies each extension on the table.
std::vector<Automorphism> automorphism_group(const FiniteGroup& g, int max_order = kDefaultMaxOrder);

// Deterministic small generating tuple (single generator or first generating
// pair when one exists, greedy extension otherwise).
std::vector<int> find_generating_tuple(const FiniteGroup& g);

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

struct Quotient {
  GroupPtr group;
  std::vector<int> projection;  // parent element -> coset index
};

// Quotient by a normal subgroup (both subgroup and normality are verified).
// Cosets are numbered by their least parent element, ascending.
Quotient quotient_group(const FiniteGroup& g, const std::vector<int>& normal_subgroup);

struct Subgroup {
  GroupPtr group;
  std::vector<int> to_parent;  // subgroup element -> parent element
};

// The subgroup on `elements` (must be closed) as its own table; elements are
// relabeled 0..k-1 in ascending parent order.
Subgroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elements);

std::vector<int> center(const FiniteGroup& g);
std::vector<int> commutator_subgroup(const FiniteGroup& g);

// G = G_1 >= G_2 >= ... until stabilization, G_{i+1} = [G_i, G].
std::vector<std::vector<int>> lower_central_series(const FiniteGroup& g);

// Length of the lower central series to triviality; nullopt if it stabilizes
// above the identity. The trivial group has class 0.
std::optional<int> nilpotency_class(const FiniteGroup& g);

// For nilpotent g: the projection of an element onto its Sylow p-component,
// realized as g^{m_p} with m_p == 1 mod p^{v_p(|G|)} and m_p == 0 mod the
// p-free part of the exponent.
int sylow_projection(const FiniteGroup& g, int a, long long p);

}  // namespace dessins
