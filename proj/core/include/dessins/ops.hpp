#pragma once

// Dessin operations: duality and triality, generalized Wilson operations,
// the parallel product (join), Sylow decomposition of nilpotent dessins, the
// extended automorphism group of a symmetric dessin, and the bridge between
// regular bipartite maps and dessins.

#include <array>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

// The six permutations of the roles (black, white, face). Operating on the
// triple (x, y, z) with z = (xy)^{-1} (so that xyz = 1), the result triple is
// T'[i] = T[roles[i]]; its first two entries form the new pair.
enum class Triality { identity, swap_bw, swap_bf, swap_wf, cycle_bwf, cycle_bfw };

inline constexpr std::array<Triality, 6> kAllTrialities = {
    Triality::identity, Triality::swap_bw,  Triality::swap_bf,
    Triality::swap_wf,  Triality::cycle_bwf, Triality::cycle_bfw};

std::array<int, 3> triality_roles(Triality t);
Triality triality_from_roles(const std::array<int, 3>& roles);

// Tag equivalent to applying `first`, then `second`; the tags compose as
// Sym(3). On dessins the identity holds up to isomorphism (exactly, up to an
// inner twist of the regenerated third slot).
Triality triality_compose(Triality second, Triality first);

// (G, x, y) -> (G, y, x); swaps the vertex colours.
Dessin dual(const Dessin& d);

Dessin triality(const Dessin& d, Triality t);

struct WilsonParams {
  long long i = 1, j = 1;  // require gcd(i, o(x)) = gcd(j, o(y)) = 1
};

// H_{i,j}: (G, x, y) -> (G, x^i, y^j).
Dessin wilson(const Dessin& d, WilsonParams params);

// Parallel product: the dessin on <(x1,x2), (y1,y2)> inside G1 x G2. The
// ambient product table is never materialized; only the closure is, and the
// construction is refused once the closure exceeds `order_cap` elements.
Dessin join(const Dessin& a, const Dessin& b, int order_cap = 10000);

// True iff at least two of gcd(l1,l2) = gcd(m1,m2) = gcd(n1,n2) = 1 hold for
// the two types; a sufficient (not necessary) condition for the join to be
// the full direct product.
bool coprime_product_check(const Dessin& a, const Dessin& b);

// One dessin per prime divisor of |G| (ascending), on the Sylow p-component
// generated by the projected pair. Requires G nilpotent.
std::vector<Dessin> sylow_decompose(const Dessin& d);

// For a symmetric dessin with transposing automorphism tau: the group on
// pairs (g, eps) with (g,eps)(h,delta) = (g tau^eps(h), eps+delta mod 2);
// element (g, eps) has index eps*|G| + g. When x = y, tau is the identity and
// this is the direct product G x Z_2.
GroupPtr extended_group(const Dessin& d, int max_order = kDefaultMaxOrder);

// From a two-generated group with an involutory generator: the dessin on
// H = <R, R^L> with the pair (R, R^L). Requires L^2 = 1 and <R, L> = Gamma.
Dessin map_to_dessin(GroupPtr gamma, int R, int L);

enum class OpSet { triality, generalized_wilson, both };

// Partition of the input dessins (which must share one group) into orbits
// under the closure of the selected operations; membership is decided up to
// dessin isomorphism. Each orbit is sorted, orbits ordered by least member.
std::vector<std::vector<int>> operation_orbits(const std::vector<Dessin>& dessins, OpSet ops,
                                               int max_order = kDefaultMaxOrder);

}  // namespace dessins
