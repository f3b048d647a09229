#pragma once

// Named verification bundles: each function re-derives a family of known
// identities from scratch (brute-force classification, orbit enumeration,
// closed-form cross-checks) and reports one CheckResult per assertion.

#include <string>
#include <vector>

#include "dessins/group.hpp"

namespace dessins::verify {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

using Report = std::vector<CheckResult>;

// The pinned constructor census used by the property sweeps and the census
// CLI; every spec builds a group of order <= max_order.
std::vector<GroupSpec> census_constructors(int max_order);

Report verify_c6();                       // C_6 table plus its orbit partitions
Report verify_alt4();                     // Alt(4): counts, classes, graph, flags
Report verify_q8();                       // quaternion group: unique class
Report verify_meta64();                   // metacyclic order 64: three classes
Report verify_heisenberg(int p);          // order p^3 exponent-p group: unique class
Report verify_join144();                  // the order-144 join of the two Alt(4) classes
Report verify_decomposition(const GroupSpec& spec);  // Sylow round-trip on one group
Report verify_anumber(int max_m);         // abelian counting sweep up to m = max_m

// acceptance-only sweeps (not CLI verbs)
Report verify_decomposition_sweep(int max_order);  // round-trip over the nilpotent census
Report verify_bridge(int max_n);                   // map->dessin identifications, 2 <= n <= max_n
Report verify_tower(int max_a);                    // extended groups of Z_{2^a} (+) Z_{2^a}
Report verify_properties(int max_order);           // property suite over the census

}  // namespace dessins::verify
