#pragma once

// Closed-form classification, construction and enumeration of cyclic and
// abelian regular dessins, designed to be cross-validated against the
// brute-force classification in dessin.hpp. The group-theoretic computation
// is the ground truth; every closed form here is asserted against it in the
// test suites.

#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

// C(m; r, s) = (C_m, g^r, g^s); generates iff gcd(r, s, m) = 1.
struct CyclicParams {
  long long m = 1, r = 0, s = 0;
  bool operator==(const CyclicParams&) const = default;
};

Dessin cyclic_dessin(const CyclicParams& params);

// True iff a single unit k scales (r, s) to (t, q) mod m.
bool cyclic_isomorphic(long long m, std::pair<long long, long long> rs,
                       std::pair<long long, long long> tq);

DessinInvariants cyclic_closed_invariants(const CyclicParams& params);

// Canonical representatives (lexicographically least (r, s) per unit-scaling
// orbit); the count equals the Dedekind totient of m.
std::vector<CyclicParams> cyclic_classes(long long m);

// Representatives (1, e) for each square root e of 1 mod m.
std::vector<CyclicParams> cyclic_symmetric_classes(long long m);

// Same generalized-Wilson orbit iff gcd(r,m) = gcd(t,m) and gcd(s,m) = gcd(q,m).
bool cyclic_wilson_orbit_equal(long long m, std::pair<long long, long long> rs,
                               std::pair<long long, long long> tq);

// A(p; a, b, c, e): the abelian p-dessin with o(x) = p^b determined by
//   x^{p^b} = y^{p^{a+c}} = [x,y] = 1,  y^{p^a} = x^{e p^{b-c}},
// with 0 <= c <= b-a and e a unit mod p^c (e = 1 when c = 0).
struct AbelianPParams {
  long long p = 2;
  int a = 0, b = 0, c = 0;
  long long e = 1;
  bool operator==(const AbelianPParams&) const = default;
};

// Concrete realization on Z_{p^a} (+) Z_{p^b} with x = (0,1) and
// y = (1, e p^{b-a-c}); the presentation relations are verified at build.
Dessin abelian_p_dessin(const AbelianPParams& params);

DessinInvariants abelian_p_closed_invariants(const AbelianPParams& params);

// One classified isomorphism class: the parameters, plus whether this entry
// is the colour-dual of the parametrized dessin (duals are distinct classes
// exactly when c < b-a).
struct AbelianPClass {
  AbelianPParams params;
  bool dual = false;
};

Dessin abelian_class_dessin(const AbelianPClass& cls);

// All classes with automorphism group Z_{p^a} (+) Z_{p^b}: the (c, e) classes
// with o(x) = p^b plus their colour-duals, merged at c = b-a where the dual
// of (b-a, e) is the class (b-a, e^{-1}). Count = psi(p^{b-a}).
std::vector<AbelianPClass> abelian_p_classes(long long p, int a, int b);

// Same generalized-Wilson orbit iff c1 = c2; requires matching (p, a, b).
bool abelian_wilson_orbit_equal(const AbelianPParams& lhs, const AbelianPParams& rhs);

struct AbelianClassEntry {
  std::vector<AbelianPClass> components;  // one per prime of m, ascending
  Dessin representative;
  bool symmetric = false;
};

struct AbelianClassList {
  long long n = 1, m = 1;
  std::vector<std::pair<long long, std::vector<AbelianPClass>>> per_prime;
  long long total_count = 0;      // = psi(m/n)
  long long symmetric_count = 0;  // = #{e : e^2 == 1 mod m/n}
  std::vector<AbelianClassEntry> classes;
};

// Classification for Z_n (+) Z_m (n | m): per-prime classes assembled into
// full representatives by joins across the coprime components.
AbelianClassList classify_abelian(long long n, long long m);

}  // namespace dessins
