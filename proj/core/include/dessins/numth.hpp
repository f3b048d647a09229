#pragma once

// Exact integer and modular arithmetic backing the counting formulas and
// the constructive congruence lemmas. All values are arbitrary precision
// (boost::multiprecision), so totient products never overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace dessins::numth {

using Int = boost::multiprecision::cpp_int;

struct PrimePower {
  Int prime;
  int exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Prime factorization with strictly increasing primes; 1 -> empty list.
using Factorization = std::vector<PrimePower>;

bool is_prime(const Int& n);

// Trial division; intended for desk-scale inputs (group orders, moduli).
Factorization factorize(const Int& n);

// Euler's totient: number of units in Z_n. phi(1) = 1.
Int euler_phi(const Int& n);

// Dedekind's totient: psi(n) = n * prod_{p|n} (1 + 1/p), exact. psi(1) = 1.
Int dedekind_psi(const Int& n);

// Jordan's totient: J_k(n) = n^k * prod_{p|n} (1 - p^{-k}), exact. J_1 = phi.
Int jordan_totient(int k, const Int& n);

// Solves a_1 x_1 + ... + a_t x_t == b (mod m). A solution exists iff
// gcd(a_1,...,a_t,m) divides b; returns std::nullopt otherwise. The returned
// vector has entries in [0, m) and satisfies the congruence exactly.
std::optional<std::vector<Int>> solve_linear_congruence(const std::vector<Int>& coeffs,
                                                        const Int& b, const Int& m);

// Given m | n and gcd(s, m) = 1, returns the least s' in [1, n) with
// gcd(s', n) = 1 and s' == s (mod m). Returns 1 when n = 1.
Int lift_unit(const Int& s, const Int& m, const Int& n);

// Least unit x mod m with a*x == b (mod m); exists iff gcd(a,m) = gcd(b,m).
// For m = 1 the unique residue 0 is returned.
std::optional<Int> unit_congruence_solution(const Int& a, const Int& b, const Int& m);

// All e in [0, m) with e^2 == 1 (mod m), sorted ascending. For m = 1 this is
// {0}, the unique residue, counted as one solution.
std::vector<Int> sqrt_one_units(const Int& m);

// Least nonnegative representative of a mod m (m >= 1).
Int mod(const Int& a, const Int& m);

long long to_ll(const Int& v);

}  // namespace dessins::numth
