#include <doctest.h>

#include <numeric>
#include <random>

#include "dessins/numth.hpp"

using namespace dessins::numth;

namespace {

// independent oracles, deliberately dumb
long long phi_scan(long long n) {
  long long c = 0;
  for (long long x = 0; x < n; ++x) c += std::gcd(x, n) == 1;
  return n == 1 ? 1 : c;
}

long long coprime_pair_scan(long long n) {
  long long c = 0;
  for (long long r = 0; r < n; ++r)
    for (long long s = 0; s < n; ++s) c += std::gcd(std::gcd(r, s), n) == 1;
  return c;
}

}  // namespace

TEST_SUITE("numth") {

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
  CHECK(factorize(64) == Factorization{{2, 6}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  for (long long n = 1; n <= 2000; ++n) {
    Int prod = 1;
    Int last = 1;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(p > last);
      CHECK(is_prime(p));
      last = p;
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == phi_scan(8));
  CHECK(euler_phi(6) == phi_scan(6));
  for (long long n = 1; n <= 300; ++n) CHECK(euler_phi(n) == phi_scan(n));
}

TEST_CASE("dedekind_psi") {
  CHECK(dedekind_psi(6) == 12);
  CHECK(dedekind_psi(1) == 1);
  CHECK(dedekind_psi(8) == 12);  // p^k + p^{k-1} at (p,k) = (2,3)
}

TEST_CASE("jordan_totient") {
  CHECK(jordan_totient(1, 6) == euler_phi(6));
  CHECK(jordan_totient(2, 6) == coprime_pair_scan(6));
  CHECK(jordan_totient(2, 1) == 1);
  CHECK(jordan_totient(2, 12) == coprime_pair_scan(12));
}

TEST_CASE("psi phi J2 identity and multiplicativity") {
  for (long long n = 1; n <= 10000; ++n)
    CHECK(dedekind_psi(n) * euler_phi(n) == jordan_totient(2, n));
  for (long long a = 1; a <= 100; ++a)
    for (long long b = 1; a * b <= 10000; ++b)
      if (std::gcd(a, b) == 1) CHECK(dedekind_psi(a * b) == dedekind_psi(a) * dedekind_psi(b));
}

TEST_CASE("solve_linear_congruence") {
  auto sol = solve_linear_congruence({2, 3}, 1, 6);
  REQUIRE(sol.has_value());
  CHECK(((*sol)[0] * 2 + (*sol)[1] * 3) % 6 == 1);
  CHECK(!solve_linear_congruence({2, 4}, 1, 6).has_value());
  auto zero = solve_linear_congruence({0}, 0, 5);
  REQUIRE(zero.has_value());
  CHECK((*zero)[0] == 0);

  // solvable iff the gcd divides b; returned vectors verify by substitution
  for (long long m = 1; m <= 8; ++m)
    for (long long a1 = 0; a1 < m; ++a1)
      for (long long a2 = 0; a2 < m; ++a2)
        for (long long b = 0; b < m; ++b) {
          Int g = boost::multiprecision::gcd(Int(std::gcd(a1, a2)), Int(m));
          auto s = solve_linear_congruence({a1, a2}, b, m);
          CHECK(s.has_value() == (mod(b, g) == 0));
          if (s) CHECK(mod(a1 * (*s)[0] + a2 * (*s)[1] - b, m) == 0);
        }
}

TEST_CASE("lift_unit") {
  CHECK(lift_unit(3, 4, 8) == 3);
  CHECK(lift_unit(2, 3, 6) == 5);
  CHECK(lift_unit(1, 1, 12) == 1);
  CHECK(lift_unit(1, 1, 1) == 1);
  CHECK_THROWS_AS(lift_unit(2, 4, 8), std::invalid_argument);  // gcd(s, m) != 1
  CHECK_THROWS_AS(lift_unit(1, 3, 7), std::invalid_argument);  // m does not divide n

  std::mt19937 rng(20240910);
  for (int trial = 0; trial < 500; ++trial) {
    long long n = 1 + rng() % 1000;
    std::vector<long long> divisors;
    for (long long m = 1; m <= n; ++m)
      if (n % m == 0) divisors.push_back(m);
    long long m = divisors[rng() % divisors.size()];
    std::vector<long long> us;
    for (long long s = 1; s <= m; ++s)
      if (std::gcd(s % m, m) == 1) us.push_back(s % m == 0 ? m : s % m);
    long long s = us[rng() % us.size()];
    if (m == 1) s = 1;
    Int lifted = lift_unit(s, m, n);
    CHECK(lifted >= 1);
    CHECK((n == 1 || lifted < n));
    CHECK(boost::multiprecision::gcd(lifted, Int(n)) == 1);
    CHECK(mod(lifted - s, m) == 0);
  }
}

TEST_CASE("unit_congruence_solution") {
  CHECK(unit_congruence_solution(2, 4, 6) == Int(5));
  CHECK(!unit_congruence_solution(2, 3, 6).has_value());
  CHECK(unit_congruence_solution(1, 1, 12) == Int(1));
  CHECK(unit_congruence_solution(1, 1, 1) == Int(0));
  for (long long m = 1; m <= 30; ++m)
    for (long long a = 0; a < m; ++a)
      for (long long b = 0; b < m; ++b) {
        auto x = unit_congruence_solution(a, b, m);
        bool expect = std::gcd(a, m) == std::gcd(b, m);
        CHECK(x.has_value() == expect);
        if (x && m > 1) {
          CHECK(boost::multiprecision::gcd(*x, Int(m)) == 1);
          CHECK(mod(a * *x - b, m) == 0);
        }
      }
}

TEST_CASE("sqrt_one_units") {
  CHECK(sqrt_one_units(6) == std::vector<Int>{1, 5});
  CHECK(sqrt_one_units(1) == std::vector<Int>{0});
  CHECK(sqrt_one_units(8) == std::vector<Int>{1, 3, 5, 7});
  // closed form: 2^{#odd primes} times the 2-part factor
  for (long long m = 1; m <= 1000; ++m) {
    long long odd_primes = 0, two_part = 1, rest = m;
    while (rest % 2 == 0) {
      rest /= 2;
      two_part *= 2;
    }
    for (long long p = 3; p * p <= rest; p += 2)
      if (rest % p == 0) {
        ++odd_primes;
        while (rest % p == 0) rest /= p;
      }
    if (rest > 1) ++odd_primes;
    long long want = 1LL << odd_primes;
    if (two_part == 4) want *= 2;
    if (two_part >= 8) want *= 4;
    CHECK(static_cast<long long>(sqrt_one_units(m).size()) == want);
  }
}

}  // TEST_SUITE
