#include "dessins/numth.hpp"

#include <stdexcept>
#include <utility>

namespace dessins::numth {

namespace {

Int gcd(Int a, Int b) { return boost::multiprecision::gcd(std::move(a), std::move(b)); }

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0.
std::tuple<Int, Int, Int> egcd(Int a, Int b) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Int pow_int(const Int& base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Int mod(const Int& a, const Int& m) {
  if (m < 1) throw std::invalid_argument("mod: modulus must be positive");
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return d == n;
  return true;
}

Factorization factorize(const Int& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  Factorization out;
  Int rest = n;
  for (Int d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    int e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

Int euler_phi(const Int& n) {
  Int r = 1;
  for (const auto& [p, e] : factorize(n)) r *= pow_int(p, e - 1) * (p - 1);
  return r;
}

Int dedekind_psi(const Int& n) {
  Int r = 1;
  for (const auto& [p, e] : factorize(n)) r *= pow_int(p, e - 1) * (p + 1);
  return r;
}

Int jordan_totient(int k, const Int& n) {
  if (k < 1) throw std::invalid_argument("jordan_totient: k must be >= 1");
  Int r = 1;
  for (const auto& [p, e] : factorize(n)) {
    Int pk = pow_int(p, k);
    r *= pow_int(pk, e - 1) * (pk - 1);
  }
  return r;
}

std::optional<std::vector<Int>> solve_linear_congruence(const std::vector<Int>& coeffs,
                                                        const Int& b, const Int& m) {
  if (m < 1) throw std::invalid_argument("solve_linear_congruence: modulus must be positive");
  if (coeffs.empty()) throw std::invalid_argument("solve_linear_congruence: empty coefficients");

  // Fold in the modulus first, then accumulate Bezout coefficients so that
  // sum a_i * u_i == g (mod m) at every step.
  Int g = m;
  std::vector<Int> u(coeffs.size(), 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    auto [g2, s, t] = egcd(g, coeffs[i]);
    for (size_t j = 0; j < i; ++j) u[j] = mod(u[j] * s, m);
    u[i] = mod(t, m);
    g = g2;
  }
  if (mod(b, g) != 0) return std::nullopt;

  Int scale = mod(b / g, m);
  std::vector<Int> x(coeffs.size());
  Int check = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    x[i] = mod(u[i] * scale, m);
    check += coeffs[i] * x[i];
  }
  if (mod(check - b, m) != 0) throw std::logic_error("solve_linear_congruence: construction failed");
  return x;
}

Int lift_unit(const Int& s, const Int& m, const Int& n) {
  if (m < 1 || n < 1 || n % m != 0) throw std::invalid_argument("lift_unit: need m | n");
  if (gcd(mod(s, m), m) != 1) throw std::invalid_argument("lift_unit: s must be a unit mod m");
  if (n == 1) return 1;
  // The least valid representative is found by stepping through the residue
  // class of s mod m; existence is guaranteed since the class meets Z_n^*.
  for (Int c = mod(s, m) == 0 ? m : mod(s, m); c < n; c += m)
    if (gcd(c, n) == 1) return c;
  throw std::logic_error("lift_unit: no unit found");
}

std::optional<Int> unit_congruence_solution(const Int& a, const Int& b, const Int& m) {
  if (m < 1) throw std::invalid_argument("unit_congruence_solution: modulus must be positive");
  if (m == 1) return Int(0);
  if (gcd(mod(a, m), m) != gcd(mod(b, m), m)) return std::nullopt;
  for (Int x = 1; x < m; ++x)
    if (gcd(x, m) == 1 && mod(a * x - b, m) == 0) return x;
  return std::nullopt;  // unreachable when the gcd criterion holds
}

std::vector<Int> sqrt_one_units(const Int& m) {
  if (m < 1) throw std::invalid_argument("sqrt_one_units: modulus must be positive");
  if (m == 1) return {Int(0)};
  std::vector<Int> out;
  for (Int e = 0; e < m; ++e)
    if (mod(e * e, m) == 1) out.push_back(e);
  return out;
}

}  // namespace dessins::numth
