#include "dessins/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dessins/numth.hpp"
#include "dessins/ops.hpp"

namespace dessins {

namespace {

long long pos_mod(long long a, long long m) { return ((a % m) + m) % m; }

long long pow_ll(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > 2'000'000'000) throw std::invalid_argument("parameter overflow: p^k too large");
  }
  return r;
}

long long inv_mod(long long a, long long m) {
  a = pos_mod(a, m);
  for (long long x = 0; x < m; ++x)
    if (a * x % m == 1 % m) return x;
  throw std::invalid_argument("inv_mod: not a unit");
}

std::vector<long long> units(long long m) {
  std::vector<long long> out;
  for (long long u = 1; u <= m; ++u)
    if (std::gcd(u % m, m) == 1) out.push_back(u % m);
  if (m == 1) out = {0};
  std::sort(out.begin(), out.end());
  return out;
}

// full edge list of K_{black,white} with the given multiplicity, sorted
BipartiteGraph complete_graph(long long black, long long white, long long multiplicity) {
  BipartiteGraph g;
  g.black_count = static_cast<int>(black);
  g.white_count = static_cast<int>(white);
  for (int b = 0; b < black; ++b)
    for (int w = 0; w < white; ++w)
      for (long long c = 0; c < multiplicity; ++c) g.edges.emplace_back(b, w);
  g.complete = CompleteBipartiteTag{black, white, multiplicity};
  return g;
}

void validate_abelian_params(const AbelianPParams& q) {
  if (q.p < 2 || !numth::is_prime(q.p)) throw std::invalid_argument("abelian params: p must be prime");
  if (q.a < 0 || q.a > q.b) throw std::invalid_argument("abelian params: need 0 <= a <= b");
  if (q.c < 0 || q.c > q.b - q.a) throw std::invalid_argument("abelian params: need 0 <= c <= b-a");
  long long pc = pow_ll(q.p, q.c);
  if (q.c == 0) {
    if (q.e != 1) throw std::invalid_argument("abelian params: e must be 1 when c = 0");
  } else if (q.e < 1 || q.e >= pc || q.e % q.p == 0) {
    throw std::invalid_argument("abelian params: e must be a unit mod p^c in [1, p^c)");
  }
}

}  // namespace

Dessin cyclic_dessin(const CyclicParams& params) {
  if (params.m < 1) throw std::invalid_argument("cyclic_dessin: m must be >= 1");
  long long r = pos_mod(params.r, params.m), s = pos_mod(params.s, params.m);
  if (std::gcd(std::gcd(r, s), params.m) != 1)
    throw std::invalid_argument("cyclic_dessin: gcd(r, s, m) = " +
                                std::to_string(std::gcd(std::gcd(r, s), params.m)) + " != 1");
  GroupSpec spec;
  spec.kind = GroupSpec::Kind::cyclic;
  spec.params = {params.m};
  return new_dessin(build_group(spec), static_cast<int>(r), static_cast<int>(s));
}

bool cyclic_isomorphic(long long m, std::pair<long long, long long> rs,
                       std::pair<long long, long long> tq) {
  auto [r, s] = rs;
  auto [t, q] = tq;
  if (m == 1) return true;
  for (long long k = 1; k < m; ++k)
    if (std::gcd(k, m) == 1 && pos_mod(r * k - t, m) == 0 && pos_mod(s * k - q, m) == 0) return true;
  return false;
}

DessinInvariants cyclic_closed_invariants(const CyclicParams& params) {
  long long m = params.m;
  long long r = pos_mod(params.r, m), s = pos_mod(params.s, m);
  if (std::gcd(std::gcd(r, s), m) != 1) throw std::invalid_argument("cyclic_closed_invariants: not generating");
  DessinInvariants inv;
  long long d1 = std::gcd(m, r), d2 = std::gcd(m, s), d3 = std::gcd(m, r + s);
  inv.type = {m / d1, m / d2, m / d3};
  inv.genus = (m + 2 - d1 - d2 - d3) / 2;
  inv.euler_characteristic = 2 - 2 * inv.genus;
  inv.black_vertices = d1;
  inv.white_vertices = d2;
  inv.faces = d3;
  long long lcm_rs = (r == 0 || s == 0) ? 0 : std::lcm(r, s);
  long long k = lcm_rs == 0 ? 1 : m / std::gcd(m, lcm_rs);
  inv.core_order = k;
  if (k > 1) {
    long long u = pos_mod(r / d1, k), v = pos_mod(s / d2, k);
    inv.core_exponent = u * inv_mod(v, k) % k;
  }
  if (m == 1) {
    inv.symmetric = true;
  } else {
    long long e0 = d1 == 1 ? s * inv_mod(r, m) % m : 0;
    inv.symmetric = d1 == 1 && e0 * e0 % m == 1 % m;
  }
  inv.reflexible = true;
  inv.totally_symmetric = m == 1;
  inv.nilpotency_class = m == 1 ? 0 : 1;
  inv.graph = complete_graph(d1, d2, k);
  return inv;
}

std::vector<CyclicParams> cyclic_classes(long long m) {
  if (m < 1) throw std::invalid_argument("cyclic_classes: m must be >= 1");
  auto us = units(m);
  std::vector<char> seen(static_cast<size_t>(m) * m, 0);
  std::vector<CyclicParams> out;
  for (long long r = 0; r < m; ++r)
    for (long long s = 0; s < m; ++s) {
      if (seen[r * m + s] || std::gcd(std::gcd(r, s), m) != 1) continue;
      out.push_back({m, r, s});
      for (long long k : us) seen[(r * k % m) * m + s * k % m] = 1;
    }
  if (m == 1) out = {{1, 0, 0}};
  return out;
}

std::vector<CyclicParams> cyclic_symmetric_classes(long long m) {
  std::vector<CyclicParams> out;
  for (const auto& e : numth::sqrt_one_units(m))
    out.push_back({m, 1 % m, numth::to_ll(e) % m});
  return out;
}

bool cyclic_wilson_orbit_equal(long long m, std::pair<long long, long long> rs,
                               std::pair<long long, long long> tq) {
  auto [r, s] = rs;
  auto [t, q] = tq;
  return std::gcd(pos_mod(r, m), m) == std::gcd(pos_mod(t, m), m) &&
         std::gcd(pos_mod(s, m), m) == std::gcd(pos_mod(q, m), m);
}

Dessin abelian_p_dessin(const AbelianPParams& q) {
  validate_abelian_params(q);
  long long pa = pow_ll(q.p, q.a), pb = pow_ll(q.p, q.b);
  GroupSpec spec;
  spec.kind = GroupSpec::Kind::abelian;
  spec.params = {pa, pb};
  GroupPtr group = build_group(spec);

  // tuple (t1, t2) with t1 mod p^a, t2 mod p^b has index t1*p^b + t2
  long long E = pow_ll(q.p, q.b - q.a - q.c) * q.e % pb;
  int x = static_cast<int>(1 % pb);
  int y = static_cast<int>((1 % pa) * pb + E);
  Dessin d = new_dessin(group, x, y);

  const FiniteGroup& g = *group;
  long long pac = pow_ll(q.p, q.a + q.c);
  if (element_order(g, x) != pb || element_order(g, y) != pac ||
      g.pow(y, pa) != g.pow(x, pow_ll(q.p, q.b - q.c) * q.e))
    throw std::logic_error("abelian_p_dessin: realization violates the presentation");
  return d;
}

DessinInvariants abelian_p_closed_invariants(const AbelianPParams& q) {
  validate_abelian_params(q);
  long long pa = pow_ll(q.p, q.a), pb = pow_ll(q.p, q.b), pc = pow_ll(q.p, q.c);
  long long d = std::gcd(pow_ll(q.p, q.b - q.a), 1 + q.e * pow_ll(q.p, q.b - q.a - q.c));
  DessinInvariants inv;
  inv.type = {pb, pa * pc, pb / d};
  // Euler-Poincare in closed form: chi = p^a + p^{b-c} + d p^a - p^{a+b}
  inv.genus = 1 + (pa * (pb - d - 1) - pb / pc) / 2;
  inv.euler_characteristic = 2 - 2 * inv.genus;
  inv.black_vertices = pa;
  inv.white_vertices = pb / pc;
  inv.faces = pa * d;
  inv.core_order = pc;
  if (pc > 1) inv.core_exponent = inv_mod(q.e, pc);
  inv.symmetric = q.c == q.b - q.a && (q.e * q.e) % pc == 1 % pc;
  inv.reflexible = true;
  inv.totally_symmetric = q.a == q.b;
  inv.nilpotency_class = q.a + q.b == 0 ? 0 : 1;
  inv.graph = complete_graph(pa, pb / pc, pc);
  return inv;
}

Dessin abelian_class_dessin(const AbelianPClass& cls) {
  Dessin d = abelian_p_dessin(cls.params);
  return cls.dual ? dual(d) : d;
}

std::vector<AbelianPClass> abelian_p_classes(long long p, int a, int b) {
  if (a < 0 || a > b) throw std::invalid_argument("abelian_p_classes: need 0 <= a <= b");
  std::vector<AbelianPClass> out;
  for (int c = 0; c <= b - a; ++c) {
    long long pc = pow_ll(p, c);
    for (long long e = 1; e <= std::max<long long>(pc - 1, 1); ++e) {
      if (c > 0 && std::gcd(e, p) != 1) continue;
      out.push_back({{p, a, b, c, e}, false});
      // the colour-dual is a new class except at c = b-a, where the dual of
      // (b-a, e) is already listed as (b-a, e^{-1})
      if (c < b - a) out.push_back({{p, a, b, c, e}, true});
      if (pc == 1) break;
    }
  }
  return out;
}

bool abelian_wilson_orbit_equal(const AbelianPParams& lhs, const AbelianPParams& rhs) {
  validate_abelian_params(lhs);
  validate_abelian_params(rhs);
  if (lhs.p != rhs.p || lhs.a != rhs.a || lhs.b != rhs.b)
    throw std::invalid_argument("abelian_wilson_orbit_equal: mismatched (p, a, b)");
  return lhs.c == rhs.c;
}

AbelianClassList classify_abelian(long long n, long long m) {
  if (n < 1 || m < 1 || m % n != 0)
    throw std::invalid_argument("classify_abelian: need n >= 1 and n | m");
  AbelianClassList out;
  out.n = n;
  out.m = m;
  out.total_count = numth::to_ll(numth::dedekind_psi(m / n));
  out.symmetric_count = static_cast<long long>(numth::sqrt_one_units(m / n).size());

  for (const auto& pp : numth::factorize(m)) {
    long long p = numth::to_ll(pp.prime);
    int b = pp.exponent, a = 0;
    for (long long t = n; t % p == 0; t /= p) ++a;
    out.per_prime.emplace_back(p, abelian_p_classes(p, a, b));
  }

  // cartesian product over the per-prime class lists, last prime fastest
  std::vector<size_t> idx(out.per_prime.size(), 0);
  while (true) {
    AbelianClassEntry entry;
    entry.symmetric = true;
    Dessin rep;
    bool first = true;
    for (size_t i = 0; i < out.per_prime.size(); ++i) {
      const AbelianPClass& cls = out.per_prime[i].second[idx[i]];
      entry.components.push_back(cls);
      entry.symmetric = entry.symmetric && !cls.dual &&
                        abelian_p_closed_invariants(cls.params).symmetric;
      Dessin comp = abelian_class_dessin(cls);
      rep = first ? comp : join(rep, comp);
      first = false;
    }
    if (first) rep = cyclic_dessin({1, 0, 0});  // n = m = 1
    entry.representative = rep;
    out.classes.push_back(std::move(entry));
    size_t i = out.per_prime.size();
    while (i > 0 && ++idx[i - 1] == out.per_prime[i - 1].second.size()) idx[--i] = 0;
    if (i == 0) break;
  }

  if (static_cast<long long>(out.classes.size()) != out.total_count)
    throw std::logic_error("classify_abelian: class count does not match psi(m/n)");
  long long sym = std::count_if(out.classes.begin(), out.classes.end(),
                                [](const AbelianClassEntry& e) { return e.symmetric; });
  if (sym != out.symmetric_count)
    throw std::logic_error("classify_abelian: symmetric count mismatch");
  return out;
}

}  // namespace dessins
