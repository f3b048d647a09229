#include "dessins/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "dessins/numth.hpp"

namespace dessins {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<long long> parse_ll_list(std::string_view s, const std::string& what) {
  std::vector<long long> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("group spec: empty parameter in " + what);
    long long v = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("group spec: bad number '" + std::string(tok) + "' in " + what);
      v = v * 10 + (c - '0');
      if (v > 1'000'000'000) throw std::invalid_argument("group spec: parameter too large in " + what);
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// --- permutation helpers (alternating / symmetric constructors) ---

std::vector<std::vector<int>> all_perms(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool perm_even(const std::vector<int>& p) {
  int swaps = 0;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    swaps += len - 1;
  }
  return swaps % 2 == 0;
}

// Cycle notation on 1-based points: "(12)(34)", identity is "()".
std::string perm_label(const std::vector<int>& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) {
      seen[i] = 1;
      continue;
    }
    out += '(';
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

GroupPtr make_group(int order, std::vector<int> table, std::vector<std::string> labels,
                    std::string spec_text) {
  return std::make_shared<FiniteGroup>(
      FiniteGroup::from_table(order, std::move(table), std::move(labels), std::move(spec_text)));
}

GroupPtr build_cyclic(long long m, const std::string& spec_text) {
  if (m < 1) throw std::invalid_argument("cyclic: order must be >= 1");
  int n = static_cast<int>(m);
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "g^" + std::to_string(i);
    for (int j = 0; j < n; ++j) table[static_cast<size_t>(i) * n + j] = (i + j) % n;
  }
  return make_group(n, std::move(table), std::move(labels), spec_text);
}

// Elements are tuples (t_1,...,t_k), t_i in Z_{d_i}, indexed in mixed radix
// with the last coordinate fastest.
GroupPtr build_abelian(const std::vector<long long>& ds, const std::string& spec_text) {
  if (ds.empty()) throw std::invalid_argument("abelian: need at least one invariant factor");
  long long n = 1;
  for (size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] < 1) throw std::invalid_argument("abelian: factors must be >= 1");
    if (i > 0 && ds[i] % ds[i - 1] != 0)
      throw std::invalid_argument("abelian: invariant factors must form a divisibility chain");
    n *= ds[i];
    if (n > 1'000'000) throw std::invalid_argument("abelian: order too large");
  }
  int order = static_cast<int>(n);
  size_t k = ds.size();
  auto decode = [&](int idx, std::vector<int>& t) {
    for (size_t i = k; i-- > 0;) {
      t[i] = idx % static_cast<int>(ds[i]);
      idx /= static_cast<int>(ds[i]);
    }
  };
  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<std::string> labels(order);
  std::vector<int> ta(k), tb(k);
  for (int i = 0; i < order; ++i) {
    decode(i, ta);
    std::string lab = "(";
    for (size_t c = 0; c < k; ++c) lab += (c ? "," : "") + std::to_string(ta[c]);
    labels[i] = lab + ")";
    for (int j = 0; j < order; ++j) {
      decode(j, tb);
      int idx = 0;
      for (size_t c = 0; c < k; ++c) idx = idx * static_cast<int>(ds[c]) + (ta[c] + tb[c]) % static_cast<int>(ds[c]);
      table[static_cast<size_t>(i) * order + j] = idx;
    }
  }
  return make_group(order, std::move(table), std::move(labels), spec_text);
}

// Dihedral group of order n (n even): rotations r^i at indices 0..n/2-1,
// reflections r^i*f at indices n/2..n-1, with f*r = r^{-1}*f.
GroupPtr build_dihedral(long long n, const std::string& spec_text) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("dihedral: order must be even and >= 2");
  int order = static_cast<int>(n), h = order / 2;
  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (int i = 0; i < h; ++i) {
    labels[i] = "r^" + std::to_string(i);
    labels[h + i] = "r^" + std::to_string(i) + "*f";
  }
  auto idx = [&](bool flip, int rot) { return (flip ? h : 0) + ((rot % h) + h) % h; };
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      bool fa = a >= h, fb = b >= h;
      int ra = a % h, rb = b % h;
      // r^ra f^fa * r^rb f^fb = r^(ra + rb or ra - rb) f^(fa xor fb)
      int rot = fa ? ra - rb : ra + rb;
      table[static_cast<size_t>(a) * order + b] = idx(fa != fb, rot);
    }
  return make_group(order, std::move(table), std::move(labels), spec_text);
}

// Unit quaternions {+-1, +-i, +-j, +-k}, indexed 1,-1,i,-i,j,-j,k,-k.
GroupPtr build_quaternion8(const std::string& spec_text) {
  // basis products: row*col over (1,i,j,k); value = (axis, sign)
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kBasis = {{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  static const char* kNames[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<int> table(64);
  std::vector<std::string> labels(kNames, kNames + 8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      auto [axis, s] = kBasis[a / 2][b / 2];
      table[static_cast<size_t>(a) * 8 + b] = axis * 2 + ((a % 2) ^ (b % 2) ^ s);
    }
  return make_group(8, std::move(table), std::move(labels), spec_text);
}

// Permutations in lexicographic one-line order; product is composition of
// functions, (a*b)(pt) = a(b(pt)).
GroupPtr build_permutation(int k, bool even_only, const std::string& spec_text) {
  auto perms = all_perms(k);
  if (even_only) {
    std::vector<std::vector<int>> evens;
    for (auto& p : perms)
      if (perm_even(p)) evens.push_back(p);
    perms = std::move(evens);
  }
  int order = static_cast<int>(perms.size());
  std::vector<int> index_of;  // by mixed-radix rank of one-line form
  auto rank = [k](const std::vector<int>& p) {
    int r = 0;
    for (int v : p) r = r * k + v;
    return r;
  };
  index_of.assign(static_cast<size_t>(rank(perms.back())) + 1, -1);
  for (int i = 0; i < order; ++i) index_of[rank(perms[i])] = i;
  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<std::string> labels(order);
  std::vector<int> comp(k);
  for (int a = 0; a < order; ++a) {
    labels[a] = perm_label(perms[a]);
    for (int b = 0; b < order; ++b) {
      for (int pt = 0; pt < k; ++pt) comp[pt] = perms[a][perms[b][pt]];
      table[static_cast<size_t>(a) * order + b] = index_of[rank(comp)];
    }
  }
  return make_group(order, std::move(table), std::move(labels), spec_text);
}

// <g,h | g^m = h^n = 1, h^g = h^t>; element g^i h^j at index i*n + j.
GroupPtr build_metacyclic(long long m, long long n, long long t, const std::string& spec_text) {
  if (m < 1 || n < 1) throw std::invalid_argument("metacyclic: orders must be >= 1");
  if (m * n > 1'000'000) throw std::invalid_argument("metacyclic: order too large");
  t = ((t % n) + n) % n;
  // t^m == 1 (mod n) is required for the presentation to define a group of
  // order m*n (the conjugation action of g must have order dividing m).
  long long tm = 1 % n;
  for (long long i = 0; i < m; ++i) tm = (tm * t) % n;
  if (tm != 1 % n)
    throw std::invalid_argument("metacyclic: need t^m == 1 (mod n), got t^" + std::to_string(m) +
                                " == " + std::to_string(tm) + " (mod " + std::to_string(n) + ")");
  int order = static_cast<int>(m * n);
  std::vector<long long> tpow(m);
  tpow[0] = 1 % n;
  for (long long i = 1; i < m; ++i) tpow[i] = (tpow[i - 1] * t) % n;
  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (long long i1 = 0; i1 < m; ++i1)
    for (long long j1 = 0; j1 < n; ++j1) {
      int a = static_cast<int>(i1 * n + j1);
      labels[a] = "g^" + std::to_string(i1) + "*h^" + std::to_string(j1);
      for (long long i2 = 0; i2 < m; ++i2)
        for (long long j2 = 0; j2 < n; ++j2) {
          // g^i1 h^j1 g^i2 h^j2 = g^(i1+i2) h^(j1*t^i2 + j2)
          long long i = (i1 + i2) % m, j = (j1 * tpow[i2] + j2) % n;
          table[static_cast<size_t>(a) * order + i2 * n + j2] = static_cast<int>(i * n + j);
        }
    }
  return make_group(order, std::move(table), std::move(labels), spec_text);
}

// 3x3 unitriangular matrices over Z_p realized on normal forms x^a y^b z^c,
// index a*p^2 + b*p + c, with (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2).
GroupPtr build_heisenberg(long long p, const std::string& spec_text) {
  if (p <= 2 || !numth::is_prime(p)) throw std::invalid_argument("heisenberg: p must be an odd prime");
  if (p > 13) throw std::invalid_argument("heisenberg: order too large");
  int ip = static_cast<int>(p), order = ip * ip * ip;
  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (int a1 = 0; a1 < ip; ++a1)
    for (int b1 = 0; b1 < ip; ++b1)
      for (int c1 = 0; c1 < ip; ++c1) {
        int u = (a1 * ip + b1) * ip + c1;
        labels[u] = "x^" + std::to_string(a1) + "*y^" + std::to_string(b1) + "*z^" + std::to_string(c1);
        for (int a2 = 0; a2 < ip; ++a2)
          for (int b2 = 0; b2 < ip; ++b2)
            for (int c2 = 0; c2 < ip; ++c2) {
              int v = (a2 * ip + b2) * ip + c2;
              int a = (a1 + a2) % ip, b = (b1 + b2) % ip, c = (c1 + c2 + a1 * b2) % ip;
              table[static_cast<size_t>(u) * order + v] = (a * ip + b) * ip + c;
            }
      }
  return make_group(order, std::move(table), std::move(labels), spec_text);
}

GroupPtr build_product(const GroupSpec& spec, const std::string& spec_text) {
  GroupPtr g1 = build_group(spec.factors[0]);
  GroupPtr g2 = build_group(spec.factors[1]);
  long long n1 = g1->order(), n2 = g2->order();
  if (n1 * n2 > 1'000'000) throw std::invalid_argument("product: order too large");
  int order = static_cast<int>(n1 * n2);
  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2) {
      int a = static_cast<int>(a1 * n2 + a2);
      labels[a] = "(" + g1->label(a1) + "," + g2->label(a2) + ")";
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          table[static_cast<size_t>(a) * order + b1 * n2 + b2] =
              g1->mul(a1, b1) * static_cast<int>(n2) + g2->mul(a2, b2);
    }
  return make_group(order, std::move(table), std::move(labels), spec_text);
}

// Reusable two-generator closure with timestamped marks; returns true iff
// <x, y> is the whole group. A subgroup of more than half the order is the
// whole group, which allows an early exit.
struct PairClosure {
  std::vector<int> mark, queue;
  int stamp = 0;

  bool generates(const FiniteGroup& g, int x, int y) {
    int n = g.order();
    if (static_cast<int>(mark.size()) < n) mark.assign(n, 0);
    ++stamp;
    queue.clear();
    queue.push_back(g.identity());
    mark[g.identity()] = stamp;
    int count = 1;
    if (2 * count > n) return true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int a = queue[qi];
      for (int s : {x, y}) {
        int b = g.mul(a, s);
        if (mark[b] != stamp) {
          mark[b] = stamp;
          queue.push_back(b);
          if (2 * ++count > n) return true;
        }
      }
    }
    return count == n;
  }
};

// phi: src -> dst with sources[i] -> targets[i], grown over a BFS spanning
// tree and then verified. Checking phi(a*s_i) = phi(a)*t_i for every a and
// every generator step suffices: multiplicativity on all pairs follows by
// induction on the word length of the second factor.
std::optional<std::vector<int>> extend_map(const FiniteGroup& src, const std::vector<int>& sources,
                                           const FiniteGroup& dst, const std::vector<int>& targets) {
  int n = src.order();
  if (dst.order() != n || sources.size() != targets.size()) return std::nullopt;
  std::vector<int> phi(n, -1), order;
  order.reserve(n);
  phi[src.identity()] = dst.identity();
  order.push_back(src.identity());
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int a = order[qi];
    for (size_t i = 0; i < sources.size(); ++i) {
      int b = src.mul(a, sources[i]);
      if (phi[b] == -1) {
        phi[b] = dst.mul(phi[a], targets[i]);
        order.push_back(b);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;  // sources do not generate
  for (int a = 0; a < n; ++a)
    for (size_t i = 0; i < sources.size(); ++i)
      if (phi[src.mul(a, sources[i])] != dst.mul(phi[a], targets[i])) return std::nullopt;
  std::vector<char> hit(n, 0);
  for (int a = 0; a < n; ++a) {
    if (hit[phi[a]]) return std::nullopt;
    hit[phi[a]] = 1;
  }
  return phi;
}

}  // namespace

// --- GroupSpec ---

GroupSpec GroupSpec::parse(std::string_view text) {
  std::string s = lower(text);
  if (s.find_first_of(" \t\n") != std::string::npos)
    throw std::invalid_argument("group spec: no whitespace allowed");
  GroupSpec spec;
  auto starts = [&](std::string_view p) { return s.rfind(p, 0) == 0; };
  if (s == "q8") {
    spec.kind = Kind::quaternion8;
  } else if (s == "alt4") {
    spec.kind = Kind::alternating4;
  } else if (starts("sym") && s.size() == 4 && std::isdigit(static_cast<unsigned char>(s[3]))) {
    spec.kind = Kind::symmetric;
    spec.params = {s[3] - '0'};
    if (spec.params[0] < 1 || spec.params[0] > 5)
      throw std::invalid_argument("group spec: symmetric degree must be 1..5");
  } else if (starts("cyclic:")) {
    spec.kind = Kind::cyclic;
    spec.params = parse_ll_list(s.substr(7), "cyclic");
    if (spec.params.size() != 1) throw std::invalid_argument("group spec: cyclic takes one parameter");
  } else if (starts("abelian:")) {
    spec.kind = Kind::abelian;
    spec.params = parse_ll_list(s.substr(8), "abelian");
  } else if (starts("dihedral:")) {
    spec.kind = Kind::dihedral;
    spec.params = parse_ll_list(s.substr(9), "dihedral");
    if (spec.params.size() != 1) throw std::invalid_argument("group spec: dihedral takes one parameter");
  } else if (starts("metacyclic:")) {
    spec.kind = Kind::metacyclic;
    spec.params = parse_ll_list(s.substr(11), "metacyclic");
    if (spec.params.size() != 3) throw std::invalid_argument("group spec: metacyclic takes m,n,t");
  } else if (starts("heisenberg:")) {
    spec.kind = Kind::heisenberg;
    spec.params = parse_ll_list(s.substr(11), "heisenberg");
    if (spec.params.size() != 1) throw std::invalid_argument("group spec: heisenberg takes one parameter");
  } else if (starts("product:")) {
    spec.kind = Kind::product;
    std::string_view rest = std::string_view(s).substr(8);
    auto read_factor = [&]() {
      if (rest.empty() || rest[0] != '(') throw std::invalid_argument("group spec: product expects (spec)x(spec)");
      int depth = 0;
      size_t i = 0;
      for (; i < rest.size(); ++i) {
        if (rest[i] == '(') ++depth;
        if (rest[i] == ')' && --depth == 0) break;
      }
      if (depth != 0) throw std::invalid_argument("group spec: unbalanced parentheses");
      GroupSpec f = GroupSpec::parse(rest.substr(1, i - 1));
      rest = rest.substr(i + 1);
      return f;
    };
    spec.factors.push_back(read_factor());
    if (rest.empty() || rest[0] != 'x') throw std::invalid_argument("group spec: product expects (spec)x(spec)");
    rest = rest.substr(1);
    spec.factors.push_back(read_factor());
    if (!rest.empty()) throw std::invalid_argument("group spec: trailing text after product");
  } else {
    throw std::invalid_argument("group spec: unrecognized '" + std::string(text) + "'");
  }
  return spec;
}

std::string GroupSpec::str() const {
  auto join = [](const std::vector<long long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  switch (kind) {
    case Kind::cyclic: return "cyclic:" + join(params);
    case Kind::abelian: return "abelian:" + join(params);
    case Kind::dihedral: return "dihedral:" + join(params);
    case Kind::quaternion8: return "q8";
    case Kind::alternating4: return "alt4";
    case Kind::symmetric: return "sym" + join(params);
    case Kind::metacyclic: return "metacyclic:" + join(params);
    case Kind::heisenberg: return "heisenberg:" + join(params);
    case Kind::product: return "product:(" + factors[0].str() + ")x(" + factors[1].str() + ")";
  }
  return {};
}

// --- FiniteGroup ---

FiniteGroup FiniteGroup::from_table(int order, std::vector<int> table,
                                    std::vector<std::string> labels, std::string spec_text) {
  if (order < 1) throw std::invalid_argument("group: order must be >= 1");
  if (table.size() != static_cast<size_t>(order) * order)
    throw std::invalid_argument("group: table size does not match order");
  for (int v : table)
    if (v < 0 || v >= order) throw std::invalid_argument("group: table entry out of range");

  std::vector<char> seen(order);
  for (int a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < order; ++b) seen[table[static_cast<size_t>(a) * order + b]] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("group: row " + std::to_string(a) + " is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < order; ++b) seen[table[static_cast<size_t>(b) * order + a]] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("group: column " + std::to_string(a) + " is not a permutation");
  }

  int identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      ok = table[static_cast<size_t>(e) * order + a] == a && table[static_cast<size_t>(a) * order + e] == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw std::invalid_argument("group: no identity element");

  std::vector<int> inverse(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (table[static_cast<size_t>(a) * order + b] == identity) {
        if (table[static_cast<size_t>(b) * order + a] != identity)
          throw std::invalid_argument("group: one-sided inverse at " + std::to_string(a));
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0) throw std::invalid_argument("group: missing inverse at " + std::to_string(a));
  }

  if (order <= kDefaultMaxOrder) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) {
        int ab = table[static_cast<size_t>(a) * order + b];
        for (int c = 0; c < order; ++c)
          if (table[static_cast<size_t>(ab) * order + c] !=
              table[static_cast<size_t>(a) * order + table[static_cast<size_t>(b) * order + c]])
            throw std::invalid_argument("group: associativity fails at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
      }
  }

  if (labels.empty()) {
    labels.resize(order);
    for (int i = 0; i < order; ++i) labels[i] = std::to_string(i);
  }
  if (labels.size() != static_cast<size_t>(order))
    throw std::invalid_argument("group: label count does not match order");

  FiniteGroup g;
  g.order_ = order;
  g.identity_ = identity;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.labels_ = std::move(labels);
  g.spec_text_ = std::move(spec_text);
  return g;
}

int FiniteGroup::pow(int g, long long k) const {
  int o = 1, c = g;
  while (c != identity_) {
    c = mul(c, g);
    ++o;
  }
  k %= o;
  if (k < 0) k += o;
  int r = identity_;
  for (long long i = 0; i < k; ++i) r = mul(r, g);
  return r;
}

std::optional<int> FiniteGroup::find_label(std::string_view label) const {
  for (int i = 0; i < order_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

GroupPtr build_group(const GroupSpec& spec) {
  const std::string text = spec.str();
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: return build_cyclic(spec.params[0], text);
    case GroupSpec::Kind::abelian: return build_abelian(spec.params, text);
    case GroupSpec::Kind::dihedral: return build_dihedral(spec.params[0], text);
    case GroupSpec::Kind::quaternion8: return build_quaternion8(text);
    case GroupSpec::Kind::alternating4: return build_permutation(4, true, text);
    case GroupSpec::Kind::symmetric: return build_permutation(static_cast<int>(spec.params[0]), false, text);
    case GroupSpec::Kind::metacyclic: return build_metacyclic(spec.params[0], spec.params[1], spec.params[2], text);
    case GroupSpec::Kind::heisenberg: return build_heisenberg(spec.params[0], text);
    case GroupSpec::Kind::product: return build_product(spec, text);
  }
  throw std::invalid_argument("group spec: unknown kind");
}

GroupPtr build_group(std::string_view spec_text) { return build_group(GroupSpec::parse(spec_text)); }

// --- elementary operations ---

int element_order(const FiniteGroup& g, int a) {
  int o = 1, c = a;
  while (c != g.identity()) {
    c = g.mul(c, a);
    ++o;
  }
  return o;
}

long long group_exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int a = 0; a < g.order(); ++a) e = std::lcm(e, static_cast<long long>(element_order(g, a)));
  return e;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed) {
  if (seed.empty()) throw std::invalid_argument("subgroup_closure: empty seed");
  std::vector<char> mark(g.order(), 0);
  std::vector<int> queue;
  mark[g.identity()] = 1;
  queue.push_back(g.identity());
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int s : seed) {
      int b = g.mul(queue[qi], s);
      if (!mark[b]) {
        mark[b] = 1;
        queue.push_back(b);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_generating_pair(const FiniteGroup& g, int x, int y) {
  PairClosure pc;
  return pc.generates(g, x, y);
}

std::vector<std::pair<int, int>> generating_pairs(const FiniteGroup& g) {
  std::vector<std::pair<int, int>> out;
  PairClosure pc;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (pc.generates(g, x, y)) out.emplace_back(x, y);
  return out;
}

std::optional<Automorphism> extend_to_automorphism(const FiniteGroup& g,
                                                   const std::vector<int>& sources,
                                                   const std::vector<int>& targets) {
  if (sources.size() != targets.size())
    throw std::invalid_argument("extend_to_automorphism: source/target length mismatch");
  if (static_cast<int>(subgroup_closure(g, sources).size()) != g.order())
    throw std::invalid_argument("extend_to_automorphism: sources generate a proper subgroup of order " +
                                std::to_string(subgroup_closure(g, sources).size()));
  auto phi = extend_map(g, sources, g, targets);
  if (!phi) return std::nullopt;
  return Automorphism{std::move(*phi)};
}

std::optional<std::vector<int>> extend_to_isomorphism(const FiniteGroup& src,
                                                      const std::vector<int>& sources,
                                                      const FiniteGroup& dst,
                                                      const std::vector<int>& targets) {
  if (sources.size() != targets.size())
    throw std::invalid_argument("extend_to_isomorphism: source/target length mismatch");
  if (static_cast<int>(subgroup_closure(src, sources).size()) != src.order())
    throw std::invalid_argument("extend_to_isomorphism: sources do not generate the source group");
  return extend_map(src, sources, dst, targets);
}

std::vector<int> find_generating_tuple(const FiniteGroup& g) {
  int n = g.order();
  if (n == 1) return {g.identity()};
  for (int a = 0; a < n; ++a)
    if (element_order(g, a) == n) return {a};
  if (n <= kDefaultMaxOrder) {
    PairClosure pc;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (pc.generates(g, x, y)) return {x, y};
  }
  // greedy: extend by the least element outside the running closure
  std::vector<int> tuple;
  std::vector<char> in(n, 0);
  in[g.identity()] = 1;
  for (int a = 0; a < n; ++a) {
    if (in[a]) continue;
    tuple.push_back(a);
    for (int e : subgroup_closure(g, tuple)) in[e] = 1;
    if (std::find(in.begin(), in.end(), 0) == in.end()) break;
  }
  return tuple;
}

std::vector<Automorphism> automorphism_group(const FiniteGroup& g, int max_order) {
  if (g.order() > max_order)
    throw std::domain_error("automorphism_group: order " + std::to_string(g.order()) +
                            " exceeds search bound " + std::to_string(max_order));
  int n = g.order();
  auto tuple = find_generating_tuple(g);
  size_t t = tuple.size();

  std::vector<int> elem_order(n);
  for (int a = 0; a < n; ++a) elem_order[a] = element_order(g, a);

  // candidate images per position, filtered by element order
  std::vector<std::vector<int>> candidates(t);
  for (size_t i = 0; i < t; ++i)
    for (int a = 0; a < n; ++a)
      if (elem_order[a] == elem_order[tuple[i]]) candidates[i].push_back(a);

  // orders of the prefix subgroups <g_0..g_i> for pruning
  std::vector<size_t> prefix_order(t);
  for (size_t i = 0; i < t; ++i)
    prefix_order[i] = subgroup_closure(g, {tuple.begin(), tuple.begin() + i + 1}).size();

  std::vector<Automorphism> out;
  std::vector<int> images(t);
  auto rec = [&](auto&& self, size_t depth) -> void {
    if (depth == t) {
      if (auto phi = extend_map(g, tuple, g, images)) out.push_back(Automorphism{std::move(*phi)});
      return;
    }
    for (int c : candidates[depth]) {
      images[depth] = c;
      if (depth > 0 && depth + 1 < t) {
        std::vector<int> prefix(images.begin(), images.begin() + depth + 1);
        if (subgroup_closure(g, prefix).size() != prefix_order[depth]) continue;
      }
      self(self, depth + 1);
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [](const Automorphism& a, const Automorphism& b) { return a.map < b.map; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  int n = a.order();
  auto tuple = find_generating_tuple(a);
  size_t t = tuple.size();
  std::vector<int> border(n);
  for (int x = 0; x < n; ++x) border[x] = element_order(b, x);
  std::vector<std::vector<int>> candidates(t);
  for (size_t i = 0; i < t; ++i) {
    int want = element_order(a, tuple[i]);
    for (int x = 0; x < n; ++x)
      if (border[x] == want) candidates[i].push_back(x);
    if (candidates[i].empty()) return false;
  }
  std::vector<size_t> prefix_order(t);
  for (size_t i = 0; i < t; ++i)
    prefix_order[i] = subgroup_closure(a, {tuple.begin(), tuple.begin() + i + 1}).size();
  std::vector<int> images(t);
  auto rec = [&](auto&& self, size_t depth) -> bool {
    if (depth == t) return extend_map(a, tuple, b, images).has_value();
    for (int c : candidates[depth]) {
      images[depth] = c;
      if (depth > 0 && depth + 1 < t) {
        std::vector<int> prefix(images.begin(), images.begin() + depth + 1);
        if (subgroup_closure(b, prefix).size() != prefix_order[depth]) continue;
      }
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

Quotient quotient_group(const FiniteGroup& g, const std::vector<int>& normal_subgroup) {
  std::vector<int> sub = normal_subgroup;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  if (sub.empty()) throw std::invalid_argument("quotient_group: empty subgroup");
  if (subgroup_closure(g, sub) != sub) throw std::invalid_argument("quotient_group: set is not a subgroup");
  std::vector<char> in(g.order(), 0);
  for (int e : sub) in[e] = 1;
  for (int m : sub)
    for (int a = 0; a < g.order(); ++a)
      if (!in[g.conj(m, a)]) throw std::invalid_argument("quotient_group: subgroup is not normal");

  int n = g.order();
  std::vector<int> coset(n, -1), reps;
  for (int e = 0; e < n; ++e) {
    if (coset[e] != -1) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int m : sub) coset[g.mul(m, e)] = id;
  }
  int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<size_t>(q) * q);
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) {
    labels[i] = "[" + g.label(reps[i]) + "]";
    for (int j = 0; j < q; ++j) table[static_cast<size_t>(i) * q + j] = coset[g.mul(reps[i], reps[j])];
  }
  return Quotient{make_group(q, std::move(table), std::move(labels), {}), std::move(coset)};
}

Subgroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<int> sub = elements;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  int k = static_cast<int>(sub.size());
  std::vector<int> index_of(g.order(), -1);
  for (int i = 0; i < k; ++i) index_of[sub[i]] = i;
  std::vector<int> table(static_cast<size_t>(k) * k);
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    labels[i] = g.label(sub[i]);
    for (int j = 0; j < k; ++j) {
      int p = index_of[g.mul(sub[i], sub[j])];
      if (p < 0) throw std::invalid_argument("subgroup_as_group: set is not closed");
      table[static_cast<size_t>(i) * k + j] = p;
    }
  }
  return Subgroup{make_group(k, std::move(table), std::move(labels), {}), std::move(sub)};
}

std::vector<int> center(const FiniteGroup& g) {
  auto gens = find_generating_tuple(g);
  std::vector<int> out;
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int s : gens)
      if (g.mul(z, s) != g.mul(s, z)) {
        central = false;
        break;
      }
    if (central) out.push_back(z);
  }
  return out;
}

namespace {

// [cur, G] as a subgroup: the closure of all commutators [x, y], x in cur.
std::vector<int> commutator_step(const FiniteGroup& g, const std::vector<int>& cur) {
  std::vector<char> mark(g.order(), 0);
  std::vector<int> gens;
  for (int x : cur)
    for (int y = 0; y < g.order(); ++y) {
      int c = g.commutator(x, y);
      if (!mark[c]) {
        mark[c] = 1;
        gens.push_back(c);
      }
    }
  return subgroup_closure(g, gens);
}

}  // namespace

std::vector<int> commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return commutator_step(g, all);
}

std::vector<std::vector<int>> lower_central_series(const FiniteGroup& g) {
  std::vector<std::vector<int>> series;
  std::vector<int> cur(g.order());
  std::iota(cur.begin(), cur.end(), 0);
  series.push_back(cur);
  while (series.back().size() > 1) {
    std::vector<int> next = commutator_step(g, series.back());
    if (next == series.back()) break;  // stabilized above the identity
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
  auto series = lower_central_series(g);
  if (series.back().size() != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

int sylow_projection(const FiniteGroup& g, int a, long long p) {
  if (!nilpotency_class(g)) throw std::invalid_argument("sylow_projection: group is not nilpotent");
  if (p < 2 || g.order() % p != 0)
    throw std::invalid_argument("sylow_projection: p must divide the group order");
  long long pv = 1;
  for (long long o = g.order(); o % p == 0; o /= p) pv *= p;
  long long q = group_exponent(g);
  while (q % p == 0) q /= p;
  // least positive m with m == 1 (mod pv), m == 0 (mod q); exists since
  // gcd(q, pv) = 1
  long long m = 0;
  for (long long t = 0; t < pv && m == 0; ++t)
    if ((q % pv) * t % pv == 1 % pv) m = q * t;
  if (m == 0) throw std::logic_error("sylow_projection: no CRT solution");
  return g.pow(a, m);
}

}  // namespace dessins
