#pragma once

// Reference computations that share no code with the library. They are slow and
// naive on purpose; the suites compare the library against them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conjzoo/rational.hpp"

namespace oracle {

// ---------------------------------------------------------------- binomials

/// Pascal's triangle reduced mod 2, rows 0..n.
inline std::vector<std::vector<int>> pascal_mod2(int n) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) {
    rows[r].assign(static_cast<std::size_t>(r) + 1, 1);
    for (int k = 1; k < r; ++k) rows[r][k] = (rows[r - 1][k - 1] + rows[r - 1][k]) % 2;
  }
  return rows;
}

inline int binom_mod2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static const auto table = pascal_mod2(128);
  return table[n][k];
}

// ---------------------------------------------------------------- Steenrod

using Monomial = std::vector<int>;          // Sq^{i1} Sq^{i2} ...
using Element = std::set<Monomial>;          // F_2 sums

/// Sq^a Sq^b for 0 < a < 2b, straight from the binomial sum.
inline Element adem(int a, int b) {
  Element out;
  for (int j = 0; 2 * j <= a; ++j) {
    if (binom_mod2(b - 1 - j, a - 2 * j) == 0) continue;
    Monomial m;
    if (a + b - j > 0) m.push_back(a + b - j);
    if (j > 0) m.push_back(j);
    out.insert(m);
  }
  return out;
}

inline bool admissible(const Monomial& m) {
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i] < 2 * m[i + 1]) return false;
  }
  return true;
}

/// Every composition of n into positive parts (2^{n-1} of them).
inline std::vector<Monomial> compositions(int n) {
  std::vector<Monomial> out;
  if (n == 0) return {Monomial{}};
  for (int first = 1; first <= n; ++first) {
    for (auto rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  }
  return out;
}

/// Admissible monomials of degree n, filtered out of all compositions.
inline std::size_t admissible_count(int n) {
  std::size_t c = 0;
  for (const auto& m : compositions(n)) c += admissible(m) ? 1 : 0;
  return c;
}

/// Number of Milnor basis elements Sq(r1, r2, ...) of degree n: partitions of n
/// into parts 1, 3, 7, 15, ...
inline std::size_t milnor_count(int n) {
  std::vector<std::size_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; part = 2 * part + 1) {
    for (int s = part; s <= n; ++s) ways[s] += ways[s - part];
  }
  return ways[n];
}

// Action on F_2[x_1..x_m] with |x_i| = 1: Sq^k x^e = C(e, k) x^{e+k}, extended by
// Cartan. The Steenrod algebra acts faithfully on x_1...x_m in degrees <= m.

using Poly = std::set<std::vector<int>>;  // exponent vectors, F_2 coefficients

inline void toggle(Poly& p, const std::vector<int>& e) {
  if (!p.erase(e)) p.insert(e);
}

inline Poly sq(int k, const Poly& p) {
  Poly out;
  for (const auto& e : p) {
    const std::size_t m = e.size();
    std::vector<int> split(m, 0);
    // enumerate k = k_1 + ... + k_m with k_i <= e_i
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i == m) {
        if (left != 0) return;
        std::vector<int> t = e;
        for (std::size_t j = 0; j < m; ++j) {
          if (binom_mod2(e[j], split[j]) == 0) return;
          t[j] += split[j];
        }
        toggle(out, t);
        return;
      }
      for (int ki = 0; ki <= std::min(left, e[i]); ++ki) {
        split[i] = ki;
        self(self, i + 1, left - ki);
      }
      split[i] = 0;
    };
    rec(rec, 0, k);
  }
  return out;
}

inline Poly act(const Monomial& m, Poly p) {
  for (auto it = m.rbegin(); it != m.rend(); ++it) p = sq(*it, p);
  return p;
}

inline Poly act(const Element& e, const Poly& p) {
  Poly out;
  for (const auto& m : e) {
    for (const auto& t : act(m, p)) toggle(out, t);
  }
  return out;
}

inline Poly product_of_generators(int m) { return Poly{std::vector<int>(static_cast<std::size_t>(m), 1)}; }

// ---------------------------------------------------------------- Cayley-Dickson

/// Recursive pair representation, independent of the flat coordinate code.
struct CD {
  int level = 0;
  std::vector<conjzoo::Rational> c;  // 2^level coordinates

  CD half(bool upper) const {
    const std::size_t h = c.size() / 2;
    return CD{level - 1, std::vector<conjzoo::Rational>(c.begin() + (upper ? h : 0), c.begin() + (upper ? 2 * h : h))};
  }
  static CD join(const CD& a, const CD& b) {
    CD out{a.level + 1, a.c};
    out.c.insert(out.c.end(), b.c.begin(), b.c.end());
    return out;
  }
};

inline CD operator+(CD a, const CD& b) {
  for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
  return a;
}
inline CD operator-(CD a, const CD& b) {
  for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
  return a;
}

inline CD conj(const CD& a) {
  CD out = a;
  for (std::size_t i = 1; i < out.c.size(); ++i) out.c[i] = -out.c[i];
  return out;
}

/// (a, b)(c, d) = (ac - d b*, a* d + c b)
inline CD mul(const CD& x, const CD& y) {
  if (x.level == 0) return CD{0, {x.c[0] * y.c[0]}};
  const CD a = x.half(false), b = x.half(true), c = y.half(false), d = y.half(true);
  return CD::join(mul(a, c) - mul(d, conj(b)), mul(conj(a), d) + mul(c, b));
}

/// Recursive tau: the identity on R, conjugation on C, then (a, b) -> (tau a, tau b).
inline CD tau(const CD& x) {
  if (x.level == 0) return x;
  if (x.level == 1) return conj(x);
  return CD::join(tau(x.half(false)), tau(x.half(true)));
}

// ---------------------------------------------------------------- group presentations

/// b1 of a presentation complex mod 2: log2 of the number of homomorphisms to Z/2,
/// found by trying every assignment of the generators.
/// `relators` lists generator indices (inverses are irrelevant mod 2).
inline int betti1_bruteforce(int generators, const std::vector<std::vector<int>>& relators) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << generators); ++mask) {
    bool ok = true;
    for (const auto& r : relators) {
      int parity = 0;
      for (int g : r) parity ^= static_cast<int>((mask >> g) & 1U);
      ok = ok && parity == 0;
    }
    count += ok ? 1 : 0;
  }
  int b = 0;
  while ((std::uint64_t{1} << b) < count) ++b;
  return b;
}

/// (b0, b1, b2) from the brute-force b1 and the Euler characteristic 1 - g + r.
inline std::vector<int> betti_bruteforce(int generators, const std::vector<std::vector<int>>& relators) {
  const int b1 = betti1_bruteforce(generators, relators);
  return {1, b1, 1 - generators + static_cast<int>(relators.size()) - 1 + b1};
}

/// Rank mod 2 of a dense integer matrix by Gaussian elimination.
inline int rank_mod2(std::vector<std::vector<int>> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < m.size() && m[pivot][c] % 2 == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && m[r][c] % 2 != 0) {
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + m[rank][k]) % 2;
      }
    }
    ++rank;
  }
  return rank;
}

/// (b0, b1, b2) of the presentation complex from the relator-by-generator exponent
/// sums: b1 = g - rank, b2 = r - rank.
inline std::vector<int> betti_row_reduction(int generators, const std::vector<std::vector<int>>& relators) {
  std::vector<std::vector<int>> m;
  for (const auto& r : relators) {
    std::vector<int> row(static_cast<std::size_t>(generators), 0);
    for (int g : r) row[g] += 1;
    m.push_back(row);
  }
  const int rank = rank_mod2(m);
  return {1, generators - rank, static_cast<int>(relators.size()) - rank};
}

// ---------------------------------------------------------------- Poincare duality

/// Wu class v_k by exhaustion: the unique class with <v x, [M]> = <Sq^k x, [M]> for
/// every x of complementary degree. `pair(a, b)` and `sq_pair(k, x)` evaluate those
/// brackets on basis indices of the degree-k and degree-(n-k) pieces.
template <class Pair, class SqPair>
std::vector<std::uint64_t> wu_bruteforce(std::size_t dim_k, std::size_t dim_nk, Pair pair, SqPair sq_pair) {
  std::vector<std::uint64_t> hits;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << dim_k); ++v) {
    bool ok = true;
    for (std::size_t x = 0; x < dim_nk && ok; ++x) {
      int lhs = 0;
      for (std::size_t i = 0; i < dim_k; ++i) {
        if ((v >> i) & 1U) lhs ^= pair(i, x);
      }
      ok = lhs == sq_pair(x);
    }
    if (ok) hits.push_back(v);
  }
  return hits;
}

}  // namespace oracle
