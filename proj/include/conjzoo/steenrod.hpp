#pragma once

// The mod 2 Steenrod algebra in the Sq-monomial presentation.

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conjzoo {

/// Sq^{i1} Sq^{i2} ... Sq^{ik}; the empty sequence is Sq^0 = 1.
class SteenrodMonomial {
 public:
  SteenrodMonomial() = default;
  /// Zero exponents are dropped (Sq^0 is the unit); negative ones are rejected.
  explicit SteenrodMonomial(std::vector<int> exponents);

  const std::vector<int>& exponents() const { return exponents_; }
  std::size_t length() const { return exponents_.size(); }
  bool is_unit() const { return exponents_.empty(); }
  int degree() const;
  bool is_admissible() const;

  /// Concatenation (composition).
  friend SteenrodMonomial operator*(const SteenrodMonomial& a, const SteenrodMonomial& b);
  friend bool operator==(const SteenrodMonomial&, const SteenrodMonomial&) = default;
  /// Degree ascending, then exponent sequences lexicographically descending
  /// (Sq3 before Sq2 Sq1).
  friend bool operator<(const SteenrodMonomial& a, const SteenrodMonomial& b);

 private:
  std::vector<int> exponents_;
};

/// An F_2-linear combination of monomials.
class SteenrodElement {
 public:
  SteenrodElement() = default;
  SteenrodElement(const SteenrodMonomial& m) { toggle(m); }  // NOLINT(google-explicit-constructor)

  static SteenrodElement sq(int k) { return SteenrodElement(SteenrodMonomial({k})); }

  const std::set<SteenrodMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  bool is_admissible() const;
  /// Adds m with coefficient 1 (so a repeated monomial cancels).
  void toggle(const SteenrodMonomial& m);

  SteenrodElement& operator+=(const SteenrodElement& other);
  friend SteenrodElement operator+(SteenrodElement a, const SteenrodElement& b) { return a += b; }
  friend bool operator==(const SteenrodElement&, const SteenrodElement&) = default;

 private:
  std::set<SteenrodMonomial> terms_;
};

std::string to_string(const SteenrodMonomial& m);
std::string to_string(const SteenrodElement& e);

namespace steenrod {

/// binom(n, k) mod 2 for n, k >= 0 (Lucas: k's bits must be a subset of n's).
constexpr bool binomial_mod2(int n, int k) { return k >= 0 && n >= 0 && k <= n && (n & k) == k; }

/// Adem relation for a < 2b: Sq^a Sq^b = sum_c binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c.
SteenrodElement adem_relation(int a, int b);

/// Rewrites the leftmost inadmissible adjacent pair until every term is admissible.
SteenrodElement adem_normalize(const SteenrodElement& e);
/// Same result via rightmost-first rewriting; kept for confluence checks.
SteenrodElement adem_normalize_rightmost(const SteenrodElement& e);

/// Admissible monomials of the given degree, in SteenrodMonomial order.
std::vector<SteenrodMonomial> admissible_basis(int degree);

struct Decomposition {
  bool decomposable = false;
  /// Pairs (a, b) with sum of normalized Sq^a Sq^b equal to Sq^n.
  std::vector<std::pair<int, int>> certificate;
};

/// Whether Sq^n lies in the span of the products Sq^a Sq^b with a, b > 0, a + b = n.
Decomposition is_decomposable(int n);

SteenrodElement multiply(const SteenrodElement& a, const SteenrodElement& b);

/// Parses sums of composites: `Sq3 Sq2 + Sq4 Sq1`, `Sq^2 Sq^2`, `0`, `1`.
SteenrodElement parse(std::string_view text);

}  // namespace steenrod
}  // namespace conjzoo
