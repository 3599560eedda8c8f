#include "conjzoo/steenrod.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "conjzoo/error.hpp"
#include "conjzoo/f2.hpp"

namespace conjzoo {

SteenrodMonomial::SteenrodMonomial(std::vector<int> exponents) {
  for (int e : exponents) {
    if (e < 0) throw UsageError("negative Steenrod square");
    if (e > 0) exponents_.push_back(e);
  }
}

int SteenrodMonomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

bool SteenrodMonomial::is_admissible() const {
  for (std::size_t j = 0; j + 1 < exponents_.size(); ++j) {
    if (exponents_[j] < 2 * exponents_[j + 1]) return false;
  }
  return true;
}

SteenrodMonomial operator*(const SteenrodMonomial& a, const SteenrodMonomial& b) {
  std::vector<int> e = a.exponents_;
  e.insert(e.end(), b.exponents_.begin(), b.exponents_.end());
  return SteenrodMonomial(std::move(e));
}

bool operator<(const SteenrodMonomial& a, const SteenrodMonomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents_ > b.exponents_;
}

bool SteenrodElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& m) { return m.degree() == d; });
}

bool SteenrodElement::is_admissible() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& m) { return m.is_admissible(); });
}

void SteenrodElement::toggle(const SteenrodMonomial& m) {
  if (auto it = terms_.find(m); it != terms_.end()) {
    terms_.erase(it);
  } else {
    terms_.insert(m);
  }
}

SteenrodElement& SteenrodElement::operator+=(const SteenrodElement& other) {
  for (const auto& m : other.terms_) toggle(m);
  return *this;
}

std::string to_string(const SteenrodMonomial& m) {
  if (m.is_unit()) return "Sq0";
  std::string out;
  for (int e : m.exponents()) {
    if (!out.empty()) out += ' ';
    out += "Sq" + std::to_string(e);
  }
  return out;
}

std::string to_string(const SteenrodElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& m : e.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(m);
  }
  return out;
}

namespace steenrod {

namespace {

using Expansion = std::vector<std::vector<int>>;

const Expansion& adem_expansion(int a, int b) {
  // Per-thread memo of normalized pairs; concurrent callers never share it.
  thread_local std::map<std::pair<int, int>, Expansion> memo;
  auto key = std::make_pair(a, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Expansion terms;
  for (int c = 0; 2 * c <= a; ++c) {
    if (binomial_mod2(b - c - 1, a - 2 * c)) {
      if (c == 0) {
        terms.push_back({a + b});
      } else {
        terms.push_back({a + b - c, c});
      }
    }
  }
  return memo.emplace(key, std::move(terms)).first->second;
}

std::optional<std::size_t> inadmissible_pair(const std::vector<int>& e, bool leftmost) {
  if (e.size() < 2) return std::nullopt;
  if (leftmost) {
    for (std::size_t j = 0; j + 1 < e.size(); ++j) {
      if (e[j] < 2 * e[j + 1]) return j;
    }
  } else {
    for (std::size_t j = e.size() - 1; j-- > 0;) {
      if (e[j] < 2 * e[j + 1]) return j;
    }
  }
  return std::nullopt;
}

SteenrodElement normalize(const SteenrodElement& input, bool leftmost) {
  // Pending terms keyed by monomial with F_2 multiplicity; duplicates cancel before expansion.
  std::set<SteenrodMonomial> pending = input.terms();
  SteenrodElement result;
  auto toggle = [](std::set<SteenrodMonomial>& s, const SteenrodMonomial& m) {
    if (auto it = s.find(m); it != s.end()) {
      s.erase(it);
    } else {
      s.insert(m);
    }
  };
  while (!pending.empty()) {
    // Largest first in SteenrodMonomial order tends to merge duplicates early.
    auto node = pending.extract(std::prev(pending.end()));
    const auto& e = node.value().exponents();
    auto j = inadmissible_pair(e, leftmost);
    if (!j) {
      result.toggle(node.value());
      continue;
    }
    for (const auto& t : adem_expansion(e[*j], e[*j + 1])) {
      std::vector<int> next(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(*j));
      next.insert(next.end(), t.begin(), t.end());
      next.insert(next.end(), e.begin() + static_cast<std::ptrdiff_t>(*j) + 2, e.end());
      toggle(pending, SteenrodMonomial(std::move(next)));
    }
  }
  return result;
}

}  // namespace

SteenrodElement adem_relation(int a, int b) {
  if (a <= 0 || b <= 0 || a >= 2 * b) throw UsageError("Adem relation needs 0 < a < 2b");
  SteenrodElement out;
  for (const auto& t : adem_expansion(a, b)) out.toggle(SteenrodMonomial(t));
  return out;
}

SteenrodElement adem_normalize(const SteenrodElement& e) { return normalize(e, true); }

SteenrodElement adem_normalize_rightmost(const SteenrodElement& e) { return normalize(e, false); }

std::vector<SteenrodMonomial> admissible_basis(int degree) {
  if (degree < 0) throw UsageError("negative degree");
  std::vector<SteenrodMonomial> out;
  std::vector<int> prefix;
  std::function<void(int, int)> extend = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (int i = std::min(bound, remaining); i >= 1; --i) {
      prefix.push_back(i);
      extend(remaining - i, i / 2);
      prefix.pop_back();
    }
  };
  extend(degree, degree);
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition is_decomposable(int n) {
  if (n < 1) throw UsageError("is_decomposable needs n >= 1");
  const auto basis = admissible_basis(n);
  auto coordinates = [&](const SteenrodElement& e) {
    F2Vector v(basis.size());
    for (const auto& m : e.terms()) {
      auto it = std::lower_bound(basis.begin(), basis.end(), m);
      v.flip(static_cast<std::size_t>(it - basis.begin()));
    }
    return v;
  };
  std::vector<F2Vector> columns;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a < n; ++a) {
    columns.push_back(coordinates(adem_normalize(SteenrodMonomial({a, n - a}))));
    pairs.emplace_back(a, n - a);
  }
  Decomposition d;
  auto solution = f2_solve(columns, coordinates(SteenrodElement::sq(n)));
  if (!solution) return d;
  d.decomposable = true;
  for (auto i : solution->support()) d.certificate.push_back(pairs[i]);
  return d;
}

SteenrodElement multiply(const SteenrodElement& a, const SteenrodElement& b) {
  SteenrodElement product;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) product.toggle(x * y);
  }
  return adem_normalize(product);
}

SteenrodElement parse(std::string_view text) {
  SteenrodElement result;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) { throw ParseError(what, 1, static_cast<int>(pos) + 1); };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  skip_ws();
  if (pos == text.size()) fail("empty expression");
  while (true) {
    skip_ws();
    std::vector<int> exps;
    bool saw_factor = false;
    bool zero = false;
    while (pos < text.size() && text[pos] != '+') {
      if (text.compare(pos, 2, "Sq") == 0) {
        pos += 2;
        if (pos < text.size() && text[pos] == '^') ++pos;
        exps.push_back(read_int());
      } else if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        int lit = read_int();
        if (lit == 0) {
          zero = true;
        } else if (lit != 1) {
          fail("only 0 and 1 are scalar literals over F2");
        }
      } else {
        fail("unexpected character '" + std::string(1, text[pos]) + "'");
      }
      saw_factor = true;
      skip_ws();
    }
    if (!saw_factor) fail("empty term");
    if (!zero) result.toggle(SteenrodMonomial(exps));
    if (pos == text.size()) break;
    ++pos;  // '+'
  }
  return result;
}

}  // namespace steenrod
}  // namespace conjzoo
