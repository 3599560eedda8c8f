#include "conjzoo/cayley_dickson.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "conjzoo/error.hpp"

namespace conjzoo {

namespace {

void check_level(int level) {
  if (level < 0 || level > kMaxCDLevel) {
    throw UsageError("Cayley-Dickson level " + std::to_string(level) + " outside 0.." + std::to_string(kMaxCDLevel));
  }
}

void check_same_level(const CDElement& a, const CDElement& b) {
  if (a.level() != b.level()) {
    throw UsageError("level mismatch: " + std::to_string(a.level()) + " vs " + std::to_string(b.level()));
  }
}

using Coords = std::vector<Rational>;
using View = std::span<const Rational>;

Coords conj_coords(View a) {
  Coords out(a.begin(), a.end());
  // conj(a, b) = (conj a, -b) unrolls to: negate every coordinate except the real one.
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

void add_into(Coords& out, std::size_t offset, const Coords& v, int sign) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sign > 0) {
      out[offset + i] += v[i];
    } else {
      out[offset + i] -= v[i];
    }
  }
}

Coords mul_coords(View x, View y) {
  if (x.size() == 1) return {x[0] * y[0]};
  const std::size_t h = x.size() / 2;
  View a = x.first(h), b = x.subspan(h), c = y.first(h), d = y.subspan(h);
  Coords out(x.size());
  add_into(out, 0, mul_coords(a, c), +1);
  add_into(out, 0, mul_coords(d, conj_coords(b)), -1);
  add_into(out, h, mul_coords(conj_coords(a), d), +1);
  add_into(out, h, mul_coords(c, b), +1);
  return out;
}

Coords tau_coords(View a) {
  Coords out(a.begin(), a.end());
  // Level 1 tau negates coordinate 1; the diagonal extension repeats that on every
  // (real, imaginary) pair, i.e. negates every odd coordinate.
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return out;
}

// Nullspace over Q of a square matrix given row-major; basis vectors in RREF order.
std::vector<Coords> nullspace(std::vector<Coords> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational lead = m[r][c];
    for (auto& v : m[r]) v /= lead;
    for (std::size_t s = 0; s < rows; ++s) {
      if (s == r || m[s][c] == 0) continue;
      Rational f = m[s][c];
      for (std::size_t k = 0; k < cols; ++k) m[s][k] -= f * m[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<Coords> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    Coords v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

CDElement::CDElement(int level) : level_(level) {
  check_level(level);
  coords_.assign(std::size_t{1} << level, Rational(0));
}

CDElement::CDElement(int level, std::vector<Rational> coords) : level_(level), coords_(std::move(coords)) {
  check_level(level);
  if (coords_.size() != (std::size_t{1} << level)) {
    throw UsageError("level " + std::to_string(level) + " needs " + std::to_string(1 << level) + " coordinates, got " +
                     std::to_string(coords_.size()));
  }
}

CDElement CDElement::real(int level, const Rational& value) {
  CDElement e(level);
  e.coords_[0] = value;
  return e;
}

CDElement CDElement::unit(int level, std::size_t index) {
  CDElement e(level);
  if (index >= e.dimension()) throw UsageError("basis index e" + std::to_string(index) + " outside level " + std::to_string(level));
  e.coords_[index] = 1;
  return e;
}

bool CDElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool CDElement::is_real() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return q == 0; });
}

CDElement CDElement::embed(int target_level) const {
  if (target_level < level_) throw UsageError("cannot embed into a lower level");
  CDElement e(target_level);
  std::copy(coords_.begin(), coords_.end(), e.coords_.begin());
  return e;
}

CDElement CDElement::operator-() const {
  CDElement e = *this;
  for (auto& q : e.coords_) q = -q;
  return e;
}

CDElement operator+(const CDElement& a, const CDElement& b) { return cd::add(a, b); }

CDElement operator-(const CDElement& a, const CDElement& b) { return cd::add(a, -b); }

CDElement operator*(const Rational& s, const CDElement& a) {
  CDElement e = a;
  for (auto& q : e.coords_) q *= s;
  return e;
}

namespace cd {

CDElement add(const CDElement& a, const CDElement& b) {
  check_same_level(a, b);
  std::vector<Rational> out(a.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return CDElement(a.level(), std::move(out));
}

CDElement mul(const CDElement& a, const CDElement& b) {
  check_same_level(a, b);
  return CDElement(a.level(), mul_coords(a.coords(), b.coords()));
}

CDElement conj(const CDElement& a) { return CDElement(a.level(), conj_coords(a.coords())); }

CDElement tau(const CDElement& a) { return CDElement(a.level(), tau_coords(a.coords())); }

Rational norm(const CDElement& a) {
  Rational s = 0;
  for (const auto& q : a.coords()) s += q * q;
  return s;
}

CDElement inverse(const CDElement& a) {
  Rational n = norm(a);
  if (n == 0) throw DomainError("zero has no inverse");
  return Rational(1 / n) * conj(a);
}

CDElement parse(std::string_view text, std::optional<int> level) {
  struct Term {
    Rational coeff;
    std::size_t index;
  };
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError(what + " in '" + std::string(text) + "'", 1, static_cast<int>(pos) + 1);
  };
  skip_ws();
  if (pos == text.size()) fail("empty element");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    bool has_number = pos > start;
    if (has_number) coeff = parse_rational(text.substr(start, pos - start));
    skip_ws();
    std::size_t index = 0;
    if (pos < text.size() && text[pos] == '*') {
      if (!has_number) fail("'*' without coefficient");
      ++pos;
      skip_ws();
      if (pos == text.size() || text[pos] != 'e') fail("expected basis vector after '*'");
    }
    if (pos < text.size() && text[pos] == 'e') {
      ++pos;
      std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits) fail("expected index after 'e'");
      index = std::stoul(std::string(text.substr(digits, pos - digits)));
      if (index > 7) fail("basis index e" + std::to_string(index) + " beyond octonions");
    } else if (!has_number) {
      fail("expected coefficient or basis vector");
    }
    terms.push_back({sign > 0 ? coeff : Rational(-coeff), index});
  }
  std::size_t max_index = 0;
  for (const auto& t : terms) max_index = std::max(max_index, t.index);
  int needed = 0;
  while ((std::size_t{1} << needed) <= max_index) ++needed;
  int lvl = level.value_or(needed);
  check_level(lvl);
  if (needed > lvl) throw UsageError("e" + std::to_string(max_index) + " does not exist at level " + std::to_string(lvl));
  CDElement e(lvl);
  std::vector<Rational> coords(e.coords().begin(), e.coords().end());
  for (const auto& t : terms) coords[t.index] += t.coeff;
  return CDElement(lvl, std::move(coords));
}

std::string to_string(const CDElement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const Rational& q = a[i];
    if (q == 0) continue;
    Rational mag = abs(q);
    std::string body;
    if (i == 0) {
      body = conjzoo::to_string(mag);
    } else {
      body = (mag == 1 ? std::string{} : conjzoo::to_string(mag) + "*") + "e" + std::to_string(i);
    }
    if (out.empty()) {
      out = (q < 0 ? "-" : "") + body;
    } else {
      out += (q < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<std::vector<CDElement>> multiplication_table(int level) {
  check_level(level);
  const std::size_t n = std::size_t{1} << level;
  std::vector<std::vector<CDElement>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i].push_back(mul(CDElement::unit(level, i), CDElement::unit(level, j)));
  }
  return table;
}

std::vector<CDElement> fixed_subalgebra_basis(int level) {
  if (level < 1 || level > kMaxCDLevel) throw UsageError("fixed subalgebra defined for levels 1..3");
  const std::size_t n = std::size_t{1} << level;
  std::vector<Coords> m(n, Coords(n));
  for (std::size_t j = 0; j < n; ++j) {
    auto image = tau(CDElement::unit(level, j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = image[i] - (i == j ? 1 : 0);
  }
  std::vector<CDElement> basis;
  for (auto& v : nullspace(std::move(m))) basis.emplace_back(level, std::move(v));
  return basis;
}

CDElement apply_linear(const std::vector<CDElement>& images, const CDElement& a) {
  if (images.size() != a.dimension()) throw UsageError("linear map size mismatch");
  CDElement out(images.front().level());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] != 0) out = out + a[i] * images[i];
  }
  return out;
}

std::optional<std::vector<CDElement>> fixed_subalgebra_isomorphism(int level) {
  const auto fixed = fixed_subalgebra_basis(level);
  const int lower = level - 1;
  const std::size_t m = std::size_t{1} << lower;
  if (fixed.size() != m) return std::nullopt;
  const auto source_table = multiplication_table(lower);

  // e_0 must go to the unit, which is fixed[0] in RREF order; search the rest.
  const auto unit = CDElement::one(level);
  std::vector<std::size_t> perm(m - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned signs = 0; signs < (1U << (m - 1)); ++signs) {
      std::vector<CDElement> images{unit};
      for (std::size_t i = 0; i + 1 < m; ++i) {
        const auto& target = fixed[perm[i]];
        images.push_back((signs >> i) & 1U ? -target : target);
      }
      bool ok = fixed[0] == unit;
      for (std::size_t i = 0; ok && i < m; ++i) {
        for (std::size_t j = 0; ok && j < m; ++j) {
          ok = mul(images[i], images[j]) == apply_linear(images, source_table[i][j]);
        }
      }
      if (ok) return images;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace cd

ProjectivePoint line_normalize(const CDElement& x, const CDElement& y) {
  if (x.level() != y.level()) throw UsageError("level mismatch in projective point");
  if (x.level() < 1) throw UsageError("projective lines are over levels 1..3");
  if (y.is_zero()) {
    if (x.is_zero()) throw DomainError("(0, 0) does not span a line");
    return ProjectivePoint(CDElement::one(x.level()), CDElement::zero(x.level()));
  }
  return ProjectivePoint(cd::mul(cd::inverse(y), x), CDElement::one(x.level()));
}

ProjectivePoint hopf_map(const CDElement& x, const CDElement& y) {
  if (cd::norm(x) + cd::norm(y) == 0) throw DomainError("hopf map undefined at (0, 0)");
  return line_normalize(x, y);
}

ProjectivePoint line_tau(const ProjectivePoint& p) { return line_normalize(cd::tau(p.x()), cd::tau(p.y())); }

std::string to_string(const ProjectivePoint& p) {
  if (p.at_infinity()) return "[1 : 0]";
  return "[" + cd::to_string(p.x()) + " : 1]";
}

}  // namespace conjzoo
