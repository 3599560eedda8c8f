#include "conjzoo/f2.hpp"

#include <bit>

namespace conjzoo {

bool F2Vector::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t F2Vector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::optional<std::size_t> F2Vector::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<std::size_t> F2Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

F2Vector& F2Vector::operator^=(const F2Vector& other) {
  for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool operator<(const F2Vector& a, const F2Vector& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return a.words_ < b.words_;
}

std::size_t f2_rank(std::vector<F2Vector> rows) {
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto pivot = rows[r].first();
    if (!pivot) continue;
    ++rank;
    for (std::size_t s = r + 1; s < rows.size(); ++s) {
      if (rows[s].test(*pivot)) rows[s] ^= rows[r];
    }
  }
  return rank;
}

std::optional<F2Vector> f2_solve(const std::vector<F2Vector>& columns, const F2Vector& target) {
  // Each row carries (vector, combination-of-columns) so the certificate falls out of elimination.
  struct Row {
    F2Vector value;
    F2Vector combo;
    std::size_t pivot;
  };
  std::vector<Row> reduced;
  reduced.reserve(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    F2Vector value = columns[i];
    F2Vector combo = F2Vector::basis(columns.size(), i);
    for (const auto& r : reduced) {
      if (value.test(r.pivot)) {
        value ^= r.value;
        combo ^= r.combo;
      }
    }
    auto p = value.first();
    if (!p) continue;
    for (auto& r : reduced) {
      if (r.value.test(*p)) {
        r.value ^= value;
        r.combo ^= combo;
      }
    }
    reduced.push_back(Row{std::move(value), std::move(combo), *p});
  }
  F2Vector rest = target;
  F2Vector combo(columns.size());
  for (const auto& r : reduced) {
    if (rest.test(r.pivot)) {
      rest ^= r.value;
      combo ^= r.combo;
    }
  }
  if (rest.any()) return std::nullopt;
  return combo;
}

std::optional<std::vector<F2Vector>> f2_inverse(const std::vector<F2Vector>& rows) {
  const std::size_t n = rows.size();
  std::vector<F2Vector> a = rows;
  std::vector<F2Vector> inv;
  inv.reserve(n);
  for (std::size_t i = 0; i < n; ++i) inv.push_back(F2Vector::basis(n, i));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !a[pivot].test(col)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && a[r].test(col)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

}  // namespace conjzoo

namespace conjzoo {

std::vector<F2Vector> f2_nullspace(const std::vector<F2Vector>& rows, std::size_t columns) {
  // Reduced row echelon form, then one kernel vector per non-pivot column.
  std::vector<F2Vector> m = rows;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && !m[p].test(c)) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != r && m[i].test(c)) m[i] ^= m[r];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<F2Vector> basis;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < columns; ++c) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    F2Vector v(columns);
    v.set(c);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (m[i].test(c)) v.set(pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace conjzoo
