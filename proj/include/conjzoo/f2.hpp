#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace conjzoo {

/// Dense vector over F_2, packed 64 coordinates per word.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static F2Vector basis(std::size_t size, std::size_t index) {
    F2Vector v(size);
    v.set(index);
    return v;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  /// Index of the lowest set coordinate, if any.
  std::optional<std::size_t> first() const;
  std::vector<std::size_t> support() const;

  F2Vector& operator^=(const F2Vector& other);
  friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }
  friend bool operator==(const F2Vector&, const F2Vector&) = default;
  friend bool operator<(const F2Vector& a, const F2Vector& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Rank of a family of vectors (Gaussian elimination).
std::size_t f2_rank(std::vector<F2Vector> rows);

/// Finds coefficients c with sum_i c_i * columns[i] == target, if any.
std::optional<F2Vector> f2_solve(const std::vector<F2Vector>& columns, const F2Vector& target);

/// Basis of {a in F_2^columns : r . a = 0 for every row r}, one vector per free column.
std::vector<F2Vector> f2_nullspace(const std::vector<F2Vector>& rows, std::size_t columns);

/// Inverse of a square matrix given by rows; nullopt when singular.
std::optional<std::vector<F2Vector>> f2_inverse(const std::vector<F2Vector>& rows);

}  // namespace conjzoo
