#pragma once

#include <array>
#include <string>
#include <string_view>

#include "conjzoo/cayley_dickson.hpp"

namespace conjzoo {

/// 3x3 Hermitian matrix over a CD algebra:
///
///     | alpha   x       z    |
///     | x*      beta    y    |
///     | z*      y*      gamma|
///
/// Only the real diagonal and the upper entries are stored.
class HermitianMatrix {
 public:
  HermitianMatrix(int level, std::array<Rational, 3> diag, std::array<CDElement, 3> upper);

  static HermitianMatrix zero(int level);
  static HermitianMatrix identity(int level);
  static HermitianMatrix diagonal(int level, const Rational& a, const Rational& b, const Rational& c);

  int level() const { return level_; }
  const Rational& alpha() const { return diag_[0]; }
  const Rational& beta() const { return diag_[1]; }
  const Rational& gamma() const { return diag_[2]; }
  const CDElement& x() const { return upper_[0]; }
  const CDElement& y() const { return upper_[1]; }
  const CDElement& z() const { return upper_[2]; }
  const std::array<Rational, 3>& diag() const { return diag_; }
  const std::array<CDElement, 3>& upper() const { return upper_; }

  /// Entry (row, col), 0-based, with the conjugate-transposed lower half.
  CDElement entry(std::size_t row, std::size_t col) const;
  Rational trace() const { return diag_[0] + diag_[1] + diag_[2]; }

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  int level_;
  std::array<Rational, 3> diag_;
  std::array<CDElement, 3> upper_;
};

using CDMatrix3 = std::array<std::array<CDElement, 3>, 3>;

namespace jordan {

/// Plain matrix product (not symmetrized).
CDMatrix3 matrix_product(const HermitianMatrix& a, const HermitianMatrix& b);
/// (ab + ba) / 2 as a full matrix, without assuming the result is Hermitian.
CDMatrix3 symmetrized_product(const HermitianMatrix& a, const HermitianMatrix& b);
bool is_hermitian(const CDMatrix3& m);

/// a o b = (ab + ba) / 2.
HermitianMatrix jordan_mul(const HermitianMatrix& a, const HermitianMatrix& b);
bool is_projector(const HermitianMatrix& p);
/// Projector of trace 1: a point of the projective plane.
bool in_projective_plane(const HermitianMatrix& p);
HermitianMatrix matrix_tau(const HermitianMatrix& p);
/// True when every entry lies in the tau-fixed subalgebra.
bool entries_tau_fixed(const HermitianMatrix& p);

/// v v*, entries v_i conj(v_j). Only offered over associative levels (<= 2).
HermitianMatrix rank_one(const std::array<CDElement, 3>& v);

enum class StratumKind { ZeroCell, SphereCell, OpenTopCell };

struct Stratum {
  StratumKind kind;
  /// 0, r or 2r where r is the real dimension of the coefficient algebra.
  int dimension;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// Cell of the CW structure on the projective plane containing p:
/// gamma != 0 is the open top cell, gamma = 0 with beta != 0 the r-cell,
/// beta = gamma = 0 the 0-cell diag(1, 0, 0).
Stratum classify_stratum(const HermitianMatrix& p);
std::string to_string(StratumKind kind);

/// Reads the matrix file format: level, then alpha beta gamma, then x, y, z
/// one per line in CD-element syntax. `#` starts a comment.
HermitianMatrix parse_matrix(std::string_view text);
std::string to_string(const HermitianMatrix& m);

}  // namespace jordan
}  // namespace conjzoo
