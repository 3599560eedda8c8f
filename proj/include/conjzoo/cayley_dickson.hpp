#pragma once

// Exact arithmetic in the Cayley-Dickson tower R (level 0), C (1), H (2), O (3).
//
// Coordinates follow the recursive layout: an element of level k is a pair (a, b)
// of level k-1 elements, stored as the concatenation of their coordinate vectors.
// Basis vector e_i is coordinate i; e_0 = 1.
//
// Product convention: (a,b)(c,d) = (ac - d conj(b), conj(a) d + c b).
// The frequently printed variant with "c d" in the second slot is not unital,
// so it is not used; the unit axiom tests guard this choice.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conjzoo/rational.hpp"

namespace conjzoo {

inline constexpr int kMaxCDLevel = 3;

class CDElement {
 public:
  /// The zero element of the given level.
  explicit CDElement(int level);
  CDElement(int level, std::vector<Rational> coords);

  static CDElement zero(int level) { return CDElement(level); }
  static CDElement one(int level) { return real(level, 1); }
  static CDElement real(int level, const Rational& value);
  /// Basis vector e_index.
  static CDElement unit(int level, std::size_t index);

  int level() const { return level_; }
  std::size_t dimension() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  bool is_zero() const;
  bool is_real() const;

  /// Image under the subalgebra inclusion a -> (a, 0) into a higher level.
  CDElement embed(int target_level) const;

  friend bool operator==(const CDElement&, const CDElement&) = default;

  CDElement operator-() const;
  friend CDElement operator+(const CDElement& a, const CDElement& b);
  friend CDElement operator-(const CDElement& a, const CDElement& b);
  friend CDElement operator*(const Rational& s, const CDElement& a);

 private:
  int level_;
  std::vector<Rational> coords_;
};

namespace cd {

CDElement add(const CDElement& a, const CDElement& b);
CDElement mul(const CDElement& a, const CDElement& b);
/// Algebra conjugation: conj(a, b) = (conj(a), -b), identity on R.
CDElement conj(const CDElement& a);
/// The involution tau: identity on R, complex conjugation on C, applied to both halves above.
CDElement tau(const CDElement& a);
/// Squared Euclidean norm (sum of squared coordinates).
Rational norm(const CDElement& a);
/// conj(a) / norm(a); throws DomainError on zero.
CDElement inverse(const CDElement& a);

/// Parses `q0 + q1*e1 - e5 ...`. Without an explicit level the smallest level
/// containing every mentioned basis vector is used.
CDElement parse(std::string_view text, std::optional<int> level = std::nullopt);
std::string to_string(const CDElement& a);

/// table[i][j] = e_i * e_j.
std::vector<std::vector<CDElement>> multiplication_table(int level);

/// Basis of the tau-fixed subspace, in reduced row echelon form (levels 1..3).
std::vector<CDElement> fixed_subalgebra_basis(int level);

/// Brute-force search for an algebra isomorphism from the level-(k-1) algebra onto the
/// tau-fixed subalgebra of level k, among maps e_0 -> 1, e_i -> +-(fixed basis vector).
/// Returns the images of e_0..e_{m-1}; nullopt when no such map exists.
std::optional<std::vector<CDElement>> fixed_subalgebra_isomorphism(int level);

/// Applies a linear map given by basis images.
CDElement apply_linear(const std::vector<CDElement>& images, const CDElement& a);

}  // namespace cd

/// A point of the projective line over a CD algebra, stored normalized:
/// either (y^-1 x, 1) or the point at infinity (1, 0).
class ProjectivePoint {
 public:
  int level() const { return x_.level(); }
  const CDElement& x() const { return x_; }
  const CDElement& y() const { return y_; }
  bool at_infinity() const { return y_.is_zero(); }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  ProjectivePoint(CDElement x, CDElement y) : x_(std::move(x)), y_(std::move(y)) {}
  friend ProjectivePoint line_normalize(const CDElement&, const CDElement&);

  CDElement x_;
  CDElement y_;
};

/// Canonical representative of the line [x, y] = {(l x', l y')}.
ProjectivePoint line_normalize(const CDElement& x, const CDElement& y);
/// Pair (x, y), scaled implicitly onto the unit sphere, to its line.
ProjectivePoint hopf_map(const CDElement& x, const CDElement& y);
ProjectivePoint line_tau(const ProjectivePoint& p);
std::string to_string(const ProjectivePoint& p);

}  // namespace conjzoo
