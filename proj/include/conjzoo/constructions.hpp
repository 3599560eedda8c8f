#pragma once

// Builders for conjugation complexes: presentation complexes of groups whose
// relators are squares, and 8-dimensional complexes realizing a 4-dimensional
// fixed locus with a prescribed mod 2 intersection form.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conjzoo/unstable_algebra.hpp"

namespace conjzoo {

struct Letter {
  std::size_t generator;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Cancels adjacent x x' and x' x until none remain.
Word free_reduce(const Word& w);

class GroupPresentation {
 public:
  GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators);

  /// `gens: x y` followed by `rel: x y x' y'` lines; `x'` is the inverse of x.
  static GroupPresentation parse(std::string_view text);

  const std::vector<std::string>& generators() const { return generators_; }
  /// Freely reduced.
  const std::vector<Word>& relators() const { return relators_; }
  std::string format(const Word& w) const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// w when the word is literally w w.
std::optional<Word> square_root(const Word& w);

struct BettiNumbers {
  int b0 = 0;
  int b1 = 0;
  int b2 = 0;

  friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
};

struct Cell {
  std::string name;
  /// Multiple n of the regular representation: the total-space cell is a copy of D^{n rho}.
  int rho_multiple;
  int total_dimension;
  int fixed_dimension;
  std::string attaching;
};

struct ConjugationComplexDescription {
  std::vector<Cell> cells;
  std::string fixed_complex;
  UnstableAlgebra cohomology_fixed;
  UnstableAlgebra cohomology_total;
  std::optional<BettiNumbers> betti;
  std::vector<std::string> notes;

  /// Every fixed cell has half the dimension of its total-space cell.
  bool halves_dimensions() const;
};

/// Exponent sums mod 2: one row per relator, one column per generator.
std::vector<F2Vector> exponent_sum_matrix(const GroupPresentation& p);
BettiNumbers betti_numbers(const GroupPresentation& p);

/// Throws NotAllRelatorsSquare naming the first relator that is not a literal square.
ConjugationComplexDescription build_presentation_complex(const GroupPresentation& p);

/// Symbolic element of pi_3 of a wedge of 2-spheres: sum of eta_i (Hopf maps on the
/// summands) and omega_ij (Whitehead products), integer coefficients.
struct AttachingElement {
  int spheres = 0;
  std::map<std::size_t, std::int64_t> eta;                           // i -> coefficient
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> omega;  // i < j -> coefficient

  /// `2 eta_1 + omega_12`, 0-based indices printed 1-based.
  std::string format() const;
  /// Image under eta_i -> nu_i, omega_ij -> W_ij.
  std::string format_doubled() const;

  /// JSON with `diagonal` (eta coefficients, length n) and `offdiagonal`
  /// (symmetric n x n, zero diagonal, omega coefficients).
  static AttachingElement from_intersection_form(std::string_view json);
  std::string to_intersection_form() const;
};

ConjugationComplexDescription realize_four_complex(int spheres, const AttachingElement& attach);

}  // namespace conjzoo
