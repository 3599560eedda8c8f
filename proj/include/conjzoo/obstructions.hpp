#pragma once

// Necessary conditions for an unstable algebra to be the mod 2 cohomology of a
// real locus. The engine only ever refutes or stays undetermined; a positive
// verdict needs an external witness (see catalog.hpp).

#include <optional>
#include <string>
#include <vector>

#include "conjzoo/unstable_algebra.hpp"

namespace conjzoo {

enum class Verdict { Realizable, NonRealizable, Undetermined };
std::string to_string(Verdict v);

struct TrailStep {
  std::string rule;
  std::string outcome;  // "pass", "fail" or "upgrade"
  std::string detail;

  friend bool operator==(const TrailStep&, const TrailStep&) = default;
};

struct RealizabilityReport {
  Verdict verdict = Verdict::Undetermined;
  /// Deciding rule; empty for Undetermined.
  std::string rule;
  /// Concrete evidence for the decision (degrees, matched operations, certificates).
  std::string evidence;
  /// Name of the realizing conjugation space for Realizable.
  std::string witness;
  std::vector<std::string> passed;
  std::vector<TrailStep> trail;

  friend bool operator==(const RealizabilityReport&, const RealizabilityReport&) = default;
};

struct Rule {
  std::string id;
  /// Verified by computation here, or an imported theorem.
  bool imported;
  std::string source;
  std::string statement;
};

/// R1, R2, R3 in evaluation order.
const std::vector<Rule>& rules_table();

/// Degree-preserving basis bijection b_i -> b'_{perm[i]} carrying products (and squares
/// unless scope is Ring) of `a` onto those of `b`.
std::optional<std::vector<std::size_t>> find_isomorphism(const UnstableAlgebra& a, const UnstableAlgebra& b,
                                                         ValidationScope scope = ValidationScope::Full);

/// F_2[X]/(X^3) with deg X = d, Sq^d X = X^2.
UnstableAlgebra truncated_cube(int d);
/// Classes in degrees 0, 8, 12, 20 with Sq^4 E8 = E12, Sq^8 E12 = E20 and E8 E12 = E20.
UnstableAlgebra floyd_pattern();

/// Runs R1 (double validity), R2 (Hopf invariant one) and R3 (Floyd) in order; the
/// first failure decides. Throws InvalidAlgebra when B itself does not validate.
RealizabilityReport check_realizable(const UnstableAlgebra& b);

}  // namespace conjzoo
