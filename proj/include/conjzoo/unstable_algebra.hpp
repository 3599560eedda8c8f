#pragma once

// Finite graded commutative F_2-algebras with an action of the Steenrod squares,
// stored as explicit tables over a declared basis.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conjzoo/error.hpp"
#include "conjzoo/f2.hpp"

namespace conjzoo {

struct BasisElement {
  std::string label;
  int degree = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Elements are F2Vectors over the basis, in declaration order.
class UnstableAlgebra {
 public:
  /// The basis must contain the unit `1` in degree 0. Products with the unit are
  /// the identity, all other products and all squares start at zero.
  UnstableAlgebra(std::string name, std::vector<BasisElement> basis);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::size_t size() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& label(std::size_t i) const { return basis_[i].label; }
  int degree(std::size_t i) const { return basis_[i].degree; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  std::size_t index(const std::string& label) const;  // throws UsageError
  std::size_t unit_index() const { return unit_; }
  int top_degree() const;
  std::vector<std::size_t> indices_in_degree(int d) const;
  /// Index lists per degree 0..top_degree.
  std::vector<std::vector<std::size_t>> graded_indices() const;

  F2Vector zero() const { return F2Vector(size()); }
  F2Vector unit() const { return F2Vector::basis(size(), unit_); }
  F2Vector basis_vector(std::size_t i) const { return F2Vector::basis(size(), i); }

  const F2Vector& product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, F2Vector value);
  /// Sq^k of basis element i (k = 0 is the identity).
  F2Vector sq(int k, std::size_t i) const;
  void set_sq(int k, std::size_t i, F2Vector value);
  /// Nonzero entries (k >= 1, i) -> Sq^k b_i, ordered.
  const std::map<std::pair<int, std::size_t>, F2Vector>& sq_entries() const { return sq_; }
  /// Sets Sq^{deg b} b = b^2 for every basis element of positive degree.
  void derive_top_squares();

  const std::optional<std::size_t>& fundamental() const { return fundamental_; }
  void set_fundamental(std::optional<std::size_t> i) { fundamental_ = i; }

  F2Vector multiply(const F2Vector& a, const F2Vector& b) const;
  F2Vector apply_sq(int k, const F2Vector& a) const;
  /// Total square Sq = Sq^0 + Sq^1 + ...
  F2Vector total_sq(const F2Vector& a) const;

  /// Labels joined by " + ", or "0".
  std::string format(const F2Vector& a) const;

  /// Exact equality including the name and labels.
  friend bool operator==(const UnstableAlgebra&, const UnstableAlgebra&) = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::string name_;
  std::vector<BasisElement> basis_;
  std::size_t unit_ = 0;
  std::vector<F2Vector> mul_;  // upper triangle, row-major
  std::map<std::pair<int, std::size_t>, F2Vector> sq_;
  std::optional<std::size_t> fundamental_;
};

enum class ValidationScope;

/// Same graded tables and fundamental class up to renaming (basis order must agree).
/// With ValidationScope::Ring the square tables are ignored.
bool structurally_equal(const UnstableAlgebra& a, const UnstableAlgebra& b);
bool structurally_equal(const UnstableAlgebra& a, const UnstableAlgebra& b, ValidationScope scope);

struct Finding {
  std::string check;
  std::string witness;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;
  /// More findings existed than kMaxFindings.
  bool truncated = false;

  static constexpr std::size_t kMaxFindings = 64;

  bool ok() const { return findings.empty(); }
  std::string summary() const;
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Ring checks only (unit, degrees, associativity, fundamental class), or everything.
enum class ValidationScope { Full, Ring };

/// The identity Kappa when two algebras share a basis layout.
std::vector<std::size_t> identity_kappa(const UnstableAlgebra& a);

class InvalidAlgebra : public Error {
 public:
  explicit InvalidAlgebra(ValidationReport report)
      : Error("invalid algebra: " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

namespace kernels {
/// Reference implementation; single thread, fixed loop order.
ValidationReport validate_serial(const UnstableAlgebra& a, ValidationScope scope);
/// OpenMP version. Produces exactly the serial report.
ValidationReport validate_parallel(const UnstableAlgebra& a, ValidationScope scope);
}  // namespace kernels

ValidationReport validate(const UnstableAlgebra& a, ValidationScope scope = ValidationScope::Full);

/// Degrees doubled, same products, Sq^{2k} = old Sq^k, odd squares zero.
/// Throws InvalidAlgebra when the input does not validate.
UnstableAlgebra double_algebra(const UnstableAlgebra& b,
                               ValidationScope scope = ValidationScope::Full);
/// Inverse of double_algebra. Throws NotADoubleCandidate on odd degrees or odd squares.
UnstableAlgebra halve_algebra(const UnstableAlgebra& a,
                              ValidationScope scope = ValidationScope::Full);

/// kappa[i] is the fixed-side index of total-side basis element i.
using Kappa = std::vector<std::size_t>;

/// Pairs basis elements with equal labels; throws UsageError when labels differ.
Kappa kappa_by_label(const UnstableAlgebra& total, const UnstableAlgebra& fixed);
F2Vector apply_kappa(const Kappa& kappa, const UnstableAlgebra& fixed, const F2Vector& x);

/// Checks that kappa is a degree-halving ring isomorphism with kappa(Sq^{2k} x) = Sq^k kappa(x)
/// (squares are skipped with ValidationScope::Ring).
ValidationReport check_double_pair(const UnstableAlgebra& total, const UnstableAlgebra& fixed,
                                   const Kappa& kappa,
                                   ValidationScope scope = ValidationScope::Full);

/// Wu classes v_0..v_n (indexed by degree) against the fundamental class.
std::vector<F2Vector> wu_classes(const UnstableAlgebra& a);
/// Stiefel-Whitney classes w = Sq(v), indexed by degree.
std::vector<F2Vector> sw_classes(const UnstableAlgebra& a);
/// Sum of graded pieces.
F2Vector total_class(const UnstableAlgebra& a, const std::vector<F2Vector>& graded);

}  // namespace conjzoo
