#pragma once

// Registry of example spaces with their expected behaviour under doubling,
// the Wu/Stiefel-Whitney correspondence and the realizability rules.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conjzoo/obstructions.hpp"
#include "conjzoo/unstable_algebra.hpp"

namespace conjzoo {

enum class Role { Fixed, Total };

struct CatalogEntry {
  std::string name;
  Role role = Role::Fixed;
  UnstableAlgebra algebra;
  /// Ring-only entries carry no trustworthy square tables.
  ValidationScope scope = ValidationScope::Full;
  /// Entry whose algebra equals double(algebra).
  std::optional<std::string> double_is;
  /// For total spaces: the entry holding the cohomology of the fixed locus.
  std::optional<std::string> fixed_locus;
  /// A conjugation space whose real locus has this cohomology.
  std::optional<std::string> realized_by;
  std::optional<Verdict> expected_verdict;
  std::string expected_rule;
  /// Formatted total classes, when pinned.
  std::optional<std::string> expected_wu;
  std::optional<std::string> expected_sw;
  std::vector<std::string> notes;
  /// Additional entry-specific check; returns a failure message or nothing.
  std::function<std::optional<std::string>()> extra;
};

const std::vector<CatalogEntry>& catalog();
/// Throws UsageError for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

struct CatalogSummary {
  std::string name;
  std::string role;
  std::string degrees;
  std::string scope;
  std::vector<std::string> notes;
};
std::vector<CatalogSummary> catalog_list();

struct VerifyResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> checks;
  std::vector<std::string> failures;
  /// Outcome of the v-version of the Wu correspondence (reported, not asserted).
  std::optional<bool> wu_correspondence;

  friend bool operator==(const VerifyResult&, const VerifyResult&) = default;
};

/// Verifies one entry, or all of them ("all") in parallel.
std::vector<VerifyResult> catalog_verify(const std::string& name);
VerifyResult verify_entry(const CatalogEntry& entry);
/// Serial reference for catalog_verify("all").
std::vector<VerifyResult> catalog_verify_serial();

/// check_realizable, upgraded to Realizable when B is isomorphic to a catalog
/// entry with a known realization.
RealizabilityReport check_realizable_with_catalog(const UnstableAlgebra& b);

}  // namespace conjzoo
