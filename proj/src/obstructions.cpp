#include "conjzoo/obstructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "conjzoo/steenrod.hpp"

namespace conjzoo {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Realizable:
      return "Realizable";
    case Verdict::NonRealizable:
      return "NonRealizable";
    case Verdict::Undetermined:
      return "Undetermined";
  }
  return "?";
}

const std::vector<Rule>& rules_table() {
  static const std::vector<Rule> rules{
      {"DoubleValidity", false, "computed",
       "The doubled algebra (degrees times two, Sq^{2k} acting as Sq^k, odd squares zero) must satisfy every "
       "unstable-algebra axiom, since it is the cohomology of the total space."},
      {"HopfOne", true, "Adams, Hopf invariant one (Ann. of Math. 1960)",
       "A space with mod 2 cohomology F_2[X]/(X^3) has X in degree 1, 2, 4 or 8. For degrees that are not "
       "powers of two the Adem relations already decompose Sq^d, which is verified here with a certificate; "
       "the powers of two from 16 on are imported."},
      {"FloydRule", true, "Floyd (MR0334256), Lemma 3.4",
       "No closed 20-dimensional manifold has mod 2 cohomology 1, E8, E12, E20 with Sq^4 E8 = E12, "
       "Sq^8 E12 = E20 and E8 E12 = E20 as an algebra over the Steenrod algebra."},
  };
  return rules;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const UnstableAlgebra& a, const UnstableAlgebra& b,
                                                         ValidationScope scope) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  {
    std::vector<int> da, db;
    for (std::size_t i = 0; i < n; ++i) {
      da.push_back(a.degree(i));
      db.push_back(b.degree(i));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
  }
  int max_k = std::max(a.top_degree(), b.top_degree());
  for (const auto& [key, v] : a.sq_entries()) max_k = std::max(max_k, key.first);
  for (const auto& [key, v] : b.sq_entries()) max_k = std::max(max_k, key.first);

  std::vector<std::size_t> perm(n, n);
  std::vector<bool> used(n, false);
  auto image = [&](const F2Vector& v) {
    F2Vector out = b.zero();
    for (auto s : v.support()) out.flip(perm[s]);
    return out;
  };
  // Tables are compared once every basis element has an image; the degree and unit
  // constraints keep the search to permutations inside each degree.
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p; q < n; ++q) {
          if (image(a.product(p, q)) != b.product(perm[p], perm[q])) return false;
        }
      }
      if (scope == ValidationScope::Full) {
        for (std::size_t p = 0; p < n; ++p) {
          for (int k = 1; k <= max_k; ++k) {
            if (image(a.sq(k, p)) != b.sq(k, perm[p])) return false;
          }
        }
      }
      return true;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || b.degree(j) != a.degree(i)) continue;
      if ((i == a.unit_index()) != (j == b.unit_index())) continue;
      perm[i] = j;
      used[j] = true;
      if (assign(i + 1)) return true;
      used[j] = false;
    }
    perm[i] = n;
    return false;
  };
  if (assign(0)) return perm;
  return std::nullopt;
}

UnstableAlgebra truncated_cube(int d) {
  UnstableAlgebra a("cube" + std::to_string(d), {{"1", 0}, {"X", d}, {"X2", 2 * d}});
  a.set_product(1, 1, a.basis_vector(2));
  a.derive_top_squares();
  a.set_fundamental(2);
  return a;
}

UnstableAlgebra floyd_pattern() {
  UnstableAlgebra a("floyd_pattern", {{"1", 0}, {"E8", 8}, {"E12", 12}, {"E20", 20}});
  a.set_product(1, 2, a.basis_vector(3));
  a.derive_top_squares();
  a.set_sq(4, 1, a.basis_vector(2));
  a.set_sq(8, 2, a.basis_vector(3));
  a.set_fundamental(3);
  return a;
}

RealizabilityReport check_realizable(const UnstableAlgebra& b) {
  if (auto report = validate(b); !report.ok()) throw InvalidAlgebra(std::move(report));
  RealizabilityReport r;
  auto refute = [&](const std::string& rule, std::string evidence) {
    r.verdict = Verdict::NonRealizable;
    r.rule = rule;
    r.evidence = evidence;
    r.trail.push_back({rule, "fail", std::move(evidence)});
    return r;
  };

  // R1
  const UnstableAlgebra phi = double_algebra(b);
  if (auto report = validate(phi); !report.ok()) {
    return refute("DoubleValidity", report.findings.front().check + ": " + report.findings.front().witness);
  }
  r.trail.push_back({"DoubleValidity", "pass", "the double satisfies the unstable-algebra axioms"});
  r.passed.push_back("DoubleValidity");

  // R2
  if (phi.size() == 3) {
    for (std::size_t i = 0; i < phi.size(); ++i) {
      const int d = phi.degree(i);
      if (d == 0 || !find_isomorphism(phi, truncated_cube(d))) continue;
      if (d == 1 || d == 2 || d == 4 || d == 8) break;
      std::string evidence = "the double is F2[X]/(X^3) with X in degree " + std::to_string(d) +
                             ", and " + std::to_string(d) + " is not in {1, 2, 4, 8}";
      if (!std::has_single_bit(static_cast<unsigned>(d))) {
        const auto dec = steenrod::is_decomposable(d);
        std::string cert;
        for (const auto& [p, q] : dec.certificate) {
          cert += (cert.empty() ? "" : " + ") + ("Sq" + std::to_string(p) + " Sq" + std::to_string(q));
        }
        evidence += "; Sq" + std::to_string(d) + " = " + cert +
                    " would kill X^2 since every Sq^b X with 0 < b < " + std::to_string(d) + " vanishes";
      } else {
        evidence += " (Adams)";
      }
      return refute("HopfOne", evidence);
    }
  }
  r.trail.push_back({"HopfOne", "pass", "the double is not a forbidden truncated polynomial algebra on one class"});
  r.passed.push_back("HopfOne");

  // R3
  if (find_isomorphism(phi, floyd_pattern())) {
    return refute("FloydRule",
                  "the double has classes in degrees 0, 8, 12, 20 with Sq4 E8 = E12, Sq8 E12 = E20, E8 E12 = E20 "
                  "(Floyd, Lemma 3.4)");
  }
  r.trail.push_back({"FloydRule", "pass", "the double does not match the 20-dimensional Floyd pattern"});
  r.passed.push_back("FloydRule");
  return r;
}

}  // namespace conjzoo
