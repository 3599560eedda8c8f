// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "conjzoo/alg_format.hpp"
#include "conjzoo/catalog.hpp"
#include "conjzoo/cayley_dickson.hpp"
#include "conjzoo/cli.hpp"
#include "conjzoo/constructions.hpp"
#include "conjzoo/jordan.hpp"
#include "conjzoo/obstructions.hpp"
#include "conjzoo/random.hpp"
#include "conjzoo/steenrod.hpp"
#include "golden_cases.hpp"
#include "oracles.hpp"

using namespace conjzoo;

namespace {

const std::filesystem::path kGolden = CONJZOO_GOLDEN_DIR;
const std::filesystem::path kData = CONJZOO_DATA_DIR;
constexpr int kSamples = 1000;

/// Collects failures; a criterion passes when nothing was recorded.
struct Tally {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// ------------------------------------------------------------------ AC1

void cayley_dickson_suite(Tally& v) {
  random::Engine rng(random::kDefaultSeed);
  for (int level = 0; level <= kMaxCDLevel; ++level) {
    const std::size_t n = std::size_t{1} << level;
    const auto one = CDElement::one(level);
    auto identities = [&](const CDElement& a, const CDElement& b, const std::string& tag) {
      const auto ab = cd::mul(a, b);
      v.expect(cd::mul(one, a) == a && cd::mul(a, one) == a, "unit " + tag);
      v.expect(cd::conj(ab) == cd::mul(cd::conj(b), cd::conj(a)), "conj anti-multiplicative " + tag);
      v.expect(cd::tau(cd::tau(a)) == a, "tau involution " + tag);
      v.expect(cd::tau(ab) == cd::mul(cd::tau(a), cd::tau(b)), "tau multiplicative " + tag);
      v.expect(cd::tau(cd::conj(a)) == cd::conj(cd::tau(a)), "tau commutes with conj " + tag);
      v.expect(cd::tau(a + b) == cd::tau(a) + cd::tau(b), "tau additive " + tag);
      v.expect(cd::norm(ab) == cd::norm(a) * cd::norm(b), "norm multiplicative " + tag);
      if (level >= 1) {
        // conjugate linear over C = span(1, e1)
        const auto i = CDElement::unit(level, 1);
        v.expect(cd::tau(cd::mul(i, a)) == cd::mul(-i, cd::tau(a)), "tau conjugate linear " + tag);
      }
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        identities(CDElement::unit(level, i), CDElement::unit(level, j),
                   "e" + std::to_string(i) + ",e" + std::to_string(j) + " level " + std::to_string(level));
      }
    }
    for (int s = 0; s < kSamples; ++s) {
      identities(random::element(rng, level), random::element(rng, level), "random level " + std::to_string(level));
    }
    // associativity: holds through the quaternions, fails on some octonion basis triple
    std::optional<std::string> witness;
    bool associative = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const auto a = CDElement::unit(level, i), b = CDElement::unit(level, j), c = CDElement::unit(level, k);
          if (cd::mul(cd::mul(a, b), c) != cd::mul(a, cd::mul(b, c))) {
            associative = false;
            if (!witness) witness = "e" + std::to_string(i) + ",e" + std::to_string(j) + ",e" + std::to_string(k);
          }
        }
      }
    }
    v.expect(associative == (level <= 2), "associativity at level " + std::to_string(level));
    if (level == 3) v.expect(witness.has_value(), "octonion associativity witness");
  }
}

// ------------------------------------------------------------------ AC2

/// Signed basis permutations e_i -> s_i f_{p(i)} with e_0 -> f_0 that multiply correctly.
bool brute_force_isomorphic(int level, const std::vector<CDElement>& fixed) {
  const std::size_t n = std::size_t{1} << (level - 1);
  if (fixed.size() != n) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto table = cd::multiplication_table(level - 1);
  do {
    if (perm[0] != 0) continue;
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); signs += 2) {
      std::vector<CDElement> images;
      for (std::size_t i = 0; i < n; ++i) images.push_back((signs >> i) & 1U ? -fixed[perm[i]] : fixed[perm[i]]);
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) {
          ok = cd::apply_linear(images, table[i][j]) == cd::mul(images[i], images[j]);
        }
      }
      if (ok) return true;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

void fixed_tower(Tally& v) {
  for (int level = 1; level <= kMaxCDLevel; ++level) {
    const auto basis = cd::fixed_subalgebra_basis(level);
    const std::string tag = " level " + std::to_string(level);
    v.expect(basis.size() == (std::size_t{1} << (level - 1)), "dimension" + tag);
    for (const auto& a : basis) {
      v.expect(cd::tau(a) == a, "basis element not fixed" + tag);
      for (const auto& b : basis) v.expect(cd::tau(cd::mul(a, b)) == cd::mul(a, b), "not closed" + tag);
    }
    v.expect(brute_force_isomorphic(level, basis), "no isomorphism to the previous level" + tag);
    v.expect(cd::fixed_subalgebra_isomorphism(level).has_value(), "library isomorphism missing" + tag);
  }
}

// ------------------------------------------------------------------ AC3

void projective_line(Tally& v) {
  random::Engine rng(random::kDefaultSeed + 3);
  for (int level : {2, 3}) {
    const std::string tag = " level " + std::to_string(level);
    int fixed_seen = 0, moved_seen = 0;
    for (int s = 0; s < kSamples; ++s) {
      const auto x = random::nonzero_element(rng, level);
      // half of the samples are built to be fixed: y = x k with k in the fixed subalgebra
      const auto y = s % 2 == 0 ? random::element(rng, level) : cd::mul(x, random::fixed_element(rng, level));
      const auto p = line_normalize(x, y);
      const bool is_fixed = line_tau(p) == p;
      const auto q = cd::mul(cd::inverse(x), y);
      v.expect(is_fixed == (cd::tau(q) == q), "fixed criterion" + tag);
      (is_fixed ? fixed_seen : moved_seen) += 1;
      v.expect(hopf_map(cd::tau(x), cd::tau(y)) == line_tau(hopf_map(x, y)), "hopf equivariance" + tag);
    }
    v.expect(fixed_seen > 0 && moved_seen > 0, "both kinds of lines sampled" + tag);
  }
}

// ------------------------------------------------------------------ AC4

void jordan_suite(Tally& v) {
  random::Engine rng(random::kDefaultSeed + 4);
  std::vector<HermitianMatrix> witnesses;
  for (const char* f : {"sphere_cell.mat", "top_cell.mat"}) witnesses.push_back(jordan::parse_matrix(slurp(kData / f)));
  for (int level = 0; level <= kMaxCDLevel; ++level) witnesses.push_back(HermitianMatrix::diagonal(level, 1, 0, 0));
  std::array<int, 3> hits{0, 0, 0};
  auto classify = [&](const HermitianMatrix& p, int support) {
    const int r = 1 << p.level();
    const std::string tag = " level " + std::to_string(p.level());
    v.expect(jordan::is_projector(p) && p.trace() == 1, "not a trace-1 projector" + tag);
    const auto s = jordan::classify_stratum(p);
    const int expected = p.gamma() != 0 ? 2 * r : p.beta() != 0 ? r : 0;
    v.expect(s.dimension == expected, "stratum dimension" + tag);
    if (support > 0) v.expect(expected <= (support - 1) * r, "stratum above the support" + tag);
    hits[expected == 0 ? 0 : expected == r ? 1 : 2] += 1;
    const auto t = jordan::matrix_tau(p);
    v.expect(jordan::in_projective_plane(t), "tau leaves the plane" + tag);
    v.expect(jordan::classify_stratum(t) == s, "stratum not tau-stable" + tag);
  };
  for (const auto& w : witnesses) classify(w, 0);
  for (int level = 0; level <= kMaxCDLevel; ++level) {
    for (int s = 0; s < 60; ++s) {
      const int support = 1 + s % 3;
      const auto a = random::projector(rng, level, support);
      const auto b = random::projector(rng, level, 1 + (s + 1) % 3, s % 2 == 0);
      classify(a, support);
      v.expect(jordan::matrix_tau(jordan::jordan_mul(a, b)) ==
                   jordan::jordan_mul(jordan::matrix_tau(a), jordan::matrix_tau(b)),
               "tau does not commute with the Jordan product");
    }
  }
  v.expect(hits[0] > 0 && hits[1] > 0 && hits[2] > 0, "not every stratum was sampled");
}

// ------------------------------------------------------------------ AC5

void steenrod_suite(Tally& v) {
  std::mt19937_64 rng(random::kDefaultSeed + 5);
  auto random_monomial = [&](int n) {
    std::vector<int> parts;
    while (n > 0) {
      const int k = std::uniform_int_distribution<int>(1, n)(rng);
      parts.push_back(k);
      n -= k;
    }
    return SteenrodElement(SteenrodMonomial(parts));
  };
  for (int n = 1; n <= 20; ++n) {
    for (int s = 0; s < 5; ++s) {
      const auto e = random_monomial(n) + random_monomial(n) + random_monomial(n);
      const auto left = steenrod::adem_normalize(e);
      v.expect(left.is_admissible(), "normal form not admissible in degree " + std::to_string(n));
      v.expect(steenrod::adem_normalize(left) == left, "not idempotent in degree " + std::to_string(n));
      for (const auto& m : left.terms()) v.expect(m.degree() == n, "degree changed in degree " + std::to_string(n));
      if (n <= 16) v.expect(steenrod::adem_normalize_rightmost(e) == left, "confluence in degree " + std::to_string(n));
    }
  }
  for (int n = 0; n <= 12; ++n) {
    v.expect(steenrod::admissible_basis(n).size() == oracle::admissible_count(n),
             "admissible count in degree " + std::to_string(n));
  }
  for (int n = 1; n <= 32; ++n) {
    v.expect(steenrod::is_decomposable(n).decomposable == ((n & (n - 1)) != 0),
             "decomposability of Sq" + std::to_string(n));
  }
}

// ------------------------------------------------------------------ AC6

void doubling_suite(Tally& v) {
  for (const auto& e : catalog()) {
    const auto d = double_algebra(e.algebra, e.scope);
    v.expect(validate(d, e.scope).ok(), "double of " + e.name + " does not validate");
    v.expect(halve_algebra(d, e.scope) == e.algebra, "halve(double) != id on " + e.name);
  }
  const auto& rp2 = catalog_entry("RP2").algebra;
  v.expect(structurally_equal(double_algebra(rp2), catalog_entry("CP2").algebra), "double(RP2) != CP2");
  const auto& z = catalog_entry("FloydZ").algebra;
  const auto& y = catalog_entry("FloydY").algebra;
  const auto dz = double_algebra(z);
  v.expect(structurally_equal(dz, y), "double(Z) != Y");
  v.expect(z.format(z.sq(1, z.index("f2"))) == "f3" && z.format(z.sq(2, z.index("f3"))) == "f5",
           "Z squares");
  v.expect(y.format(y.sq(2, y.index("e4"))) == "e6" && y.format(y.sq(4, y.index("e6"))) == "e10", "Y squares");
  v.expect(dz.format(dz.sq(2, dz.index("f2"))) == "f3" && dz.format(dz.sq(4, dz.index("f3"))) == "f5",
           "doubled squares");
}

// ------------------------------------------------------------------ AC7

void obstruction_suite(Tally& v) {
  const auto op2 = check_realizable(catalog_entry("OP2").algebra);
  v.expect(op2.verdict == Verdict::NonRealizable && op2.rule == "HopfOne", "OP2 verdict");
  v.expect(op2.evidence.find("16") != std::string::npos, "OP2 witness degree");
  const auto y = check_realizable(catalog_entry("FloydY").algebra);
  v.expect(y.verdict == Verdict::NonRealizable && y.rule == "FloydRule", "FloydY verdict");
  v.expect(check_realizable(catalog_entry("FloydZ").algebra).verdict == Verdict::Undetermined, "FloydZ verdict");
  for (const char* name : {"CP2", "HP2", "T2", "Sigma2", "Klein", "N3", "RP2", "S2xS2"}) {
    const auto& e = catalog_entry(name);
    const auto r = check_realizable(e.algebra);
    v.expect(r.verdict != Verdict::NonRealizable, std::string(name) + " refuted");
    v.expect(r.passed.size() == rules_table().size(), std::string(name) + " skipped a rule");
    if (e.double_is) {
      const auto& t = catalog_entry(*e.double_is);
      const auto iso = find_isomorphism(double_algebra(e.algebra, e.scope), t.algebra, e.scope);
      v.expect(iso.has_value(), std::string(name) + " does not double to " + *e.double_is);
    }
  }
  const auto& twisted = catalog_entry("S2vS4_twisted");
  const auto& fixed = catalog_entry(twisted.fixed_locus.value_or("S1vS2"));
  v.expect(check_double_pair(twisted.algebra, fixed.algebra, kappa_by_label(twisted.algebra, fixed.algebra)).ok(),
           "S2vS4 second action pair fails the pair check");
  v.expect(check_realizable(fixed.algebra).verdict != Verdict::NonRealizable, "S1vS2 refuted");
  bool noted = false;
  for (const auto& n : twisted.notes) noted = noted || n.find("not a conjugation space") != std::string::npos;
  v.expect(noted, "S2vS4 note missing");
}

// ------------------------------------------------------------------ AC8

void wu_suite(Tally& v) {
  auto total = [](const UnstableAlgebra& a, const std::vector<F2Vector>& g) { return a.format(total_class(a, g)); };
  const auto& cp2 = catalog_entry("CP2").algebra;
  const auto& rp2 = catalog_entry("RP2").algebra;
  v.expect(total(cp2, wu_classes(cp2)) == "1 + x", "v(CP2)");
  v.expect(total(cp2, sw_classes(cp2)) == "1 + x + x^2", "w(CP2)");
  v.expect(total(rp2, wu_classes(rp2)) == "1 + a", "v(RP2)");
  v.expect(total(rp2, sw_classes(rp2)) == "1 + a + a^2", "w(RP2)");
  for (int n = 1; n <= 8; ++n) {
    const auto& s = catalog_entry("S" + std::to_string(n)).algebra;
    v.expect(total(s, wu_classes(s)) == "1", "v(S" + std::to_string(n) + ")");
  }
  // every Poincare duality pair, matched through the isomorphism double(fixed) -> total
  std::size_t pairs = 0;
  for (const auto& e : catalog()) {
    std::optional<std::string> partner = e.role == Role::Fixed ? e.double_is : std::nullopt;
    if (!partner || e.scope == ValidationScope::Ring || !e.algebra.fundamental()) continue;
    const auto& fixed = e.algebra;
    const auto& t = catalog_entry(*partner).algebra;
    if (!t.fundamental()) {
      v.expect(false, *partner + " has no fundamental class");
      continue;
    }
    const auto iso = find_isomorphism(double_algebra(fixed), t);
    if (!iso) {
      v.expect(false, e.name + ": no isomorphism onto " + *partner);
      continue;
    }
    Kappa kappa(t.size());
    for (std::size_t i = 0; i < iso->size(); ++i) kappa[(*iso)[i]] = i;
    const auto w_fixed = sw_classes(fixed);
    const auto w_total = sw_classes(t);
    for (std::size_t d = 0; d < w_total.size(); ++d) {
      const auto mapped = apply_kappa(kappa, fixed, w_total[d]);
      v.expect(d % 2 == 0 ? mapped == w_fixed[d / 2] : mapped.none(),
               e.name + ": kappa(w" + std::to_string(d) + ") mismatch");
    }
    ++pairs;
  }
  v.expect(pairs > 0, "no Poincare duality pairs");
}

// ------------------------------------------------------------------ AC9

std::vector<std::vector<int>> relator_generators(const GroupPresentation& p) {
  std::vector<std::vector<int>> out;
  for (const auto& r : p.relators()) {
    std::vector<int> gens;
    for (const auto& l : r) gens.push_back(static_cast<int>(l.generator));
    out.push_back(gens);
  }
  return out;
}

void constructions_suite(Tally& v) {
  const auto rp2 = build_presentation_complex(GroupPresentation::parse(slurp(kData / "rp2.pres")));
  v.expect(*rp2.betti == BettiNumbers{1, 1, 1}, "<x | x^2> Betti numbers");
  const auto p = GroupPresentation::parse(slurp(kData / "d8.pres"));
  const auto d8 = build_presentation_complex(p);
  const auto oracle_betti = oracle::betti_row_reduction(static_cast<int>(p.generators().size()), relator_generators(p));
  v.expect(oracle_betti == std::vector<int>{1, 2, 3}, "row-reduction oracle for D8");
  v.expect((std::vector<int>{d8.betti->b0, d8.betti->b1, d8.betti->b2}) == oracle_betti, "D8 Betti numbers");

  std::mt19937_64 rng(random::kDefaultSeed + 9);
  for (int s = 0; s < 100; ++s) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    std::ostringstream json;
    json << "{\"diagonal\": [";
    for (int i = 0; i < n; ++i) json << (i ? ", " : "") << std::uniform_int_distribution<int>(-5, 5)(rng);
    json << "], \"offdiagonal\": [";
    std::vector<std::vector<int>> off(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off[i][j] = off[j][i] = std::uniform_int_distribution<int>(-3, 3)(rng);
    }
    for (int i = 0; i < n; ++i) {
      json << (i ? ", " : "") << "[";
      for (int j = 0; j < n; ++j) json << (j ? ", " : "") << off[i][j];
      json << "]";
    }
    json << "]}";
    const auto attach = AttachingElement::from_intersection_form(json.str());
    const auto d = realize_four_complex(attach.spheres, attach);
    v.expect(check_double_pair(d.cohomology_total, d.cohomology_fixed, identity_kappa(d.cohomology_fixed)).ok(),
             "random form " + json.str());
  }
  AttachingElement eta;
  eta.spheres = 1;
  eta.eta[0] = 1;
  const auto d = realize_four_complex(1, eta);
  v.expect(structurally_equal(d.cohomology_fixed, catalog_entry("CP2").algebra), "eta_1 fixed side != CP2");
  v.expect(structurally_equal(d.cohomology_total, catalog_entry("HP2").algebra), "eta_1 total side != HP2");
}

// ------------------------------------------------------------------ AC10

void end_to_end(Tally& v) {
  std::ostringstream out, err;
  v.expect(run_cli({"catalog", "verify", "all"}, out, err) == 0, "catalog verify all: " + err.str());

  auto round_trip = [&](const UnstableAlgebra& a) {
    const auto text = alg::print(a);
    const auto back = alg::parse(text);
    v.expect(back == a && alg::print(back) == text, "round trip of " + a.name());
  };
  for (const auto& e : catalog()) {
    round_trip(e.algebra);
    round_trip(double_algebra(e.algebra, e.scope));
  }
  for (const auto& f : std::filesystem::directory_iterator(kData)) {
    if (f.path().extension() != ".alg") continue;
    const auto a = alg::parse(slurp(f.path()));
    round_trip(a);
    if (validate(a).ok()) round_trip(double_algebra(a));
  }

  std::size_t compared = 0;
  for (const auto& c : read_golden_cases((kGolden / "cases.txt").string(), kData.string())) {
    if (std::filesystem::path(c.file).extension() != ".json") continue;
    std::ostringstream o, e;
    const int rc = run_cli(c.args, o, e);
    v.expect(rc == c.status && o.str() == slurp(kGolden / c.file), "golden " + c.file);
    ++compared;
  }
  v.expect(compared >= 10, "too few JSON goldens");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"AC1 cayley-dickson identities", cayley_dickson_suite},
      {"AC2 fixed-subalgebra tower", fixed_tower},
      {"AC3 projective-line fixed criterion", projective_line},
      {"AC4 jordan strata", jordan_suite},
      {"AC5 steenrod normal forms", steenrod_suite},
      {"AC6 doubling", doubling_suite},
      {"AC7 obstruction verdicts", obstruction_suite},
      {"AC8 wu and stiefel-whitney classes", wu_suite},
      {"AC9 constructions", constructions_suite},
      {"AC10 end-to-end", end_to_end},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Tally v;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(v);
    } catch (const std::exception& e) {
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool ok = v.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << v.checks << " checks, " << ms << " ms)";
    for (const auto& f : v.failures) std::cout << "\n    " << f;
    std::cout << std::endl;
  }
  return failed;
}
