#include "conjzoo/catalog.hpp"

#include <cstdint>
#include <sstream>

#include "conjzoo/alg_format.hpp"
#include "conjzoo/constructions.hpp"

namespace conjzoo {

namespace {

UnstableAlgebra sphere(int n) {
  UnstableAlgebra a("S" + std::to_string(n), {{"1", 0}, {"s", n}});
  a.derive_top_squares();
  a.set_fundamental(1);
  return a;
}

UnstableAlgebra truncated(const std::string& name, const std::string& gen, int degree, int height) {
  std::ostringstream text;
  text << "polynomial " << name << "\ngen " << gen << ' ' << degree << ' ' << height << "\nfundamental top\nend\n";
  return alg::parse(text.str());
}

UnstableAlgebra dold(const std::string& name, int scale, int m, int n) {
  std::ostringstream text;
  text << "polynomial " << name << "\ngen c " << scale << ' ' << m << "\ngen d " << 2 * scale << ' ' << n
       << "\nfundamental top\nend\n";
  return alg::parse(text.str());
}

CatalogEntry entry(std::string name, Role role, UnstableAlgebra algebra) {
  CatalogEntry e{std::move(name), role, std::move(algebra), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  e.algebra.set_name(e.name);
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  auto add = [&](CatalogEntry e) -> CatalogEntry& { return out.emplace_back(std::move(e)); };
  auto realizable = [](CatalogEntry& e, std::string witness) {
    e.realized_by = std::move(witness);
    e.expected_verdict = Verdict::Realizable;
    e.expected_rule = "CatalogCrossReference";
  };

  for (int n = 1; n <= 8; ++n) {
    auto& e = add(entry("S" + std::to_string(n), Role::Fixed, sphere(n)));
    if (2 * n <= 8) e.double_is = "S" + std::to_string(2 * n);
    realizable(e, "S^{" + std::to_string(n) + " rho}");
    e.expected_wu = "1";
    e.expected_sw = "1";
    e.notes.push_back("fixed points of the representation sphere S^{" + std::to_string(n) + " rho}");
  }

  {
    auto& e = add(entry("S1vS2", Role::Fixed,
                        alg::parse("algebra S1vS2\nbasis\n 1 0\n a 1\n b 2\nend\n")));
    e.double_is = "S2vS4";
    realizable(e, "S2vS4 (spherical action)");
    e.notes.push_back("fixed locus of both involutions on S2 v S4");
  }
  {
    auto& e = add(entry("S2vS4", Role::Total, alg::parse("algebra S2vS4\nbasis\n 1 0\n a 2\n b 4\nend\n")));
    e.fixed_locus = "S1vS2";
    e.notes.push_back("spherical action: S2 and S4 as compactified C and C^2 with complex conjugation");
    e.notes.push_back("conjugation space with real locus S1 v S2");
  }
  {
    auto& e = add(entry("S2vS4_twisted", Role::Total, alg::parse("algebra S2vS4\nbasis\n 1 0\n a 2\n b 4\nend\n")));
    e.fixed_locus = "S1vS2";
    e.notes.push_back("second action: trivial on S2, (x1, -x2, -x3, -x4) on S4, fixed points S1 v S2");
    e.notes.push_back("a cohomological double of S1 v S2 but not a conjugation space; not pure");
    e.notes.push_back("the necessary checks pass, so they are not sufficient");
  }
  {
    auto& e = add(entry("MooreOdd", Role::Fixed, UnstableAlgebra("MooreOdd", {{"1", 0}})));
    e.double_is = "MooreOdd";
    realizable(e, "M(Z/p, n) with the trivial action");
    e.notes.push_back("odd p-torsion Moore space, trivial action; mod 2 cohomology F2 in degree 0");
  }
  {
    auto& e = add(entry("AcyclicTelescope", Role::Fixed, UnstableAlgebra("AcyclicTelescope", {{"1", 0}})));
    e.double_is = "AcyclicTelescope";
    realizable(e, "telescope of wedges of circles, wedge summands exchanged");
    e.notes.push_back("acyclic wedge-of-gropes telescope; the frame lives in degree 0 only");
  }
  {
    auto& e = add(entry("PoincareSphere", Role::Fixed,
                        alg::parse("algebra P\nbasis\n 1 0\n g 3\nfundamental g\nend\n")));
    e.double_is = "S6";
    realizable(e, "Sigma^3 S = S6, suspension coordinates negated");
    e.expected_wu = "1";
    e.expected_sw = "1";
    e.notes.push_back("Poincare homology sphere: exterior algebra on one class in degree 3");
  }

  for (int n = 2; n <= 6; ++n) {
    const std::string k = std::to_string(n);
    auto& rp = add(entry("RP" + k, Role::Fixed, truncated("RP" + k, "a", 1, n)));
    rp.double_is = "CP" + k;
    realizable(rp, "CP" + k);
    rp.notes.push_back("real locus of CP" + k + " under complex conjugation");
  }
  for (int n = 2; n <= 6; ++n) {
    const std::string k = std::to_string(n);
    auto& cp = add(entry("CP" + k, Role::Fixed, truncated("CP" + k, "x", 2, n)));
    cp.double_is = "HP" + k;
    realizable(cp, "HP" + k);
    cp.notes.push_back("total space over RP" + k + "; real locus of HP" + k);
  }
  for (int n = 2; n <= 6; ++n) {
    const std::string k = std::to_string(n);
    auto& hp = add(entry("HP" + k, Role::Fixed, truncated("HP" + k, "y", 4, n)));
    if (n == 2) {
      hp.double_is = "OP2";
      realizable(hp, "OP2");
      hp.notes.push_back("real locus of OP2 with tau trivial on a quaternion subalgebra");
    } else {
      hp.expected_verdict = Verdict::Undetermined;
      hp.notes.push_back("total space over CP" + k + "; no conjugation space with this real locus is recorded");
    }
  }
  {
    auto& e = add(entry("OP2", Role::Fixed, truncated("OP2", "z", 8, 2)));
    e.expected_verdict = Verdict::NonRealizable;
    e.expected_rule = "HopfOne";
    e.expected_wu = "1 + z";
    e.expected_sw = "1 + z + z^2";
    e.notes.push_back("Cayley plane; its double would need a Hopf invariant one class in degree 16");
  }
  for (auto& e : out) {
    if (e.name == "RP2") {
      e.expected_wu = "1 + a";
      e.expected_sw = "1 + a + a^2";
    }
    if (e.name == "CP2") {
      e.expected_wu = "1 + x";
      e.expected_sw = "1 + x + x^2";
    }
    if (e.name == "HP2") {
      e.expected_wu = "1 + y";
      e.expected_sw = "1 + y + y^2";
    }
  }

  const char* surfaces[][2] = {
      {"T2", "algebra T2\nbasis\n 1 0\n a 1\n b 1\n t 2\nmul\n a b = t\nfundamental t\nend\n"},
      {"Sigma2",
       "algebra Sigma2\nbasis\n 1 0\n a1 1\n b1 1\n a2 1\n b2 1\n t 2\nmul\n a1 b1 = t\n a2 b2 = t\n"
       "fundamental t\nend\n"},
      {"Klein", "algebra Klein\nbasis\n 1 0\n u1 1\n u2 1\n t 2\nmul\n u1 u1 = t\n u2 u2 = t\nfundamental t\nend\n"},
      {"N3",
       "algebra N3\nbasis\n 1 0\n u1 1\n u2 1\n u3 1\n t 2\nmul\n u1 u1 = t\n u2 u2 = t\n u3 u3 = t\n"
       "fundamental t\nend\n"},
  };
  for (const auto& [name, text] : surfaces) {
    auto& e = add(entry(name, Role::Fixed, alg::parse(text)));
    realizable(e, "a conjugation 4-manifold");
    e.notes.push_back("closed surface; every surface is the real locus of a conjugation 4-manifold");
  }

  {
    auto& e = add(entry("FloydZ", Role::Fixed,
                        alg::parse("algebra FloydZ\nbasis\n 1 0\n f2 2\n f3 3\n f5 5\nmul\n f2 f3 = f5\n"
                                   "sq\n Sq1 f2 = f3\n Sq2 f3 = f5\nfundamental f5\nend\n")));
    e.double_is = "FloydY";
    e.expected_verdict = Verdict::Undetermined;
    e.expected_wu = "1 + f2";
    e.expected_sw = "1 + f2 + f3";
    e.notes.push_back("5-dimensional Floyd manifold; doubles to FloydY, realizability open");
    e.notes.push_back("its suspension spectrum is the real locus of an action on that of FloydY");
  }
  {
    auto& e = add(entry("FloydY", Role::Fixed,
                        alg::parse("algebra FloydY\nbasis\n 1 0\n e4 4\n e6 6\n e10 10\nmul\n e4 e6 = e10\n"
                                   "sq\n Sq2 e4 = e6\n Sq4 e6 = e10\nfundamental e10\nend\n")));
    e.expected_verdict = Verdict::NonRealizable;
    e.expected_rule = "FloydRule";
    e.expected_wu = "1 + e4";
    e.expected_sw = "1 + e4 + e6";
    e.notes.push_back("10-dimensional Floyd manifold with four cells; not a real locus");
  }

  const std::pair<int, int> dold_sizes[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}};
  for (const auto& [m, n] : dold_sizes) {
    const std::string suffix = std::to_string(m) + "_" + std::to_string(n);
    auto& p = add(entry("P" + suffix, Role::Fixed, dold("P" + suffix, 1, m, n)));
    p.scope = ValidationScope::Ring;
    p.double_is = "DP" + suffix;
    p.realized_by = "DP" + suffix;
    p.notes.push_back("Dold manifold S^m x_C2 CP^n, ring F2[c,d]/(c^{m+1}, d^{n+1}) with deg c = 1, deg d = 2");
    p.notes.push_back("ring only: the square tables are not recorded");
    auto& dp = add(entry("DP" + suffix, Role::Total, dold("DP" + suffix, 2, m, n)));
    dp.scope = ValidationScope::Ring;
    dp.fixed_locus = "P" + suffix;
    dp.notes.push_back("S^{2m+1} x_S1 HP^n with real locus P(m, n); ring only");
  }

  {
    const auto d8 = GroupPresentation::parse("gens: x y\nrel: x x\nrel: y y\nrel: x y x y x y x y\n");
    auto description = build_presentation_complex(d8);
    auto& e = add(entry("D8_complex", Role::Fixed, description.cohomology_fixed));
    realizable(e, "conjugation complex of the square presentation of D8");
    e.extra = [d8]() -> std::optional<std::string> {
      const auto d = build_presentation_complex(d8);
      if (d.betti != BettiNumbers{1, 2, 3}) return "Betti numbers differ from (1, 2, 3)";
      if (!d.halves_dimensions()) return "cell dimensions do not halve";
      auto report = check_double_pair(d.cohomology_total, d.cohomology_fixed, identity_kappa(d.cohomology_fixed));
      if (!report.ok()) return "double pair: " + report.summary();
      return std::nullopt;
    };
    e.notes.push_back("presentation complex of <x, y | x^2, y^2, (xy)^4>, all relators squares");
  }
  {
    AttachingElement w;
    w.spheres = 2;
    w.omega[{0, 1}] = 1;
    auto description = realize_four_complex(2, w);
    auto& fixed = add(entry("S2xS2", Role::Fixed, description.cohomology_fixed));
    fixed.double_is = "S4xS4";
    realizable(fixed, "S^{2 rho} x S^{2 rho}");
    fixed.notes.push_back("wedge of two 2-spheres with a 4-cell attached along the Whitehead product");
    auto& total = add(entry("S4xS4", Role::Total, description.cohomology_total));
    total.fixed_locus = "S2xS2";
    total.notes.push_back("8-cell attached along the doubled Whitehead product W_12");
  }
  return out;
}

std::string degrees_of(const UnstableAlgebra& a) {
  std::string out;
  for (const auto& b : a.basis()) out += (out.empty() ? "" : ",") + std::to_string(b.degree);
  return out;
}

std::string graded_format(const UnstableAlgebra& a, const std::vector<F2Vector>& graded) {
  return a.format(total_class(a, graded));
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw UsageError("unknown catalog entry " + name);
}

std::vector<CatalogSummary> catalog_list() {
  std::vector<CatalogSummary> out;
  for (const auto& e : catalog()) {
    out.push_back({e.name, e.role == Role::Fixed ? "fixed" : "total", degrees_of(e.algebra),
                   e.scope == ValidationScope::Full ? "full" : "ring", e.notes});
  }
  return out;
}

RealizabilityReport check_realizable_with_catalog(const UnstableAlgebra& b) {
  RealizabilityReport r = check_realizable(b);
  if (r.verdict != Verdict::Undetermined) return r;
  for (const auto& e : catalog()) {
    if (!e.realized_by || e.scope != ValidationScope::Full) continue;
    if (!find_isomorphism(b, e.algebra)) continue;
    r.verdict = Verdict::Realizable;
    r.rule = "CatalogCrossReference";
    r.witness = *e.realized_by;
    r.evidence = "isomorphic to catalog entry " + e.name + ", the real locus of " + *e.realized_by;
    r.trail.push_back({"CatalogCrossReference", "upgrade", r.evidence});
    return r;
  }
  return r;
}

VerifyResult verify_entry(const CatalogEntry& e) {
  VerifyResult v;
  v.name = e.name;
  const auto& a = e.algebra;
  auto check = [&](const std::string& name, const std::function<std::optional<std::string>()>& body) {
    v.checks.push_back(name);
    try {
      if (auto failure = body()) v.failures.push_back(name + ": " + *failure);
    } catch (const std::exception& ex) {
      v.failures.push_back(name + ": " + ex.what());
    }
  };
  using Result = std::optional<std::string>;

  check("validate", [&]() -> Result {
    auto report = validate(a, e.scope);
    if (!report.ok()) return report.summary();
    return std::nullopt;
  });
  check("round-trip", [&]() -> Result {
    const std::string text = alg::print(a);
    const auto back = alg::parse(text);
    if (!(back == a)) return "reparsed algebra differs";
    if (alg::print(back) != text) return "printer is not byte-stable";
    return std::nullopt;
  });
  std::optional<UnstableAlgebra> phi;
  check("double", [&]() -> Result {
    phi = double_algebra(a, e.scope);
    if (auto report = validate(*phi, e.scope); !report.ok()) return "double invalid: " + report.summary();
    if (!(halve_algebra(*phi, e.scope) == a)) return "halve(double) differs";
    if (auto report = check_double_pair(*phi, a, identity_kappa(a), e.scope); !report.ok()) {
      return "double pair: " + report.summary();
    }
    return std::nullopt;
  });
  if (e.double_is) {
    check("double-is " + *e.double_is, [&]() -> Result {
      const auto& d = catalog_entry(*e.double_is).algebra;
      if (!phi || !structurally_equal(*phi, d, e.scope)) return "double differs from " + *e.double_is;
      if (auto report = check_double_pair(d, a, identity_kappa(a), e.scope); !report.ok()) return report.summary();
      return std::nullopt;
    });
  }
  if (e.fixed_locus) {
    check("fixed-locus " + *e.fixed_locus, [&]() -> Result {
      const auto& f = catalog_entry(*e.fixed_locus).algebra;
      if (auto report = check_double_pair(a, f, identity_kappa(a), e.scope); !report.ok()) return report.summary();
      return std::nullopt;
    });
  }
  if (a.fundamental() && e.scope == ValidationScope::Full) {
    check("wu-sw", [&]() -> Result {
      const auto wu = wu_classes(a);
      const auto sw = sw_classes(a);
      if (e.expected_wu && graded_format(a, wu) != *e.expected_wu) {
        return "Wu class " + graded_format(a, wu) + ", expected " + *e.expected_wu;
      }
      if (e.expected_sw && graded_format(a, sw) != *e.expected_sw) {
        return "Stiefel-Whitney class " + graded_format(a, sw) + ", expected " + *e.expected_sw;
      }
      if (!phi) return "no double";
      // kappa(w_{2i}(double)) = w_i and odd classes of the double vanish.
      const auto kappa = identity_kappa(a);
      const auto sw_total = sw_classes(*phi);
      const auto wu_total = wu_classes(*phi);
      bool wu_match = true;
      for (std::size_t d = 0; d < sw_total.size(); ++d) {
        const F2Vector mapped = apply_kappa(kappa, a, sw_total[d]);
        const F2Vector mapped_v = apply_kappa(kappa, a, wu_total[d]);
        if (d % 2 == 1) {
          if (sw_total[d].any()) return "odd Stiefel-Whitney class w" + std::to_string(d) + " of the double";
          continue;
        }
        if (mapped != sw[d / 2]) {
          return "kappa(w" + std::to_string(d) + ") = " + a.format(mapped) + " but w" + std::to_string(d / 2) +
                 " = " + a.format(sw[d / 2]);
        }
        if (mapped_v != wu[d / 2]) wu_match = false;
      }
      v.wu_correspondence = wu_match;
      return std::nullopt;
    });
  }
  if (e.expected_verdict && e.scope == ValidationScope::Full) {
    check("verdict", [&]() -> Result {
      const auto base = check_realizable(a);
      if (base.verdict == Verdict::Realizable) return "engine claimed realizability on its own";
      const auto report = check_realizable_with_catalog(a);
      if (report.verdict != *e.expected_verdict || report.rule != e.expected_rule) {
        return to_string(report.verdict) + "(" + report.rule + "), expected " + to_string(*e.expected_verdict) +
               "(" + e.expected_rule + ")";
      }
      if (*e.expected_verdict == Verdict::Realizable && base.passed.size() != rules_table().size()) {
        return "necessary checks did not all pass";
      }
      if (!(check_realizable(a) == base)) return "verdict is not reproducible";
      return std::nullopt;
    });
  }
  if (e.extra) check("extra", e.extra);
  v.pass = v.failures.empty();
  return v;
}

std::vector<VerifyResult> catalog_verify_serial() {
  std::vector<VerifyResult> out;
  for (const auto& e : catalog()) out.push_back(verify_entry(e));
  return out;
}

std::vector<VerifyResult> catalog_verify(const std::string& name) {
  if (name != "all") return {verify_entry(catalog_entry(name))};
  const auto& entries = catalog();
  std::vector<VerifyResult> out(entries.size());
  const auto count = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = verify_entry(entries[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace conjzoo
