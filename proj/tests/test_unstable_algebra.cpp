#include <doctest.h>

#include "conjzoo/alg_format.hpp"
#include "conjzoo/catalog.hpp"
#include "conjzoo/unstable_algebra.hpp"
#include "oracles.hpp"

using namespace conjzoo;

namespace {

const char* kRP2 = "algebra RP2\nbasis\n  1 0\n  a 1\n  a2 2\nmul\n  a a = a2\nsq\nfundamental a2\nend\n";

UnstableAlgebra rp2() { return alg::parse(kRP2); }

std::string first_check(const ValidationReport& r) { return r.findings.empty() ? "" : r.findings.front().check; }

}  // namespace

TEST_CASE("table format parses and prints canonically") {
  const auto a = rp2();
  CHECK(a.size() == 3);
  CHECK(a.format(a.sq(1, a.index("a"))) == "a2");  // implied top square
  CHECK(a.format(a.sq(0, a.index("a"))) == "a");
  CHECK(a.fundamental() == a.index_of("a2"));
  CHECK(alg::print(a) == kRP2);
}

TEST_CASE("parse errors carry positions") {
  auto error_of = [](const std::string& text) {
    try {
      alg::parse(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(error_of("algebra X\nbasis\n  a 1\nend\n").find("1 0") != std::string::npos);
  CHECK(error_of("algebra X\nbasis\n  1 0\n  a 1\nmul\n  a q = a\nend\n").rfind("6:", 0) == 0);
  CHECK(error_of("algebra X\nbasis\n  1 0\n  a 1\n  a 2\nend\n").rfind("5:", 0) == 0);
  CHECK(error_of("algebra X\nbasis\n  1 0\n") != "no error");
  CHECK(error_of("algebra X\nbasis\n  1 0\nend\nbasis\n") != "no error");
  CHECK(error_of("algebra X\nbasis\n  1 0\n  + 3\nend\n") != "no error");
}

TEST_CASE("polynomial front end") {
  const auto t = alg::parse("polynomial T\ngen c 1 3\ngen d 2 1\nSq1 d = c*d\nfundamental top\nend\n");
  CHECK(t.size() == 8);
  CHECK(t.top_degree() == 5);
  CHECK(validate(t).ok());
  CHECK(t.format(t.sq(1, t.index("c*d"))) == "0");
  CHECK(t.format(t.sq(2, t.index("c*d"))) == "c^3*d");
  const auto capped = alg::parse("polynomial T\ngen c 1 3\ngen d 2 1\nend\n", {.max_degree = 2});
  CHECK(capped.size() == 4);
}

TEST_CASE("validation reports each broken axiom") {
  auto a = rp2();
  a.set_sq(1, a.index("a"), a.zero());
  CHECK(first_check(validate(a)) == "top-square");

  auto b = alg::parse("algebra B\nbasis\n  1 0\n  a 1\n  b 2\n  c 3\nmul\n  a a = b\nsq\n  Sq1 a = c\nend\n");
  const auto report = validate(b);
  CHECK(first_check(report) == "degree");

  auto u = alg::parse("algebra U\nbasis\n  1 0\n  a 2\n  b 6\nsq\n  Sq4 a = b\nend\n");
  CHECK(first_check(validate(u)) == "unstable");

  auto assoc = alg::parse(
      "algebra A\nbasis\n  1 0\n  a 1\n  b 1\n  c 2\n  d 3\nmul\n  a a = c\n  a c = d\n  b c = d\nend\n");
  CHECK(first_check(validate(assoc, ValidationScope::Ring)) == "associativity");

  auto adem = alg::parse("algebra Q\nbasis\n  1 0\n  a 3\n  b 5\n  c 7\nsq\n  Sq2 a = b\n  Sq2 b = c\nend\n");
  const auto adem_report = validate(adem);
  REQUIRE(adem_report.findings.size() == 1);
  CHECK(first_check(adem_report) == "adem");

  auto cartan = alg::parse("algebra C\nbasis\n  1 0\n  a 1\n  b 1\n  c 2\n  d 3\nmul\n  a b = c\nsq\n  Sq1 c = d\nend\n");
  CHECK(first_check(validate(cartan)) == "cartan");

  auto fundamental = rp2();
  fundamental.set_fundamental(fundamental.index("a"));
  CHECK(first_check(validate(fundamental, ValidationScope::Ring)) == "fundamental");
}

TEST_CASE("serial and parallel kernels agree byte for byte") {
  for (const auto& e : catalog()) {
    CHECK(kernels::validate_serial(e.algebra, e.scope) == kernels::validate_parallel(e.algebra, e.scope));
  }
  // many findings: every square of a large algebra wrong
  std::vector<BasisElement> basis{{"1", 0}};
  for (int i = 1; i <= 40; ++i) basis.push_back({"x" + std::to_string(i), 2});
  UnstableAlgebra junk("junk", basis);
  for (std::size_t i = 1; i < junk.size(); ++i) junk.set_sq(1, i, junk.basis_vector(i));
  const auto serial = kernels::validate_serial(junk, ValidationScope::Full);
  CHECK(serial.truncated);
  CHECK(serial.findings.size() == ValidationReport::kMaxFindings);
  CHECK(serial == kernels::validate_parallel(junk, ValidationScope::Full));

  const auto big = alg::parse("polynomial Big\ngen c 1 5\ngen d 2 3\ngen e 4 2\nSq1 d = c*d\nfundamental top\nend\n");
  CHECK(kernels::validate_serial(big, ValidationScope::Full).ok());
  auto tampered = big;
  tampered.set_sq(2, tampered.index("d"), tampered.basis_vector(tampered.index("e")));
  const auto broken = kernels::validate_serial(tampered, ValidationScope::Full);
  CHECK_FALSE(broken.ok());
  CHECK(broken == kernels::validate_parallel(tampered, ValidationScope::Full));
}

TEST_CASE("double and halve") {
  const auto a = rp2();
  const auto d = double_algebra(a);
  CHECK(d.name() == "RP2_double");
  CHECK(d.degree(d.index("a")) == 2);
  CHECK(d.format(d.sq(2, d.index("a"))) == "a2");
  CHECK(d.format(d.sq(1, d.index("a"))) == "0");
  CHECK(validate(d).ok());
  CHECK(halve_algebra(d) == a);
  CHECK(structurally_equal(d, catalog_entry("CP2").algebra));
  CHECK_THROWS_AS(halve_algebra(a), NotADoubleCandidate);
  auto broken = a;
  broken.set_sq(1, a.index("a"), a.zero());
  CHECK_THROWS_AS(double_algebra(broken), InvalidAlgebra);
}

TEST_CASE("double pair checks") {
  const auto fixed = rp2();
  const auto total = double_algebra(fixed);
  CHECK(check_double_pair(total, fixed, kappa_by_label(total, fixed)).ok());
  auto wrong = total;
  wrong.set_product(wrong.index("a"), wrong.index("a"), wrong.zero());
  wrong.set_sq(2, wrong.index("a"), wrong.zero());
  CHECK_FALSE(check_double_pair(wrong, fixed, kappa_by_label(wrong, fixed)).ok());
  const auto s = catalog_entry("S2").algebra;
  CHECK_THROWS_AS(kappa_by_label(s, fixed), UsageError);
}

TEST_CASE("Wu and Stiefel-Whitney classes") {
  const auto a = rp2();
  CHECK(a.format(total_class(a, wu_classes(a))) == "1 + a");
  CHECK(a.format(total_class(a, sw_classes(a))) == "1 + a + a2");
  const auto cp2 = catalog_entry("CP2").algebra;
  CHECK(cp2.format(total_class(cp2, wu_classes(cp2))) == "1 + x");
  CHECK(cp2.format(total_class(cp2, sw_classes(cp2))) == "1 + x + x^2");
  CHECK_THROWS_AS(wu_classes(alg::parse("algebra W\nbasis\n  1 0\n  a 1\n  b 1\nend\n")), DomainError);
  const auto degenerate =
      alg::parse("algebra W\nbasis\n  1 0\n  a 1\n  b 1\n  t 2\nmul\n  a a = t\nfundamental t\nend\n");
  CHECK_THROWS_AS(wu_classes(degenerate), NotPoincareDuality);
}

TEST_CASE("Wu classes agree with exhaustive search on the catalog") {
  for (const auto& e : catalog()) {
    const auto& a = e.algebra;
    if (!a.fundamental() || e.scope == ValidationScope::Ring) continue;
    const int n = a.top_degree();
    const auto wu = wu_classes(a);
    for (int k = 0; 2 * k <= n; ++k) {
      const auto lo = a.indices_in_degree(k), hi = a.indices_in_degree(n - k);
      const std::size_t top = *a.fundamental();
      auto pair = [&](std::size_t i, std::size_t x) {
        return a.multiply(a.basis_vector(lo[i]), a.basis_vector(hi[x])).test(top) ? 1 : 0;
      };
      auto sq_pair = [&](std::size_t x) { return a.apply_sq(k, a.basis_vector(hi[x])).test(top) ? 1 : 0; };
      const auto hits = oracle::wu_bruteforce(lo.size(), hi.size(), pair, sq_pair);
      REQUIRE(hits.size() == 1);
      F2Vector expected(a.size());
      for (std::size_t i = 0; i < lo.size(); ++i) {
        if ((hits[0] >> i) & 1U) expected.set(lo[i]);
      }
      CHECK_MESSAGE(wu[k] == expected, e.name << " v" << k);
    }
  }
}
