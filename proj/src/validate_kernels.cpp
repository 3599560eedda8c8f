// Validation of the unstable-algebra axioms. Every check is split into passes
// over a single basis index; the passes write into per-index buckets that are
// concatenated in (pass, index) order, so the serial and OpenMP drivers emit
// byte-identical reports.


#include <algorithm>
#include <cstdint>

#include "conjzoo/steenrod.hpp"
#include "conjzoo/unstable_algebra.hpp"

namespace conjzoo::kernels {

namespace {

using Bucket = std::vector<Finding>;

struct Context {
  const UnstableAlgebra& a;
  int top;
  int max_k;
  /// Inadmissible (a, b) with a + b <= top, and the admissible form of Sq^a Sq^b.
  std::vector<std::pair<std::pair<int, int>, SteenrodElement>> adem;
};

void note(Bucket& out, std::string check, std::string witness) {
  if (out.size() <= ValidationReport::kMaxFindings) out.push_back({std::move(check), std::move(witness)});
}

std::string sq_name(int k, const std::string& label) { return "Sq" + std::to_string(k) + " " + label; }

F2Vector apply_monomial(const UnstableAlgebra& a, const SteenrodMonomial& m, F2Vector x) {
  const auto& e = m.exponents();
  for (auto it = e.rbegin(); it != e.rend(); ++it) x = a.apply_sq(*it, x);
  return x;
}

// Degree of each basis element in the support must be `expected`.
std::optional<int> wrong_degree(const UnstableAlgebra& a, const F2Vector& v, int expected) {
  for (auto s : v.support()) {
    if (a.degree(s) != expected) return a.degree(s);
  }
  return std::nullopt;
}

void unit_pass(const Context& c, std::size_t i, Bucket& out) {
  const auto& a = c.a;
  if (a.product(a.unit_index(), i) != a.basis_vector(i)) {
    note(out, "unit", "1*" + a.label(i) + " = " + a.format(a.product(a.unit_index(), i)));
  }
  if (i == a.unit_index() && a.fundamental() && a.degree(*a.fundamental()) != c.top) {
    note(out, "fundamental", a.label(*a.fundamental()) + " is not in the top degree " + std::to_string(c.top));
  }
}

void degree_pass(const Context& c, std::size_t i, Bucket& out) {
  const auto& a = c.a;
  for (std::size_t j = i; j < a.size(); ++j) {
    const int expected = a.degree(i) + a.degree(j);
    if (auto d = wrong_degree(a, a.product(i, j), expected)) {
      note(out, "degree", a.label(i) + "*" + a.label(j) + " = " + a.format(a.product(i, j)) + " has a term of degree " +
                              std::to_string(*d) + ", expected " + std::to_string(expected));
    }
  }
  for (int k = 1; k <= c.max_k; ++k) {
    const int expected = a.degree(i) + k;
    const F2Vector value = a.sq(k, i);
    if (auto d = wrong_degree(a, value, expected)) {
      note(out, "degree", sq_name(k, a.label(i)) + " = " + a.format(value) + " has a term of degree " +
                              std::to_string(*d) + ", expected " + std::to_string(expected));
    }
  }
}

void associativity_pass(const Context& c, std::size_t i, Bucket& out) {
  const auto& a = c.a;
  const F2Vector bi = a.basis_vector(i);
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      F2Vector left = a.multiply(a.product(i, j), a.basis_vector(k));
      F2Vector right = a.multiply(bi, a.product(j, k));
      if (left != right) {
        note(out, "associativity", "(" + a.label(i) + "*" + a.label(j) + ")*" + a.label(k) + " = " +
                                       a.format(left) + " but " + a.label(i) + "*(" + a.label(j) + "*" + a.label(k) +
                                       ") = " + a.format(right));
      }
    }
  }
}

void unstable_pass(const Context& c, std::size_t i, Bucket& out) {
  const auto& a = c.a;
  const int d = a.degree(i);
  for (int k = d + 1; k <= c.max_k; ++k) {
    const F2Vector value = a.sq(k, i);
    if (value.any()) {
      note(out, "unstable", sq_name(k, a.label(i)) + " = " + a.format(value) + " but " + a.label(i) +
                                " has degree " + std::to_string(d));
    }
  }
  if (d > 0 && a.sq(d, i) != a.product(i, i)) {
    note(out, "top-square", sq_name(d, a.label(i)) + " = " + a.format(a.sq(d, i)) + " but " + a.label(i) + "*" +
                                a.label(i) + " = " + a.format(a.product(i, i)));
  }
}

void cartan_pass(const Context& c, std::size_t i, Bucket& out) {
  const auto& a = c.a;
  for (std::size_t j = i; j < a.size(); ++j) {
    const int total = a.degree(i) + a.degree(j);
    for (int n = 1; n <= total; ++n) {
      F2Vector lhs = a.apply_sq(n, a.product(i, j));
      F2Vector rhs = a.zero();
      for (int s = 0; s <= n; ++s) rhs ^= a.multiply(a.sq(s, i), a.sq(n - s, j));
      if (lhs != rhs) {
        note(out, "cartan", "Sq" + std::to_string(n) + "(" + a.label(i) + "*" + a.label(j) + ") = " +
                                a.format(lhs) + " but the Cartan sum is " + a.format(rhs));
      }
    }
  }
}

void adem_pass(const Context& c, std::size_t i, Bucket& out) {
  const auto& a = c.a;
  const F2Vector x = a.basis_vector(i);
  for (const auto& [pair, normal] : c.adem) {
    const auto [p, q] = pair;
    F2Vector lhs = a.apply_sq(p, a.apply_sq(q, x));
    F2Vector rhs = a.zero();
    for (const auto& m : normal.terms()) rhs ^= apply_monomial(a, m, x);
    if (lhs != rhs) {
      note(out, "adem", "Sq" + std::to_string(p) + " Sq" + std::to_string(q) + " " + a.label(i) + " = " +
                            a.format(lhs) + " but " + to_string(normal) + " gives " + a.format(rhs));
    }
  }
}

using Pass = void (*)(const Context&, std::size_t, Bucket&);

std::vector<Pass> passes_for(ValidationScope scope) {
  if (scope == ValidationScope::Ring) return {unit_pass, degree_pass, associativity_pass};
  return {unit_pass, degree_pass, associativity_pass, unstable_pass, cartan_pass, adem_pass};
}

Context make_context(const UnstableAlgebra& a) {
  Context c{a, a.top_degree(), a.top_degree(), {}};
  for (const auto& [key, value] : a.sq_entries()) c.max_k = std::max(c.max_k, key.first);
  for (int p = 1; p < c.top; ++p) {
    for (int q = 1; p + q <= c.top; ++q) {
      if (p < 2 * q) c.adem.push_back({{p, q}, steenrod::adem_normalize(SteenrodMonomial({p, q}))});
    }
  }
  return c;
}

ValidationReport merge(std::vector<Bucket>& buckets) {
  ValidationReport report;
  for (auto& bucket : buckets) {
    for (auto& f : bucket) {
      if (report.findings.size() == ValidationReport::kMaxFindings) {
        report.truncated = true;
        return report;
      }
      report.findings.push_back(std::move(f));
    }
  }
  return report;
}

}  // namespace

ValidationReport validate_serial(const UnstableAlgebra& a, ValidationScope scope) {
  const Context c = make_context(a);
  const auto passes = passes_for(scope);
  const std::size_t n = a.size();
  std::vector<Bucket> buckets(passes.size() * n);
  for (std::size_t p = 0; p < passes.size(); ++p) {
    for (std::size_t i = 0; i < n; ++i) passes[p](c, i, buckets[p * n + i]);
  }
  return merge(buckets);
}

ValidationReport validate_parallel(const UnstableAlgebra& a, ValidationScope scope) {
  const Context c = make_context(a);
  const auto passes = passes_for(scope);
  const std::size_t n = a.size();
  const auto tasks = static_cast<std::int64_t>(passes.size() * n);
  std::vector<Bucket> buckets(passes.size() * n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < tasks; ++t) {
    const auto u = static_cast<std::size_t>(t);
    passes[u / n](c, u % n, buckets[u]);
  }
  return merge(buckets);
}

}  // namespace conjzoo::kernels
