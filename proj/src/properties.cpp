#include "conjzoo/properties.hpp"

#include <functional>

#include "conjzoo/cayley_dickson.hpp"
#include "conjzoo/jordan.hpp"
#include "conjzoo/random.hpp"
#include "conjzoo/steenrod.hpp"

namespace conjzoo {

namespace {

SteenrodMonomial random_monomial(random::Engine& rng, int degree) {
  std::vector<int> e;
  std::uniform_int_distribution<int> part(1, 8);
  while (degree > 0) {
    const int k = std::min(degree, part(rng));
    e.push_back(k);
    degree -= k;
  }
  return SteenrodMonomial(std::move(e));
}

}  // namespace

std::vector<PropertyResult> run_properties(std::uint64_t seed, int samples) {
  random::Engine rng(seed);
  std::vector<PropertyResult> out;
  // Each body returns an empty string on success, otherwise a counterexample.
  auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    PropertyResult r{name, true, samples, ""};
    for (int i = 0; i < samples && r.pass; ++i) {
      if (std::string failure = body(); !failure.empty()) {
        r.pass = false;
        r.detail = failure;
      }
    }
    out.push_back(std::move(r));
  };
  std::uniform_int_distribution<int> level_dist(0, kMaxCDLevel);
  std::uniform_int_distribution<int> upper_level(2, 3);

  run("cd-unit", [&] {
    const int l = level_dist(rng);
    const auto x = random::element(rng, l);
    const auto one = CDElement::one(l);
    return cd::mul(one, x) == x && cd::mul(x, one) == x ? "" : cd::to_string(x);
  });
  run("cd-conj-anti-multiplicative", [&] {
    const int l = level_dist(rng);
    const auto a = random::element(rng, l), b = random::element(rng, l);
    return cd::conj(cd::mul(a, b)) == cd::mul(cd::conj(b), cd::conj(a)) ? "" : cd::to_string(a) + ", " + cd::to_string(b);
  });
  run("cd-tau-multiplicative-involution", [&] {
    const int l = level_dist(rng);
    const auto a = random::element(rng, l), b = random::element(rng, l);
    const bool ok = cd::tau(cd::mul(a, b)) == cd::mul(cd::tau(a), cd::tau(b)) && cd::tau(cd::tau(a)) == a &&
                    cd::tau(cd::conj(a)) == cd::conj(cd::tau(a));
    return ok ? "" : cd::to_string(a) + ", " + cd::to_string(b);
  });
  run("cd-norm-multiplicative", [&] {
    const int l = level_dist(rng);
    const auto a = random::element(rng, l), b = random::element(rng, l);
    return cd::norm(cd::mul(a, b)) == cd::norm(a) * cd::norm(b) ? "" : cd::to_string(a) + ", " + cd::to_string(b);
  });
  run("cd-inverse", [&] {
    const int l = level_dist(rng);
    const auto a = random::nonzero_element(rng, l);
    const auto inv = cd::inverse(a);
    return cd::mul(a, inv) == CDElement::one(l) && cd::mul(inv, a) == CDElement::one(l) ? "" : cd::to_string(a);
  });
  run("hopf-equivariant", [&] {
    const int l = upper_level(rng);
    const auto x = random::element(rng, l), y = random::nonzero_element(rng, l);
    return hopf_map(cd::tau(x), cd::tau(y)) == line_tau(hopf_map(x, y)) ? "" : cd::to_string(x) + ", " + cd::to_string(y);
  });
  run("jordan-tau-multiplicative", [&] {
    const int l = upper_level(rng);
    const auto p = random::projector(rng, l, 3), q = random::projector(rng, l, 3);
    const bool ok = jordan::matrix_tau(jordan::jordan_mul(p, q)) ==
                    jordan::jordan_mul(jordan::matrix_tau(p), jordan::matrix_tau(q));
    return ok ? "" : jordan::to_string(p);
  });
  run("jordan-stratum-tau-stable", [&] {
    const int l = upper_level(rng);
    std::uniform_int_distribution<int> support(1, 3);
    const auto p = random::projector(rng, l, support(rng));
    if (!jordan::in_projective_plane(p)) return "not a projector: " + jordan::to_string(p);
    return jordan::classify_stratum(p) == jordan::classify_stratum(jordan::matrix_tau(p)) ? "" : jordan::to_string(p);
  });
  run("adem-idempotent", [&] {
    std::uniform_int_distribution<int> deg(1, 20);
    const SteenrodElement e(random_monomial(rng, deg(rng)));
    const auto n = steenrod::adem_normalize(e);
    const bool ok = n.is_admissible() && n.is_homogeneous() && steenrod::adem_normalize(n) == n &&
                    (n.is_zero() || n.terms().begin()->degree() == e.terms().begin()->degree());
    return ok ? "" : to_string(e);
  });
  run("adem-confluence", [&] {
    std::uniform_int_distribution<int> deg(1, 16);
    const SteenrodElement e(random_monomial(rng, deg(rng)));
    return steenrod::adem_normalize(e) == steenrod::adem_normalize_rightmost(e) ? "" : to_string(e);
  });
  return out;
}

}  // namespace conjzoo
