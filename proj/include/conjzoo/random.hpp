#pragma once

// Seeded generators for randomized property checks. Everything is exact:
// sphere points come from inverse stereographic projection of rational points.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "conjzoo/cayley_dickson.hpp"
#include "conjzoo/jordan.hpp"

namespace conjzoo::random {

using Engine = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// p/q with |p| <= max_abs and 1 <= q <= max_den.
Rational rational(Engine& rng, int max_abs = 9, int max_den = 4);

CDElement element(Engine& rng, int level);
CDElement nonzero_element(Engine& rng, int level);
/// Uniformly chosen from the tau-fixed subalgebra (as a rational combination of its basis).
CDElement fixed_element(Engine& rng, int level);

/// A rational point of the unit sphere in R^n (n >= 1).
std::vector<Rational> sphere_point(Engine& rng, std::size_t n);

/// v v* / (v* v) for a random v with the first `support` components nonzero
/// (support 1 gives diag(1,0,0), 2 a point with gamma = 0, 3 a generic point).
/// At level 3 the entries are drawn from the subalgebra generated by two random
/// octonions, which is associative, so the result is still a projector.
HermitianMatrix projector(Engine& rng, int level, int support, bool tau_fixed = false);

}  // namespace conjzoo::random
