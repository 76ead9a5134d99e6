#pragma once

#include "polyef/polyhedron.hpp"

#include <random>

namespace polyef {

/// Bounded, full-dimensional random H-polytope in `dim` coordinates with
/// `rows` inequalities (at least 2·dim): a box plus random cuts that keep the
/// origin strictly inside.
HPolyhedron random_polytope(std::mt19937_64& rng, std::size_t dim, std::size_t rows);

/// Uniform integer in [lo, hi].
long random_int(std::mt19937_64& rng, long lo, long hi);

} // namespace polyef
