#include "polyef/random_polytope.hpp"

#include "polyef/errors.hpp"

namespace polyef {

long random_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

HPolyhedron random_polytope(std::mt19937_64& rng, std::size_t dim, std::size_t rows) {
  if (rows < 2 * dim) throw ArgumentError("random_polytope: need at least 2*dim rows for the bounding box");
  HPolyhedron h(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    h.add_le(unit_vector(dim, i), Rational(random_int(rng, 1, 6)));
    h.add_ge(unit_vector(dim, i), Rational(-random_int(rng, 1, 6)));
  }
  while (h.rows().size() < rows) {
    Vector a(dim);
    for (auto& x : a) x = Rational(random_int(rng, -4, 4));
    if (is_zero(a)) continue;
    h.add_le(std::move(a), Rational(random_int(rng, 1, 12)));
  }
  return h;
}

} // namespace polyef
