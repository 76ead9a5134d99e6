#pragma once

#include "polyef/rational.hpp"

#include <vector>

namespace polyef {

struct ConeGenerators {
  std::vector<Vector> rays;      // extreme rays of the pointed part, primitive
  std::vector<Vector> lineality; // basis of the lineality space
};

/// Generators of the cone {u : g·u >= 0 for g in ineq, e·u = 0 for e in eq}.
///
/// Equalities are removed by restricting to their null space, the lineality
/// space is split off by restricting to the row space of the remaining
/// constraints, and the resulting pointed cone is handled by the incremental
/// double description method with the combinatorial adjacency test.
ConeGenerators cone_generators(const std::vector<Vector>& ineq, const std::vector<Vector>& eq,
                               std::size_t dim);

} // namespace polyef
