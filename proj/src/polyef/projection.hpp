#pragma once

#include "polyef/polyhedron.hpp"

#include <vector>

namespace polyef {

/// Exact coordinate projection by Fourier–Motzkin elimination. Output
/// coordinate i is input coordinate keep[i].
///
/// Equalities touching an eliminated coordinate are used for substitution
/// before any pairing. The remaining coordinates go in order of fewest
/// positive-times-negative row pairs, and each step discards vacuous rows and
/// rows dominated by a parallel row. An infeasible input projects to the
/// single row `0 <= -1`.
HPolyhedron fourier_motzkin(const HPolyhedron& h, const std::vector<std::size_t>& keep);

/// Projection of the generators followed by canonicalization.
VPolyhedron project_v(const VPolyhedron& v, const std::vector<std::size_t>& keep);

} // namespace polyef
