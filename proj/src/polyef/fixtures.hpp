#pragma once

#include "polyef/ef.hpp"
#include "polyef/polyhedron.hpp"

#include <vector>

// Constants of the worked counterexample: the segment P in x-space, the slab
// Q over (x, y), the map π between them and the membership witness.
namespace polyef::fixtures {

/// Conv{(8,10,6), (12,15,9)}.
VPolyhedron segment_p_vertices();

/// The explicit description of P with one equality and eight inequalities:
///   -5x1 + 4x2 <= 0;  3x2 - 5x3 = 0;  3x1 - 4x3 <= 0;
///   8 <= x1 <= 12;  10 <= x2 <= 15;  6 <= x3 <= 9.
HPolyhedron segment_p_description();

/// The equality row 3x2 - 5x3 = 0 of that description.
Row segment_p_equality();

/// {(x, y) in R^3 x R : 2 <= 0·x + y <= 3}.
HPolyhedron slab_q();

/// π = [0 0 0 4; 0 0 0 5; 0 0 0 3].
LinearMap slab_to_segment_map();

/// (22.5, -50, 100): lifts into Q but is not in P.
Vector membership_witness();

/// Coordinates of x inside Q.
std::vector<std::size_t> x_coordinates();

/// {x <= 5, x <= 7, 2 <= y <= 3} over (x, y); the row x <= 5 is irredundant.
HPolyhedron degeneracy_control();

} // namespace polyef::fixtures
