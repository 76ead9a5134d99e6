#pragma once

#include "polyef/bridge.hpp"
#include "polyef/ef.hpp"
#include "polyef/polyhedron.hpp"

#include <string>
#include <string_view>

namespace polyef {

// Plain-text block formats. Every block is
//
//   begin <kind>
//   ...
//   end
//
// with whitespace-separated tokens; lines starting with '#' are comments.
// Numbers are rationals ("p", "p/q") or exact decimals.
//
//   begin h                 begin v                 begin map
//   dim 3                   dim 3                   dims 3 4
//   <= -5 4 0 | 0           vertex 8 10 6           row 0 0 0 4
//   =   0 3 -5 | 0          ray 0 0 1               offset 1 2 3   (optional)
//   end                     lineality 1 0 0         end
//                           end
//
//   begin graph
//   dims <m> <p> <q>
//   B-row <p entries>       (m lines)
//   C-row <q entries>       (m lines)
//   b <m entries>
//   end
//
// Parsers throw ParseError carrying the offending line number.

AnyPolyhedron parse_polyhedron(std::string_view text);
LinearMap parse_map(std::string_view text);
GraphL parse_graph(std::string_view text);

std::string format_polyhedron(const HPolyhedron& h);
std::string format_polyhedron(const VPolyhedron& v);
std::string format_polyhedron(const AnyPolyhedron& p);
std::string format_map(const LinearMap& m);
std::string format_graph(const GraphL& g);

/// Whole file as a string; throws IoError when it cannot be read.
std::string read_text_file(const std::string& path);

} // namespace polyef
