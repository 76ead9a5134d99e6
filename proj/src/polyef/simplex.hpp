#pragma once

#include "polyef/polyhedron.hpp"

#include <optional>

namespace polyef {

enum class LPStatus { Optimal, Unbounded, Infeasible };
enum class Sense { Minimize, Maximize };

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  std::optional<Vector> point; // basic optimal solution
  std::optional<Rational> value;

  bool optimal() const { return status == LPStatus::Optimal; }
};

/// General-form LP. Variables are free unless flagged nonnegative.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<bool> nonnegative;
  std::vector<Row> rows;
  Vector objective;
  Sense sense = Sense::Minimize;
};

/// Two-phase primal simplex over a dense rational tableau with Bland's rule.
LPOutcome solve_lp(const LinearProgram& lp);

LPOutcome simplex_solve(const HPolyhedron& h, const Vector& objective, Sense sense);

/// Some point of h, or nullopt when h is empty.
std::optional<Vector> feasible_point(const HPolyhedron& h);

} // namespace polyef
