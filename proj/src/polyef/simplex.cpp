#include "polyef/simplex.hpp"

#include "polyef/errors.hpp"
#include "polyef/matrix.hpp"

#include <limits>

namespace polyef {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Standard form: minimize c·z subject to T z = rhs, z >= 0. The objective row
// holds reduced costs; its last entry is minus the current objective value.
class Tableau {
public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<mpq_class>(cols + 1)), obj_(cols + 1), basis_(rows, kNone), cols_(cols) {}

  mpq_class& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  mpq_class& rhs(std::size_t r) { return a_[r][cols_]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void set_objective(const std::vector<mpq_class>& cost) {
    for (std::size_t j = 0; j <= cols_; ++j) obj_[j] = j < cols_ ? cost[j] : 0;
    for (std::size_t r = 0; r < rows(); ++r) {
      const mpq_class& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= cb * a_[r][j];
    }
  }

  mpq_class value() const { return -obj_[cols_]; }

  void pivot(std::size_t r, std::size_t c) {
    mpq_class p = a_[r][c];
    for (auto& x : a_[r]) x /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || sgn(a_[i][c]) == 0) continue;
      mpq_class f = a_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(a_[r][j]) != 0) a_[i][j] -= f * a_[r][j];
    }
    if (sgn(obj_[c]) != 0) {
      mpq_class f = obj_[c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(a_[r][j]) != 0) obj_[j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  // Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool optimize(std::size_t allowed) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < allowed; ++j)
        if (sgn(obj_[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      mpq_class best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(a_[i][enter]) <= 0) continue;
        mpq_class ratio = a_[i][cols_] / a_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

private:
  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> obj_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

// A split free variable can leave the optimum in the relative interior of an
// optimal face. Walk along the null space of the tight rows until the tight
// rows have full rank; at an optimum those directions keep the objective.
Vector move_to_vertex(const LinearProgram& lp, Vector x) {
  const std::size_t n = lp.num_vars;
  std::vector<Row> rows = lp.rows;
  for (std::size_t j = 0; j < n; ++j)
    if (!lp.nonnegative.empty() && lp.nonnegative[j]) rows.push_back({scale(unit_vector(n, j), -1), Relation::LessEqual, 0});

  for (;;) {
    std::vector<Vector> tight;
    for (const auto& r : rows)
      if (r.rel == Relation::Equal || dot(r.coeffs, x) == r.rhs) tight.push_back(r.coeffs);
    RatMatrix ns = null_space(tight.empty() ? RatMatrix(0, n) : RatMatrix::from_rows(tight, n));
    if (ns.cols() == 0) return x;
    const Vector d = ns.col(0);

    // step along +d or -d to the first row that becomes tight
    bool moved = false;
    for (int sign : {1, -1}) {
      std::optional<Rational> step;
      for (const auto& r : rows) {
        Rational ad = dot(r.coeffs, d) * sign;
        if (r.rel == Relation::Equal || ad.sign() <= 0) continue;
        Rational t = (r.rhs - dot(r.coeffs, x)) / ad;
        if (!step || t < *step) step = t;
      }
      if (step) {
        x = add(x, scale(d, *step * sign));
        moved = true;
        break;
      }
    }
    if (!moved) return x; // the face contains a line: there is no vertex
  }
}

} // namespace

LPOutcome solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  if (lp.objective.size() != n) throw DimensionError("solve_lp: objective length != variable count");
  if (!lp.nonnegative.empty() && lp.nonnegative.size() != n)
    throw DimensionError("solve_lp: nonnegativity flags length != variable count");
  for (const auto& row : lp.rows)
    if (row.coeffs.size() != n) throw DimensionError("solve_lp: row length != variable count");

  // Column layout: structural columns (free variables split in two), slacks,
  // then artificials.
  std::vector<std::size_t> pos_col(n), neg_col(n, kNone);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    bool nonneg = !lp.nonnegative.empty() && lp.nonnegative[j];
    if (!nonneg) neg_col[j] = cols++;
  }
  const std::size_t m = lp.rows.size();
  std::vector<std::size_t> slack_col(m, kNone);
  for (std::size_t i = 0; i < m; ++i)
    if (lp.rows[i].rel == Relation::LessEqual) slack_col[i] = cols++;
  const std::size_t first_artificial = cols;

  std::vector<bool> needs_artificial(m);
  std::vector<bool> negate(m);
  for (std::size_t i = 0; i < m; ++i) {
    negate[i] = lp.rows[i].rhs.sign() < 0;
    needs_artificial[i] = slack_col[i] == kNone || negate[i];
    if (needs_artificial[i]) ++cols;
  }

  Tableau t(m, cols);
  std::size_t art = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    const Row& row = lp.rows[i];
    int s = negate[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& c = row.coeffs[j].raw();
      if (sgn(c) == 0) continue;
      t.at(i, pos_col[j]) = s * c;
      if (neg_col[j] != kNone) t.at(i, neg_col[j]) = -s * c;
    }
    if (slack_col[i] != kNone) t.at(i, slack_col[i]) = s;
    t.rhs(i) = s * row.rhs.raw();
    if (needs_artificial[i]) {
      t.at(i, art) = 1;
      t.basis()[i] = art++;
    } else {
      t.basis()[i] = slack_col[i];
    }
  }

  LPOutcome out;
  if (art > first_artificial) {
    std::vector<mpq_class> phase1(cols);
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = 1;
    t.set_objective(phase1);
    t.optimize(cols);
    if (sgn(t.value()) > 0) return out;
    // Pivot zero-level artificials out of the basis; rows where that is
    // impossible are linearly dependent and get dropped.
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (t.basis()[i] < first_artificial) continue;
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < first_artificial; ++j)
        if (sgn(t.at(i, j)) != 0) {
          enter = j;
          break;
        }
      if (enter == kNone)
        t.drop_row(i);
      else
        t.pivot(i, enter);
    }
  }

  std::vector<mpq_class> cost(cols);
  int dir = lp.sense == Sense::Maximize ? -1 : 1;
  for (std::size_t j = 0; j < n; ++j) {
    const mpq_class& c = lp.objective[j].raw();
    cost[pos_col[j]] = dir * c;
    if (neg_col[j] != kNone) cost[neg_col[j]] = -dir * c;
  }
  t.set_objective(cost);
  if (!t.optimize(first_artificial)) {
    out.status = LPStatus::Unbounded;
    return out;
  }

  std::vector<mpq_class> z(cols);
  for (std::size_t i = 0; i < t.rows(); ++i) z[t.basis()[i]] = t.rhs(i);
  Vector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class v = z[pos_col[j]];
    if (neg_col[j] != kNone) v -= z[neg_col[j]];
    x[j] = Rational(std::move(v));
  }
  out.status = LPStatus::Optimal;
  out.point = move_to_vertex(lp, std::move(x));
  out.value = dot(lp.objective, *out.point);
  return out;
}

LPOutcome simplex_solve(const HPolyhedron& h, const Vector& objective, Sense sense) {
  if (objective.size() != h.dim()) throw DimensionError("simplex_solve: objective length != dim");
  LinearProgram lp;
  lp.num_vars = h.dim();
  lp.rows = h.rows();
  lp.objective = objective;
  lp.sense = sense;
  return solve_lp(lp);
}

std::optional<Vector> feasible_point(const HPolyhedron& h) {
  auto res = simplex_solve(h, Vector(h.dim()), Sense::Minimize);
  if (!res.optimal()) return std::nullopt;
  return res.point;
}

} // namespace polyef
