#pragma once

#include "fatsys/rational.hpp"

#include <cstddef>
#include <vector>

namespace fatsys::lp {

enum class Relation { Equal, GreaterEqual, LessEqual };

struct Term {
  int var;
  Rational coef;
};

struct Constraint {
  std::vector<Term> terms;
  Relation relation = Relation::Equal;
  Rational rhs;
};

/// maximize objective . x  subject to the constraints; each variable is
/// either free or nonnegative.
struct Program {
  std::size_t num_vars = 0;
  std::vector<bool> is_free;
  std::vector<Constraint> constraints;
  std::vector<Rational> objective;

  explicit Program(std::size_t n = 0) : num_vars(n), is_free(n, false), objective(n) {}
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational objective;
  std::vector<Rational> values;
  std::size_t pivots = 0;
};

/// Exact two-phase simplex on a dense rational tableau with Bland's rule.
/// Deterministic for a given constraint order.
Solution solve(const Program& program);

/// Margin-style front end: equalities and inequalities over free or
/// nonnegative variables, maximizing the objective. Throws
/// InconsistentEqualities when infeasible and InternalError when unbounded.
Solution solve_feasibility(const Program& program);

}  // namespace fatsys::lp
