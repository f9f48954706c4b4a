#include "fatsys/lp.hpp"

#include "fatsys/errors.hpp"

#include <limits>

namespace fatsys::lp {

namespace {

class Tableau {
 public:
  std::vector<std::vector<Rational>> rows;  // last column is the rhs
  std::vector<int> basis;
  std::vector<char> allowed;  // column may enter the basis
  std::size_t pivots = 0;

  std::size_t cols() const { return allowed.size(); }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots;
    auto& prow = rows[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols(); ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j : nz) rows[i][j] -= f * prow[j];
    }
    if (!reduced.empty() && sgn(reduced[c]) != 0) {
      const Rational f = reduced[c];
      for (std::size_t j : nz) reduced[j] -= f * prow[j];
    }
    basis[r] = static_cast<int>(c);
  }

  // Reduced costs of `cost` (maximize) w.r.t. the current basis; the rhs
  // slot holds minus the objective value.
  void price(const std::vector<Rational>& cost) {
    reduced.assign(cols() + 1, Rational(0));
    for (std::size_t j = 0; j < cols(); ++j) reduced[j] = cost[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols(); ++j) {
        if (sgn(rows[i][j]) != 0) reduced[j] -= cb * rows[i][j];
      }
    }
  }

  // Bland's rule; returns false when unbounded.
  bool optimize() {
    for (;;) {
      std::size_t enter = cols();
      for (std::size_t j = 0; j < cols(); ++j) {
        if (allowed[j] && sgn(reduced[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols()) return true;

      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (sgn(rows[i][enter]) <= 0) continue;
        Rational ratio = rows[i].back() / rows[i][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }

  Rational objective_value() const { return -reduced.back(); }

  std::vector<Rational> reduced;
};

}  // namespace

Solution solve(const Program& program) {
  const std::size_t n = program.num_vars;
  if (program.is_free.size() != n || program.objective.size() != n) {
    throw InternalError("program vectors do not match num_vars");
  }

  // Column layout: x+ for every variable, x- for free ones, then slack /
  // surplus columns, then artificials.
  std::vector<std::size_t> pos_col(n), neg_col(n, std::numeric_limits<std::size_t>::max());
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n; ++j) pos_col[j] = ncols++;
  for (std::size_t j = 0; j < n; ++j) {
    if (program.is_free[j]) neg_col[j] = ncols++;
  }

  struct Row {
    std::vector<std::pair<std::size_t, Rational>> entries;
    Relation rel;
    Rational rhs;
  };
  std::vector<Row> rows;
  rows.reserve(program.constraints.size());
  for (const auto& con : program.constraints) {
    Row row{{}, con.relation, con.rhs};
    for (const auto& t : con.terms) {
      if (t.var < 0 || static_cast<std::size_t>(t.var) >= n) throw InternalError("constraint references bad variable");
      row.entries.emplace_back(pos_col[t.var], t.coef);
      if (program.is_free[t.var]) row.entries.emplace_back(neg_col[t.var], -t.coef);
    }
    if (sgn(row.rhs) < 0) {
      row.rhs = -row.rhs;
      for (auto& [c, v] : row.entries) v = -v;
      if (row.rel == Relation::GreaterEqual) {
        row.rel = Relation::LessEqual;
      } else if (row.rel == Relation::LessEqual) {
        row.rel = Relation::GreaterEqual;
      }
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> slack_col(rows.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rel != Relation::Equal) slack_col[i] = ncols++;
  }
  const std::size_t first_artificial = ncols;
  std::vector<std::size_t> art_col(rows.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rel != Relation::LessEqual) art_col[i] = ncols++;
  }

  Tableau tab;
  tab.allowed.assign(ncols, 1);
  tab.rows.assign(rows.size(), std::vector<Rational>(ncols + 1));
  tab.basis.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& tr = tab.rows[i];
    for (const auto& [c, v] : rows[i].entries) tr[c] += v;
    tr[ncols] = rows[i].rhs;
    if (rows[i].rel == Relation::LessEqual) {
      tr[slack_col[i]] = 1;
      tab.basis[i] = static_cast<int>(slack_col[i]);
    } else {
      if (rows[i].rel == Relation::GreaterEqual) tr[slack_col[i]] = -1;
      tr[art_col[i]] = 1;
      tab.basis[i] = static_cast<int>(art_col[i]);
    }
  }

  Solution sol;
  // Phase 1: maximize -sum(artificials).
  if (first_artificial < ncols) {
    std::vector<Rational> phase1(ncols);
    for (std::size_t c = first_artificial; c < ncols; ++c) phase1[c] = -1;
    tab.price(phase1);
    tab.optimize();
    if (sgn(tab.objective_value()) < 0) {
      sol.status = Status::Infeasible;
      sol.pivots = tab.pivots;
      return sol;
    }
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.rows.size();) {
      if (static_cast<std::size_t>(tab.basis[i]) < first_artificial) {
        ++i;
        continue;
      }
      std::size_t c = 0;
      while (c < first_artificial && sgn(tab.rows[i][c]) == 0) ++c;
      if (c < first_artificial) {
        tab.pivot(i, c);
        ++i;
      } else {
        tab.rows.erase(tab.rows.begin() + static_cast<std::ptrdiff_t>(i));
        tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (std::size_t c = first_artificial; c < ncols; ++c) tab.allowed[c] = 0;
  }

  std::vector<Rational> cost(ncols);
  for (std::size_t j = 0; j < n; ++j) {
    cost[pos_col[j]] = program.objective[j];
    if (program.is_free[j]) cost[neg_col[j]] = -program.objective[j];
  }
  tab.price(cost);
  const bool bounded = tab.optimize();
  sol.pivots = tab.pivots;
  if (!bounded) {
    sol.status = Status::Unbounded;
    return sol;
  }

  std::vector<Rational> colval(ncols);
  for (std::size_t i = 0; i < tab.rows.size(); ++i) colval[tab.basis[i]] = tab.rows[i][ncols];
  sol.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    sol.values[j] = colval[pos_col[j]];
    if (program.is_free[j]) sol.values[j] -= colval[neg_col[j]];
  }
  sol.objective = 0;
  for (std::size_t j = 0; j < n; ++j) sol.objective += program.objective[j] * sol.values[j];
  sol.status = Status::Optimal;
  return sol;
}

Solution solve_feasibility(const Program& program) {
  auto sol = solve(program);
  if (sol.status == Status::Infeasible) throw InconsistentEqualities();
  if (sol.status == Status::Unbounded) throw InternalError("margin program is unbounded");
  return sol;
}

}  // namespace fatsys::lp
