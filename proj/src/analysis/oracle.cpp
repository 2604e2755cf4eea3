#include "segdesc/analysis/oracle.hpp"

#include "segdesc/core/canonicalize.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace segdesc::analysis {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

struct Polyhedron {
  Matrix a;                 // rows a_i
  std::vector<Rational> b;  // a_i . x <= b_i
  std::size_t columns = 0;
};

Polyhedron build(std::span<const core::LabeledInequality> ineqs, std::size_t variable_count) {
  if (variable_count > kOracleMaxVariables)
    throw OracleLimitError("oracle supports at most " + std::to_string(kOracleMaxVariables) + " variables");
  Polyhedron p;
  p.columns = variable_count;
  for (const auto& ineq : ineqs) {
    std::vector<Rational> row(variable_count);
    for (const auto& [v, c] : ineq.body.terms()) {
      if (v.value >= variable_count) throw OracleLimitError("variable index beyond the declared count");
      row[v.value] = c;
    }
    p.a.push_back(std::move(row));
    p.b.push_back(-ineq.body.constant());
  }
  return p;
}

// Row-reduces a copy; returns the pivot columns.
std::vector<std::size_t> pivots(Matrix m) {
  std::vector<std::size_t> cols;
  std::size_t row = 0;
  const std::size_t width = m.empty() ? 0 : m.front().size();
  for (std::size_t col = 0; col < width && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col].is_zero()) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < width; ++c) m[r][c] -= f * m[row][c];
    }
    cols.push_back(col);
    ++row;
  }
  return cols;
}

// Solves the square system by Gauss-Jordan; nullopt when singular.
std::optional<std::vector<Rational>> solve(Matrix m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && m[pick][col].is_zero()) ++pick;
    if (pick == n) return std::nullopt;
    std::swap(m[col], m[pick]);
    std::swap(rhs[col], rhs[pick]);
    const Rational inv = m[col][col].reciprocal();
    for (std::size_t c = col; c < n; ++c) m[col][c] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

bool satisfies(const Polyhedron& p, const std::vector<Rational>& x) {
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    Rational lhs;
    for (std::size_t j = 0; j < p.columns; ++j)
      if (!p.a[i][j].is_zero()) lhs += p.a[i][j] * x[j];
    if (lhs > p.b[i]) return false;
  }
  return true;
}

Matrix select_rows(const Polyhedron& p, const std::vector<std::size_t>& rows) {
  Matrix out;
  for (auto i : rows) out.push_back(p.a[i]);
  return out;
}

// Visits candidate points: for each independent row subset of size rank,
// the solution with non-pivot columns at zero. Stops when visit returns true.
void for_each_basic_point(const Polyhedron& p, const std::function<bool(std::vector<Rational>)>& visit) {
  const auto all_pivots = pivots(p.a);
  const std::size_t rank = all_pivots.size();
  if (rank == 0) {
    visit(std::vector<Rational>(p.columns));
    return;
  }
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> recurse = [&](std::size_t from) -> bool {
    if (chosen.size() == rank) {
      const auto cols = pivots(select_rows(p, chosen));
      if (cols.size() != rank) return false;
      Matrix square(rank, std::vector<Rational>(rank));
      std::vector<Rational> rhs(rank);
      for (std::size_t r = 0; r < rank; ++r) {
        for (std::size_t c = 0; c < rank; ++c) square[r][c] = p.a[chosen[r]][cols[c]];
        rhs[r] = p.b[chosen[r]];
      }
      auto y = solve(std::move(square), std::move(rhs));
      if (!y) return false;
      std::vector<Rational> x(p.columns);
      for (std::size_t c = 0; c < rank; ++c) x[cols[c]] = (*y)[c];
      return visit(std::move(x));
    }
    for (std::size_t i = from; i + (rank - chosen.size()) <= p.a.size(); ++i) {
      chosen.push_back(i);
      if (pivots(select_rows(p, chosen)).size() == chosen.size() && recurse(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  recurse(0);
}

} // namespace

bool oracle_feasible(std::span<const core::LabeledInequality> ineqs, std::size_t variable_count) {
  const Polyhedron p = build(ineqs, variable_count);
  bool found = false;
  for_each_basic_point(p, [&](std::vector<Rational> x) {
    found = satisfies(p, x);
    return found;
  });
  return found;
}

bool oracle_feasible(std::span<const core::RawRelation> relations, const Rational& epsilon,
                     std::size_t variable_count) {
  const auto canonical = core::canonicalize(relations, epsilon);
  return oracle_feasible(canonical, variable_count);
}

std::vector<std::vector<Rational>> oracle_vertices(std::span<const core::LabeledInequality> ineqs,
                                                   std::size_t variable_count) {
  const Polyhedron p = build(ineqs, variable_count);
  if (pivots(p.a).size() != variable_count) return {};
  std::vector<std::vector<Rational>> out;
  for_each_basic_point(p, [&](std::vector<Rational> x) {
    if (satisfies(p, x) && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
    return false;
  });
  return out;
}

} // namespace segdesc::analysis
