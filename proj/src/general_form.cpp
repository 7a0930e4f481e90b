#include <string>

#include "vlp/error.hpp"
#include "vlp/lp.hpp"

namespace vlp {

std::size_t GeneralProgram::add_variables(std::size_t count, VarKind kind,
                                          const Rational& lower_bound) {
  const std::size_t first = kinds.size();
  kinds.insert(kinds.end(), count, kind);
  lower.insert(lower.end(), count, lower_bound);
  QVector grown(kinds.size());
  for (std::size_t j = 0; j < objective.dim(); ++j) grown[j] = objective[j];
  objective = std::move(grown);
  return first;
}

void GeneralProgram::add_row(QVector coeffs, RowSense sense, Rational rhs) {
  if (coeffs.dim() > num_vars()) {
    throw DimensionError("general row has " + std::to_string(coeffs.dim()) +
                         " coefficients for " + std::to_string(num_vars()) +
                         " variables");
  }
  if (coeffs.dim() < num_vars()) {
    QVector padded(num_vars());
    for (std::size_t j = 0; j < coeffs.dim(); ++j) padded[j] = coeffs[j];
    coeffs = std::move(padded);
  }
  rows.push_back({std::move(coeffs), sense, std::move(rhs)});
}

void GeneralProgram::set_cost(std::size_t j, const Rational& c) {
  if (j >= num_vars()) throw DimensionError("cost index out of range");
  objective[j] = c;
}

void GeneralProgram::check_dimensions() const {
  if (lower.size() != kinds.size() || objective.dim() != kinds.size()) {
    throw DimensionError("general program: inconsistent variable metadata");
  }
  for (const auto& r : rows) {
    if (r.coeffs.dim() != kinds.size()) {
      throw DimensionError("general program: row width differs from "
                           "variable count");
    }
  }
}

QVector BackMap::point(const QVector& standard_x) const {
  QVector x(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto& c = columns[j];
    x[j] = standard_x[c.positive] + c.offset;
    if (c.negative) x[j] -= standard_x[*c.negative];
  }
  return x;
}

QVector BackMap::direction(const QVector& standard_ray) const {
  QVector d(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto& c = columns[j];
    d[j] = standard_ray[c.positive];
    if (c.negative) d[j] -= standard_ray[*c.negative];
  }
  return d;
}

StandardForm to_standard_form(const GeneralProgram& g) {
  g.check_dimensions();
  StandardForm sf;
  auto& map = sf.back_map;

  std::size_t next = 0;
  for (std::size_t j = 0; j < g.num_vars(); ++j) {
    BackMap::Column col{next++, std::nullopt, Rational()};
    if (g.kinds[j] == VarKind::Free) col.negative = next++;
    if (g.kinds[j] == VarKind::LowerBounded) col.offset = g.lower[j];
    map.columns.push_back(col);
  }
  const std::size_t structural = next;
  std::size_t slacks = 0;
  for (const auto& r : g.rows) {
    if (r.sense != RowSense::Equal) ++slacks;
  }
  const std::size_t total = structural + slacks;

  LinearProgram& lp = sf.lp;
  lp.objective = QVector(total);
  lp.eq_matrix = QMatrix(g.rows.size(), total);
  lp.eq_rhs = QVector(g.rows.size());

  for (std::size_t j = 0; j < g.num_vars(); ++j) {
    const auto& col = map.columns[j];
    lp.objective[col.positive] = g.objective[j];
    if (col.negative) lp.objective[*col.negative] = -g.objective[j];
    map.objective_offset += g.objective[j] * col.offset;
  }

  std::size_t slack = structural;
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    const auto& r = g.rows[i];
    Rational rhs = r.rhs;
    for (std::size_t j = 0; j < g.num_vars(); ++j) {
      const Rational& a = r.coeffs[j];
      if (a.is_zero()) continue;
      const auto& col = map.columns[j];
      lp.eq_matrix(i, col.positive) = a;
      if (col.negative) lp.eq_matrix(i, *col.negative) = -a;
      if (!col.offset.is_zero()) rhs -= a * col.offset;
    }
    if (r.sense == RowSense::LessEqual) lp.eq_matrix(i, slack++) = 1;
    if (r.sense == RowSense::GreaterEqual) lp.eq_matrix(i, slack++) = -1;
    lp.eq_rhs[i] = std::move(rhs);
  }
  return sf;
}

GeneralOutcome solve_general(const GeneralProgram& g) {
  const StandardForm sf = to_standard_form(g);
  LpOutcome out = solve_lp(sf.lp);
  if (auto* opt = std::get_if<LpOptimal>(&out)) {
    return GeneralOptimal{sf.back_map.point(opt->x), std::move(opt->y),
                          opt->value + sf.back_map.objective_offset};
  }
  if (auto* inf = std::get_if<LpInfeasible>(&out)) {
    return GeneralInfeasible{std::move(inf->farkas)};
  }
  const auto& unb = std::get<LpUnbounded>(out);
  return GeneralUnbounded{sf.back_map.point(unb.x0),
                          sf.back_map.direction(unb.ray)};
}

std::optional<QVector> find_feasible_point(GeneralProgram g) {
  g.objective = QVector(g.num_vars());
  auto out = solve_general(g);
  if (auto* opt = std::get_if<GeneralOptimal>(&out)) return std::move(opt->x);
  return std::nullopt;
}

bool satisfies(const GeneralProgram& g, const QVector& x) {
  if (x.dim() != g.num_vars()) return false;
  for (std::size_t j = 0; j < g.num_vars(); ++j) {
    if (g.kinds[j] == VarKind::NonNegative && x[j].sign() < 0) return false;
    if (g.kinds[j] == VarKind::LowerBounded && x[j] < g.lower[j]) return false;
  }
  for (const auto& r : g.rows) {
    const Rational lhs = dot(r.coeffs, x);
    switch (r.sense) {
      case RowSense::LessEqual:
        if (lhs > r.rhs) return false;
        break;
      case RowSense::GreaterEqual:
        if (lhs < r.rhs) return false;
        break;
      case RowSense::Equal:
        if (lhs != r.rhs) return false;
        break;
    }
  }
  return true;
}

FeasibilityResult solve_feasibility(const QMatrix& a, const QVector& b,
                                    const std::vector<LowerBoundRow>& extra) {
  if (a.rows() != b.dim()) {
    throw DimensionError("solve_feasibility: A has " + std::to_string(a.rows()) +
                         " rows, b has dim " + std::to_string(b.dim()));
  }
  const std::size_t n = a.cols();
  for (const auto& e : extra) {
    if (e.row.dim() != n) {
      throw DimensionError("solve_feasibility: extra row has dim " +
                           std::to_string(e.row.dim()) + ", expected " +
                           std::to_string(n));
    }
  }
  const std::size_t m = a.rows();
  LinearProgram lp;
  lp.objective = QVector(n + extra.size());
  lp.eq_matrix = QMatrix(m + extra.size(), n + extra.size());
  lp.eq_rhs = QVector(m + extra.size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) lp.eq_matrix(i, j) = a(i, j);
    lp.eq_rhs[i] = b[i];
  }
  for (std::size_t e = 0; e < extra.size(); ++e) {
    for (std::size_t j = 0; j < n; ++j) lp.eq_matrix(m + e, j) = extra[e].row[j];
    lp.eq_matrix(m + e, n + e) = -1;
    lp.eq_rhs[m + e] = extra[e].bound;
  }
  auto out = solve_lp(lp);
  if (auto* opt = std::get_if<LpOptimal>(&out)) return slice(opt->x, 0, n);
  if (auto* inf = std::get_if<LpInfeasible>(&out)) return std::move(*inf);
  throw InternalError("solve_feasibility: zero objective reported unbounded");
}

}  // namespace vlp
