#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vlp/linalg.hpp"

namespace vlp {

// min c^T x  s.t.  A x = b,  x >= 0.
struct LinearProgram {
  QVector objective;
  QMatrix eq_matrix;
  QVector eq_rhs;

  std::size_t num_vars() const { return objective.dim(); }
  std::size_t num_rows() const { return eq_rhs.dim(); }

  // Throws DimensionError unless A.cols = c.dim and A.rows = b.dim.
  void check_dimensions() const;
};

// A x = b, x >= 0, c - A^T y >= 0 and c^T x = b^T y.
struct LpOptimal {
  QVector x;
  QVector y;
  Rational value;
};

// A^T farkas <= 0 and b^T farkas > 0.
struct LpInfeasible {
  QVector farkas;
};

// A x0 = b, x0 >= 0, A ray = 0, ray >= 0, c^T ray < 0.
struct LpUnbounded {
  QVector x0;
  QVector ray;
};

using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

// Two-phase primal simplex over the rationals with Bland's rule throughout.
// Deterministic for a fixed input.
LpOutcome solve_lp(const LinearProgram& p);

// Checks an outcome against its certificate system by direct substitution.
// Shares no code with the solver. Returns an empty string when valid, the
// first violated condition otherwise.
std::string verify_outcome(const LinearProgram& p, const LpOutcome& outcome);

// ---------------------------------------------------------------------------
// General-form programs: free, nonnegative or lower-bounded variables and
// <=, >=, = rows. Reduced to LinearProgram by to_standard_form.

enum class VarKind { NonNegative, Free, LowerBounded };
enum class RowSense { LessEqual, GreaterEqual, Equal };

struct GeneralRow {
  QVector coeffs;
  RowSense sense = RowSense::Equal;
  Rational rhs;
};

struct GeneralProgram {
  std::vector<VarKind> kinds;
  std::vector<Rational> lower;  // read only for LowerBounded variables
  QVector objective;            // minimized; zero vector for feasibility
  std::vector<GeneralRow> rows;

  std::size_t num_vars() const { return kinds.size(); }

  // Appends `count` variables and returns the index of the first.
  std::size_t add_variables(std::size_t count, VarKind kind,
                            const Rational& lower_bound = Rational());
  // Appends a row; coefficients may be shorter than num_vars() (zero
  // padded at the end).
  void add_row(QVector coeffs, RowSense sense, Rational rhs);
  // Sets objective coefficient of variable j.
  void set_cost(std::size_t j, const Rational& c);

  void check_dimensions() const;
};

// Recovers general-form values from standard-form values.
struct BackMap {
  struct Column {
    std::size_t positive;
    std::optional<std::size_t> negative;  // set for free variables
    Rational offset;                      // lower bound shift
  };
  std::vector<Column> columns;
  Rational objective_offset;

  // x = x+ - x- + offset.
  QVector point(const QVector& standard_x) const;
  // Directions ignore offsets.
  QVector direction(const QVector& standard_ray) const;
};

struct StandardForm {
  LinearProgram lp;
  BackMap back_map;
};

// Free variables split as x+ - x-, lower bounds shifted out, one slack per
// inequality row (+s for <=, -s for >=). Rows keep their order.
StandardForm to_standard_form(const GeneralProgram& g);

struct GeneralOptimal {
  QVector x;
  QVector y;  // one multiplier per general row
  Rational value;
};
struct GeneralInfeasible {
  QVector farkas;  // over the standard-form rows, which match general rows
};
struct GeneralUnbounded {
  QVector x0;
  QVector ray;
};
using GeneralOutcome =
    std::variant<GeneralOptimal, GeneralInfeasible, GeneralUnbounded>;

GeneralOutcome solve_general(const GeneralProgram& g);

// A point satisfying every row of g exactly, or nullopt.
std::optional<QVector> find_feasible_point(GeneralProgram g);

// True when x satisfies the variable bounds and rows of g exactly.
bool satisfies(const GeneralProgram& g, const QVector& x);

struct LowerBoundRow {
  QVector row;
  Rational bound;
};

using FeasibilityResult = std::variant<QVector, LpInfeasible>;

// {x >= 0 : A x = b, row_i^T x >= bound_i}. On infeasibility the certificate
// refers to the standardized system (equality rows first, then one row per
// extra bound with its surplus column).
FeasibilityResult solve_feasibility(const QMatrix& a, const QVector& b,
                                    const std::vector<LowerBoundRow>& extra);

}  // namespace vlp
