#include "vlp/model.hpp"

#include <string>

#include "vlp/error.hpp"
#include "vlp/json_io.hpp"

namespace vlp {
namespace {

std::string shape(const QMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

VlpProblem::VlpProblem(QMatrix objective, QMatrix constraints, QVector rhs,
                       OrderingCone cone)
    : objective_(std::move(objective)),
      constraints_(std::move(constraints)),
      rhs_(std::move(rhs)),
      cone_(std::move(cone)) {
  if (constraints_.cols() != objective_.cols()) {
    throw DimensionError("A is " + shape(constraints_) + " but L is " +
                         shape(objective_) + "; column counts must agree");
  }
  if (rhs_.dim() != constraints_.rows()) {
    throw DimensionError("b has dim " + std::to_string(rhs_.dim()) +
                         " but A has " + std::to_string(constraints_.rows()) +
                         " rows");
  }
  if (cone_.dim() != objective_.rows()) {
    throw DimensionError("cone has dim " + std::to_string(cone_.dim()) +
                         " but L has " + std::to_string(objective_.rows()) +
                         " rows");
  }
  if (!cone_.is_validated()) cone_ = validate_cone(cone_);
}

VlpProblem load_problem(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("json", e.what());
  }
  if (!j.is_object()) throw ParseError("", "problem must be a JSON object");

  auto count = [&](const char* key) -> std::size_t {
    if (!j.contains(key)) throw ParseError(key, "missing field");
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
      throw ParseError(key, "expected a positive integer");
    }
    return v.get<std::size_t>();
  };
  const std::size_t n = count("n");
  const std::size_t m = count("m");
  const std::size_t k = count("k");
  for (const char* key : {"L", "A", "b", "cone"}) {
    if (!j.contains(key)) throw ParseError(key, "missing field");
  }
  QMatrix L = matrix_from_json(j.at("L"), k, n, "L");
  QMatrix A = matrix_from_json(j.at("A"), m, n, "A");
  QVector b = vector_from_json(j.at("b"), "b");
  if (b.dim() != m) {
    throw DimensionError("b: expected " + std::to_string(m) +
                         " entries, got " + std::to_string(b.dim()));
  }
  OrderingCone cone = cone_from_json(j.at("cone"), "cone");
  if (cone.dim() != k) {
    throw DimensionError("cone: dimension " + std::to_string(cone.dim()) +
                         " differs from k = " + std::to_string(k));
  }
  return VlpProblem(std::move(L), std::move(A), std::move(b), std::move(cone));
}

std::string serialize_problem(const VlpProblem& p) {
  return to_json(p).dump();
}

QVector objective_D(const DualCandidateD& c, const VlpProblem& p) {
  if (c.v.dim() != p.k()) throw DimensionError("objective_D: v has wrong dim");
  return c.U * p.b() + c.v;
}

QVector objective_J(const DualCandidateJ& c, const VlpProblem& p) {
  if (c.U.rows() != p.k()) throw DimensionError("objective_J: U has wrong rows");
  return c.U * p.b();
}

QVector objective_L(const DualCandidateL& c) { return c.v; }

QMatrix reduced_objective(const VlpProblem& p, const QMatrix& U) {
  if (U.rows() != p.k() || U.cols() != p.m()) {
    throw DimensionError("U must be " + std::to_string(p.k()) + "x" +
                         std::to_string(p.m()) + ", got " + shape(U));
  }
  return p.L() - U * p.A();
}

bool primal_feasible(const VlpProblem& p, const QVector& x) {
  if (x.dim() != p.n()) {
    throw DimensionError("primal_feasible: x has dim " +
                         std::to_string(x.dim()) + ", expected " +
                         std::to_string(p.n()));
  }
  return x.is_nonnegative() && p.A() * x == p.b();
}

}  // namespace vlp
