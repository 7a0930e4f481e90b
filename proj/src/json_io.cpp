#include "vlp/json_io.hpp"

#include "vlp/error.hpp"

namespace vlp {
namespace {

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

std::size_t positive_count(const Json& j, const char* key,
                           const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + "." + key, "missing field");
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ParseError(where + "." + key, "expected a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const QVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json to_json(const QMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

Json to_json(const OrderingCone& k) {
  Json j;
  if (k.is_orthant()) {
    j["orthant"] = k.dim();
    return j;
  }
  j["dim"] = k.dim();
  Json gens = Json::array();
  for (const auto& g : k.generators()) gens.push_back(to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

Json to_json(const VlpProblem& p) {
  Json j;
  j["n"] = p.n();
  j["m"] = p.m();
  j["k"] = p.k();
  j["L"] = to_json(p.L());
  j["A"] = to_json(p.A());
  j["b"] = to_json(p.b());
  j["cone"] = to_json(p.K());
  return j;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return Rational::parse(std::to_string(j.get<long long>()));
  }
  if (!j.is_string()) {
    throw ParseError(where, "expected a rational string \"p/q\" or \"p\"");
  }
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where, e.what());
  } catch (const ArithmeticError& e) {
    throw ParseError(where, e.what());
  }
}

QVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  QVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[i] = rational_from_json(j[i], at(where, i));
  }
  return v;
}

QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                         const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of rows");
  if (j.size() != rows) {
    throw DimensionError(where + ": expected " + std::to_string(rows) +
                         " rows, got " + std::to_string(j.size()));
  }
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    QVector row = vector_from_json(j[r], at(where, r));
    if (row.dim() != cols) {
      throw DimensionError(at(where, r) + ": expected " +
                           std::to_string(cols) + " entries, got " +
                           std::to_string(row.dim()));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

OrderingCone cone_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  if (j.contains("orthant")) {
    return OrderingCone::orthant(positive_count(j, "orthant", where));
  }
  const std::size_t dim = positive_count(j, "dim", where);
  if (!j.contains("generators") || !j.at("generators").is_array()) {
    throw ParseError(where + ".generators", "expected an array of vectors");
  }
  const auto& gj = j.at("generators");
  if (gj.empty()) throw ParseError(where + ".generators", "empty list");
  std::vector<QVector> gens;
  for (std::size_t i = 0; i < gj.size(); ++i) {
    QVector g = vector_from_json(gj[i], at(where + ".generators", i));
    if (g.dim() != dim) {
      throw DimensionError(at(where + ".generators", i) + ": expected " +
                           std::to_string(dim) + " entries");
    }
    gens.push_back(std::move(g));
  }
  return OrderingCone(dim, std::move(gens));
}

Json to_json(const DualCandidateD& c) {
  Json j;
  j["kind"] = "D";
  j["lambda"] = to_json(c.lambda);
  j["U"] = to_json(c.U);
  j["v"] = to_json(c.v);
  return j;
}

Json to_json(const DualCandidateJ& c) {
  Json j;
  j["kind"] = "J";
  j["lambda"] = to_json(c.lambda);
  j["U"] = to_json(c.U);
  return j;
}

Json to_json(const DualCandidateL& c) {
  Json j;
  j["kind"] = "L";
  j["lambda"] = to_json(c.lambda);
  j["z"] = to_json(c.z);
  j["v"] = to_json(c.v);
  return j;
}

Json to_json(const DualCandidateU& c) {
  Json j;
  j["kind"] = c.flavor == UFlavor::Isermann ? "I" : "H";
  j["U"] = to_json(c.U);
  return j;
}

AnyDualCandidate dual_from_json(const Json& j, const VlpProblem& p,
                                const std::string& kind) {
  if (!j.is_object()) throw ParseError("dual", "expected an object");
  std::string tag = kind;
  if (tag.empty()) {
    if (!j.contains("kind") || !j.at("kind").is_string()) {
      throw ParseError("dual.kind", "missing kind");
    }
    tag = j.at("kind").get<std::string>();
  }
  auto field = [&](const char* key) -> const Json& {
    if (!j.contains(key)) throw ParseError(std::string("dual.") + key,
                                           "missing field");
    return j.at(key);
  };
  auto vec = [&](const char* key, std::size_t dim) {
    QVector v = vector_from_json(field(key), std::string("dual.") + key);
    if (v.dim() != dim) {
      throw DimensionError(std::string("dual.") + key + ": expected " +
                           std::to_string(dim) + " entries");
    }
    return v;
  };
  auto mat = [&](const char* key) {
    return matrix_from_json(field(key), p.k(), p.m(), std::string("dual.") + key);
  };
  if (tag == "D") return DualCandidateD{vec("lambda", p.k()), mat("U"), vec("v", p.k())};
  if (tag == "J") return DualCandidateJ{vec("lambda", p.k()), mat("U")};
  if (tag == "L") {
    return DualCandidateL{vec("lambda", p.k()), vec("z", p.m()), vec("v", p.k())};
  }
  if (tag == "I") return DualCandidateU{mat("U"), UFlavor::Isermann};
  if (tag == "H") return DualCandidateU{mat("U"), UFlavor::H};
  throw ParseError("dual.kind", "unknown kind \"" + tag + "\"");
}

}  // namespace vlp
