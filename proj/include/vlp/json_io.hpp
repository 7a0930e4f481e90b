#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "vlp/cone.hpp"
#include "vlp/linalg.hpp"
#include "vlp/model.hpp"

namespace vlp {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" or "p" strings. Plain JSON integers are also
// accepted on input; floats never are.
Json to_json(const Rational& r);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);
Json to_json(const OrderingCone& k);
Json to_json(const VlpProblem& p);

// `where` prefixes error messages, e.g. "L[1][0]".
Rational rational_from_json(const Json& j, const std::string& where);
QVector vector_from_json(const Json& j, const std::string& where);
// Expects `rows` rows of `cols` entries each.
QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                         const std::string& where);
// {"orthant": k} or {"dim": k, "generators": [[...], ...]}; not validated.
OrderingCone cone_from_json(const Json& j, const std::string& where);

using AnyDualCandidate =
    std::variant<DualCandidateD, DualCandidateJ, DualCandidateL,
                 DualCandidateU>;

// {"kind": "D"|"J"|"L"|"I"|"H", ...fields}, rationals as strings.
Json to_json(const DualCandidateD& c);
Json to_json(const DualCandidateJ& c);
Json to_json(const DualCandidateL& c);
Json to_json(const DualCandidateU& c);
// Reads a candidate for problem p; `kind` overrides the file's "kind" when
// nonempty.
AnyDualCandidate dual_from_json(const Json& j, const VlpProblem& p,
                                const std::string& kind);

}  // namespace vlp
