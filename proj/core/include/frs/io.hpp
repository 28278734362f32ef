#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "frs/extension.hpp"
#include "frs/foset.hpp"
#include "frs/graded_space.hpp"
#include "frs/ideals.hpp"
#include "frs/operators.hpp"
#include "frs/quotient.hpp"
#include "frs/seqmodel.hpp"

namespace frs {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings everywhere; the round trip is bit-exact.
// Ideal coordinates are 1-based on the wire.

Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json to_json(const FuzzyOrderMatrix& m);
FuzzyOrderMatrix foset_from_json(const Json& j);

Json to_json(const GradedSpace& s);
GradedSpace space_from_json(const Json& j);

Json to_json(const CoordinateIdeal& ideal);
CoordinateIdeal ideal_from_json(const Json& j, const GradedSpace& ambient);

Json to_json(const SubspaceSpec& spec);
SubspaceSpec subspace_from_json(const Json& j, const GradedSpace& ambient);

Json to_json(const RationalOperator& op);
RationalOperator operator_from_json(const Json& j);

Json to_json(const GeomSequence& seq);
GeomSequence sequence_from_json(const Json& j);

Json to_json(const SeqTerm& term);
SeqTerm seqterm_from_json(const Json& j);

Json to_json(const QuotientSpace& q);
QuotientSpace quotient_from_json(const Json& j);

struct ThetaInstance {
  GradedSpace space;
  std::vector<Vec> basis;
  RationalOperator op;
  Vec x;
};
ThetaInstance theta_instance_from_json(const Json& j);

struct FactorizationInstance {
  RationalOperator q;
  RationalOperator s;
  RationalOperator t;
};
FactorizationInstance factorization_from_json(const Json& j);

/// Parses a file as JSON; parse failures and missing files become InputError.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace frs
