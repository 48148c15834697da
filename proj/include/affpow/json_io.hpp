#pragma once

#include <affpow/classic.hpp>
#include <affpow/decompose.hpp>
#include <affpow/instances.hpp>
#include <affpow/multi.hpp>
#include <affpow/sde.hpp>

#include <json.hpp>

// JSON forms of the library types. Rationals are strings "p" or "p/q";
// readers also accept JSON integers. Readers throw ParseError.
namespace affpow::json {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const UniPoly& f);
UniPoly unipoly_from_json(const json& j);

json to_json(const Decomposition& d);
/// Accepts {"terms": [...]} or an object holding it under "decomposition"
/// or "truth".
Decomposition decomposition_from_json(const json& j);

json to_json(const SDE& s);
SDE sde_from_json(const json& j);

json to_json(const MultiPoly& f);
MultiPoly multipoly_from_json(const json& j);

json to_json(const MultiDecomposition& d);
MultiDecomposition multidecomposition_from_json(const json& j);

json to_json(const WaringResult& r);
json to_json(const SparsestResult& r);
json to_json(const IterationStats& s);

}  // namespace affpow::json
