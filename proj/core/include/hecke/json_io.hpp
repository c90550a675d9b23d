#pragma once

#include <json.hpp>

#include "hecke/character.hpp"
#include "hecke/decomp.hpp"
#include "hecke/rep.hpp"

namespace hecke {

using nlohmann::json;

// Field descriptor: {"p":5,"k":2,"modulus":[2,0,1]} (coefficients low-to-high)
json field_to_json(const Field& f);
Field field_from_json(const json& j);

// Field element: coordinate list, low degree first, e.g. [3]
json elem_to_json(const FieldElem& e);
FieldElem elem_from_json(const Field& f, const json& j);

// Valued unit: {"v":-1,"u":[3]}
json vunit_to_json(const VUnit& v);
VUnit vunit_from_json(const Field& f, const json& j);

// Character: {"e":1,"y":[{"v":1,"u":[2]},{"v":0,"u":[2]},{"v":-1,"u":[2]}]}
json character_to_json(const Character& chi);
Character character_from_json(const Field& f, const json& j);

// Matrix: row-major, entries as coordinate lists
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j);

// Rep: {"field":{...},"dim":n,"t":[...],"s1":[...]}
json rep_to_json(const Rep& r);
Rep rep_from_json(const json& j);

// Label: {"kind":"K6","params":[[2],[1],[3]]}
json label_to_json(const SimpleLabel& l);
SimpleLabel label_from_json(const Field& f, const json& j);

json central_params_to_json(const CentralParams& cp);
json prediction_to_json(const Prediction& p);
json classification_to_json(const Classification& c);
json report_to_json(const DecompReport& r);

}  // namespace hecke
