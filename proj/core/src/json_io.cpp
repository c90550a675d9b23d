#include "hecke/json_io.hpp"

namespace hecke {

json field_to_json(const Field& f) {
  return json{{"p", f.p()}, {"k", f.degree()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("k") ||
      !j.contains("modulus"))
    throw Error("field descriptor needs p, k and modulus");
  return Field(j.at("p").get<long>(), j.at("k").get<int>(),
               j.at("modulus").get<std::vector<long>>());
}

json elem_to_json(const FieldElem& e) { return json(e.coeffs()); }

FieldElem elem_from_json(const Field& f, const json& j) {
  if (!j.is_array())
    throw Error("field element must be a coordinate list");
  return f.from_coeffs(j.get<std::vector<long>>());
}

json vunit_to_json(const VUnit& v) {
  return json{{"v", v.val()}, {"u", elem_to_json(v.unit())}};
}

VUnit vunit_from_json(const Field& f, const json& j) {
  if (!j.is_object() || !j.contains("v") || !j.contains("u"))
    throw Error("valued unit needs v and u");
  return VUnit(j.at("v").get<int>(), elem_from_json(f, j.at("u")));
}

json character_to_json(const Character& chi) {
  return json{{"e", chi.cfg.e},
              {"y", json::array({vunit_to_json(chi.y1()), vunit_to_json(chi.y2()),
                                 vunit_to_json(chi.y3())})}};
}

Character character_from_json(const Field& f, const json& j) {
  if (!j.is_object() || !j.contains("e") || !j.contains("y") ||
      !j.at("y").is_array() || j.at("y").size() != 3)
    throw Error("character needs e and a triple y");
  PConfig cfg(f, j.at("e").get<int>());
  return Character(cfg, vunit_from_json(f, j.at("y")[0]),
                   vunit_from_json(f, j.at("y")[1]),
                   vunit_from_json(f, j.at("y")[2]));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.empty()) throw Error("matrix must be a row list");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw Error("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.set(i, c, elem_from_json(f, j[i][c]));
  }
  return m;
}

json rep_to_json(const Rep& r) {
  return json{{"field", field_to_json(r.field())},
              {"dim", r.dim()},
              {"t", matrix_to_json(r.t())},
              {"s1", matrix_to_json(r.s1())}};
}

Rep rep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("t") ||
      !j.contains("s1"))
    throw Error("rep needs field, t and s1");
  Field f = field_from_json(j.at("field"));
  return Rep(matrix_from_json(f, j.at("t")), matrix_from_json(f, j.at("s1")));
}

json label_to_json(const SimpleLabel& l) {
  json params = json::array();
  for (const auto& p : l.params) params.push_back(elem_to_json(p));
  return json{{"kind", kind_name(l.kind)}, {"params", std::move(params)}};
}

SimpleLabel label_from_json(const Field& f, const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("params"))
    throw Error("label needs kind and params");
  Kind k = kind_from_name(j.at("kind").get<std::string>());
  std::vector<FieldElem> params;
  for (const auto& p : j.at("params")) params.push_back(elem_from_json(f, p));
  return SimpleLabel(k, std::move(params));
}

json central_params_to_json(const CentralParams& cp) {
  return json{{"z", elem_to_json(cp.z)},
              {"y", elem_to_json(cp.y)},
              {"yp", elem_to_json(cp.yp)}};
}

json prediction_to_json(const Prediction& p) {
  json factors = json::array();
  for (const auto& l : p.factors) factors.push_back(label_to_json(l));
  json out{{"factors", std::move(factors)},
           {"structure", structure_name(p.structure)}};
  if (p.submodule) out["submodule"] = label_to_json(*p.submodule);
  if (p.quotient) out["quotient"] = label_to_json(*p.quotient);
  return out;
}

json classification_to_json(const Classification& c) {
  return json{{"case", c.label.number},
              {"structure", structure_name(c.label.structure())},
              {"w", s3_name(c.w)},
              {"representative", character_to_json(c.representative)}};
}

json report_to_json(const DecompReport& r) {
  json series = json::array();
  for (const auto& l : r.series) series.push_back(label_to_json(l));
  json factors = json::array();
  for (const auto& [l, mult] : r.factors)
    factors.push_back(json{{"label", label_to_json(l)}, {"multiplicity", mult}});
  json lattice = json::object();
  for (const auto& [dim, count] : r.lattice_dims)
    lattice[std::to_string(dim)] = count;
  return json{{"series", std::move(series)},
              {"factors", std::move(factors)},
              {"structure", structure_name(r.structure)},
              {"proper_submodules_by_dim", std::move(lattice)}};
}

}  // namespace hecke
