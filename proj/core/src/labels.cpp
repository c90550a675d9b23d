#include "hecke/labels.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::M1_0: return "M1_0";
    case Kind::M1_m1: return "M1_m1";
    case Kind::M2: return "M2";
    case Kind::M2t: return "M2t";
    case Kind::M3: return "M3";
    case Kind::M3t: return "M3t";
    case Kind::N3: return "N3";
    case Kind::N3t: return "N3t";
    case Kind::P3: return "P3";
    case Kind::P3t: return "P3t";
    case Kind::L6: return "L6";
    case Kind::L6t: return "L6t";
    case Kind::K6: return "K6";
  }
  return "?";
}

int kind_dim(Kind k) {
  switch (k) {
    case Kind::M1_0:
    case Kind::M1_m1:
      return 1;
    case Kind::M2:
    case Kind::M2t:
      return 2;
    case Kind::M3:
    case Kind::M3t:
    case Kind::N3:
    case Kind::N3t:
    case Kind::P3:
    case Kind::P3t:
      return 3;
    case Kind::L6:
    case Kind::L6t:
    case Kind::K6:
      return 6;
  }
  return 0;
}

int kind_param_count(Kind k) {
  switch (k) {
    case Kind::M1_0:
    case Kind::M1_m1:
    case Kind::M2:
    case Kind::M2t:
    case Kind::P3:
    case Kind::P3t:
      return 1;
    case Kind::M3:
    case Kind::M3t:
    case Kind::N3:
    case Kind::N3t:
    case Kind::L6:
    case Kind::L6t:
      return 2;
    case Kind::K6:
      return 3;
  }
  return 0;
}

Kind kind_from_name(const std::string& name) {
  static const std::pair<const char*, Kind> table[] = {
      {"M1_0", Kind::M1_0}, {"M1_m1", Kind::M1_m1}, {"M2", Kind::M2},
      {"M2t", Kind::M2t},   {"M3", Kind::M3},       {"M3t", Kind::M3t},
      {"N3", Kind::N3},     {"N3t", Kind::N3t},     {"P3", Kind::P3},
      {"P3t", Kind::P3t},   {"L6", Kind::L6},       {"L6t", Kind::L6t},
      {"K6", Kind::K6},
  };
  for (const auto& [n, k] : table)
    if (name == n) return k;
  throw Error("unknown module kind: " + name);
}

std::string SimpleLabel::to_string() const {
  std::ostringstream os;
  os << kind_name(kind) << "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) os << ",";
    os << params[i].to_string();
  }
  os << ")";
  return os.str();
}

bool SimpleLabel::operator==(const SimpleLabel& o) const {
  if (kind != o.kind || params.size() != o.params.size()) return false;
  for (size_t i = 0; i < params.size(); ++i)
    if (params[i] != o.params[i]) return false;
  return true;
}

bool SimpleLabel::operator<(const SimpleLabel& o) const {
  if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
  for (size_t i = 0; i < params.size() && i < o.params.size(); ++i) {
    if (params[i].index() != o.params[i].index())
      return params[i].index() < o.params[i].index();
  }
  return params.size() < o.params.size();
}

const char* structure_name(Structure s) {
  switch (s) {
    case Structure::Irreducible: return "Irreducible";
    case Structure::Uniserial2: return "Uniserial2";
    case Structure::DirectSum2: return "DirectSum2";
    case Structure::Length4: return "Length4";
    case Structure::Other: return "Other";
  }
  return "?";
}

std::vector<SimpleLabel> sorted_labels(std::vector<SimpleLabel> labels) {
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace hecke
