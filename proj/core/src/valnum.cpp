#include "hecke/valnum.hpp"

namespace hecke {

VUnit q_of(const PConfig& cfg) { return VUnit(cfg.e, cfg.field.one()); }

VUnit vu_one(const Field& f) { return VUnit(0, f.one()); }

}  // namespace hecke
