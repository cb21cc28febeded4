#pragma once

#include <json.hpp>

#include "qk/cauchy.hpp"
#include "qk/matrixcalc.hpp"

namespace qk {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

Json to_json(const CompleteLattice& l);
Json to_json(const Quantaloid& q);
Json to_json(const Quantaloid& q, const QArrow& f);
Json to_json(const QCategory& a);
Json to_json(const Distributor& phi);
Json to_json(const QFunctor& f);
Json to_json(const QMatrix& m);
Json to_json(const Shape& s);
Json to_json(const UniversalityReport& r);

// {"schema": 1, "command": ..., ...}
Json envelope(const std::string& command);

}  // namespace qk
