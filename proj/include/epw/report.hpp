#pragma once

#include "epw/cep.hpp"
#include "epw/fewamp.hpp"
#include "epw/gf2.hpp"
#include "epw/negequiv.hpp"

#include <json.hpp>

namespace epw {

// Reports are JSON objects. Big integers are written as JSON numbers when
// they fit in 64 bits and as decimal strings otherwise.

nlohmann::json to_json(const BigInt& x);
nlohmann::json to_json(const GF2Basis& b);

/// {equivalent, witness_count, stabilizer_dim, representative, basis[], method}
nlohmann::json to_json(const NegEquivReport& r);

/// {set, p, c[1..p], b[2..p], a[2..p]}
nlohmann::json to_json(const AmplifierTable& t);
nlohmann::json to_json(const NonGappyVerdict& v);
nlohmann::json to_json(const GrowthVerdict& v);

/// {w, total, power_of_two}
nlohmann::json to_json(const PaddingInstance& inst);

}  // namespace epw
