#include "epw/report.hpp"

#include <limits>

namespace epw {

using nlohmann::json;

json to_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) {
    return x.convert_to<std::uint64_t>();
  }
  return x.str();
}

json to_json(const GF2Basis& b) {
  json rows = json::array();
  for (const auto& r : b.rows()) rows.push_back(r.to_string());
  return rows;
}

json to_json(const NegEquivReport& r) {
  json out;
  out["equivalent"] = r.equivalent;
  out["witness_count"] = to_json(r.witness_count);
  out["stabilizer_dim"] = r.stabilizer_dim;
  out["power_of_two_or_zero"] = r.power_of_two_or_zero;
  if (r.witnesses.empty()) {
    out["representative"] = nullptr;
    out["basis"] = json::array();
  } else {
    out["representative"] = r.witnesses.representative().to_string();
    out["basis"] = to_json(r.witnesses.basis());
  }
  out["method"] = to_string(r.method);
  return out;
}

json to_json(const AmplifierTable& t) {
  json c = json::array();
  json b = json::array();
  json a = json::array();
  for (std::size_t i = 1; i <= t.p; ++i) {
    c.push_back(to_json(t.c[i]));
    if (i >= 2) {
      b.push_back(to_json(t.b[i]));
      a.push_back(to_json(t.a[i]));
    }
  }
  return {{"set", t.set ? t.set->name() : ""}, {"p", t.p}, {"c", c}, {"b", b}, {"a", a}};
}

json to_json(const NonGappyVerdict& v) {
  json viol = json::array();
  for (const auto& n : v.violations) viol.push_back(to_json(n));
  return {{"pass", v.pass}, {"k", to_json(v.k)}, {"bound", to_json(v.bound)}, {"violations", viol}};
}

json to_json(const GrowthVerdict& v) {
  return {{"pass", v.pass}, {"ratio_failures", v.ratio_failures}, {"log_failures", v.log_failures}};
}

json to_json(const PaddingInstance& inst) {
  const BigInt total = padded_count(inst);
  return {{"w", pad_width(inst)}, {"total", to_json(total)}, {"power_of_two", is_power_of_two(total)}};
}

}  // namespace epw
