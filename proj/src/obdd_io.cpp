#include "epw/obdd_io.hpp"

#include "epw/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <string>

namespace epw {

using nlohmann::json;

namespace {

std::size_t get_index(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer() || obj.at(key).get<long long>() < 0) {
    throw MalformedObdd(std::string("missing or invalid \"") + key + "\"");
  }
  return obj.at(key).get<std::size_t>();
}

}  // namespace

std::vector<std::size_t> read_obdd_order(const json& doc) {
  if (!doc.is_object()) throw MalformedObdd("document is not an object");
  const std::size_t n = get_index(doc, "n");
  if (!doc.contains("order") || !doc.at("order").is_array()) throw MalformedObdd("missing \"order\"");
  std::vector<std::size_t> order;
  for (const auto& v : doc.at("order")) {
    if (!v.is_number_integer() || v.get<long long>() < 1) throw BadOrder("order entries must be positive");
    order.push_back(v.get<std::size_t>());
  }
  if (order.size() != n) throw BadOrder("order has " + std::to_string(order.size()) + " entries, n = " +
                                        std::to_string(n));
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] != i + 1) throw BadOrder("order is not a permutation of 1.." + std::to_string(n));
  }
  return order;
}

Obdd load_obdd(const json& doc, const std::shared_ptr<BddManager>& manager) {
  if (read_obdd_order(doc) != manager->order()) {
    throw OrderMismatch("file order differs from the manager's order");
  }
  const std::size_t n = manager->num_vars();

  struct Raw {
    std::size_t var, lo, hi;
  };
  std::map<std::size_t, Raw> raw;
  if (!doc.contains("nodes") || !doc.at("nodes").is_array()) throw MalformedObdd("missing \"nodes\"");
  for (const auto& entry : doc.at("nodes")) {
    if (!entry.is_object()) throw MalformedObdd("node entry is not an object");
    const std::size_t id = get_index(entry, "id");
    if (id <= kTrueNode) throw MalformedObdd("ids 0 and 1 are reserved for terminals");
    const Raw r{get_index(entry, "var"), get_index(entry, "lo"), get_index(entry, "hi")};
    if (r.var < 1 || r.var > n) throw MalformedObdd("node " + std::to_string(id) + " has variable out of range");
    if (r.lo == r.hi) throw MalformedObdd("node " + std::to_string(id) + " is redundant (lo == hi)");
    if (!raw.emplace(id, r).second) throw MalformedObdd("duplicate id " + std::to_string(id));
  }
  const std::size_t root = get_index(doc, "root");

  auto level = [&](std::size_t id) -> std::size_t {
    if (id <= kTrueNode) return n;
    auto it = raw.find(id);
    if (it == raw.end()) throw MalformedObdd("reference to unknown node " + std::to_string(id));
    return manager->level_of(it->second.var);
  };
  if (root > kTrueNode && !raw.count(root)) throw MalformedObdd("unknown root " + std::to_string(root));
  for (const auto& [id, r] : raw) {
    const std::size_t lv = level(id);
    if (level(r.lo) <= lv || level(r.hi) <= lv) {
      throw MalformedObdd("node " + std::to_string(id) + " violates the variable order");
    }
  }

  // Orderedness makes the graph acyclic, so a deepest-first pass sees
  // children before parents.
  std::vector<std::size_t> ids;
  for (const auto& [id, r] : raw) ids.push_back(id);
  std::stable_sort(ids.begin(), ids.end(),
                   [&](std::size_t a, std::size_t b) { return level(a) > level(b); });
  std::map<std::size_t, NodeId> mapped{{kFalseNode, kFalseNode}, {kTrueNode, kTrueNode}};
  std::set<NodeId> produced;
  for (std::size_t id : ids) {
    const Raw& r = raw.at(id);
    const NodeId m = manager->make_node(level(id), mapped.at(r.lo), mapped.at(r.hi));
    if (!produced.insert(m).second) {
      throw MalformedObdd("node " + std::to_string(id) + " duplicates another node (not reduced)");
    }
    mapped.emplace(id, m);
  }

  Obdd result(manager, mapped.at(root));
  if (result.node_count() != raw.size()) throw MalformedObdd("some nodes are unreachable from the root");
  return result;
}

json obdd_to_json(const Obdd& a) {
  const BddManager& m = *a.manager();
  std::map<NodeId, std::size_t> ids{{kFalseNode, 0}, {kTrueNode, 1}};
  json nodes = json::array();
  for (NodeId x : a.reachable_nodes()) {
    const std::size_t id = ids.size();
    ids.emplace(x, id);
    const auto& nd = m.node(x);
    nodes.push_back({{"id", id}, {"var", m.var_at(nd.level)}, {"lo", ids.at(nd.lo)}, {"hi", ids.at(nd.hi)}});
  }
  return {{"n", m.num_vars()}, {"order", m.order()}, {"nodes", nodes}, {"root", ids.at(a.root())}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("invalid JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace epw
