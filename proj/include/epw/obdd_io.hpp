#pragma once

#include "epw/obdd.hpp"

#include <json.hpp>

#include <filesystem>
#include <memory>
#include <vector>

namespace epw {

/// OBDD text format:
///   {"n": 3, "order": [1, 2, 3],
///    "nodes": [{"id": 2, "var": 3, "lo": 0, "hi": 1}, ...],
///    "root": 2}
/// Ids 0 and 1 are the FALSE and TRUE terminals.

/// Reads "n" and "order" and checks that the order is a permutation.
std::vector<std::size_t> read_obdd_order(const nlohmann::json& doc);

/// Loads a diagram into `manager`, rejecting unordered, unreduced,
/// dangling, or unreachable node lists (MalformedObdd) and orders that differ
/// from the manager's (OrderMismatch).
Obdd load_obdd(const nlohmann::json& doc, const std::shared_ptr<BddManager>& manager);

nlohmann::json obdd_to_json(const Obdd& a);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace epw
