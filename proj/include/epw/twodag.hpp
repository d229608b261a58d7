#pragma once

#include "epw/gf2.hpp"
#include "epw/negequiv.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace epw {

/// Unvalidated 2-dag description: node names with either no successors or
/// an ordered successor list, plus an optional declared root.
struct RawDag {
  struct Entry {
    std::string id;
    std::optional<std::vector<std::string>> successors;  // nullopt = leaf
  };
  std::vector<Entry> nodes;
  std::optional<std::string> root;
};

/// Reads {"nodes": {id: null | [left, right], ...}, "root": id}.
RawDag parse_raw_dag(const nlohmann::json& doc);
nlohmann::json dag_to_json(const class TwoDag& g);

/// Rooted acyclic graph, every node with 0 or 2 ordered successors, all nodes
/// reachable from the root. Depth is the shortest distance from the root.
class TwoDag {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Node {
    std::size_t left = kNone;
    std::size_t right = kNone;
    bool is_leaf() const { return left == kNone; }
  };

  std::size_t size() const { return nodes_.size(); }
  std::size_t root() const { return root_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::size_t depth(std::size_t i) const { return depth_[i]; }
  std::size_t max_depth() const { return max_depth_; }
  const std::string& name(std::size_t i) const { return names_[i]; }

 private:
  friend TwoDag validate_dag(const RawDag& raw);
  friend TwoDag apply_flips(const TwoDag& g, const GF2Vector& flips);

  std::vector<Node> nodes_;
  std::vector<std::string> names_;
  std::vector<std::size_t> depth_;
  std::size_t root_ = 0;
  std::size_t max_depth_ = 0;
};

/// A flip set is a vector over depths 0..maxDepth; bit d set means the
/// successors of every internal node at depth d are interchanged.
using FlipSet = GF2Vector;

/// Throws BadOutDegree, UnknownNode, Cyclic, NoRoot, MultipleRoots or
/// Unreachable.
TwoDag validate_dag(const RawDag& raw);

/// Convenience: node i has successors `succ[i]` (nullopt for a leaf).
TwoDag make_dag(const std::vector<std::optional<std::pair<std::size_t, std::size_t>>>& succ,
                std::size_t root);

TwoDag apply_flips(const TwoDag& g, const FlipSet& flips);

/// Canonical form of the rooted ordered dag: nodes are numbered in
/// first-visit order of a left-first traversal from the root, then listed as
/// [0] for a leaf or [1, left, right]. Equal forms iff isomorphic.
std::vector<std::size_t> canonical_form(const TwoDag& g);

bool canonical_equal(const TwoDag& a, const TwoDag& b);

/// Largest supported maxDepth for flip-set enumeration.
inline constexpr std::size_t kMaxFlipDepth = 20;

/// {s : apply_flips(g, s) is isomorphic to g}, checked to be a subspace.
GF2Basis flip_stabilizer(const TwoDag& g);

/// {s : apply_flips(g, s) is isomorphic to f} over GF(2)^{D+1}; empty when
/// the maximum depths differ. Checked to be a coset of flip_stabilizer(g).
AffineSet interchange_witnesses(const TwoDag& f, const TwoDag& g);

NegEquivReport decide_interchange(const TwoDag& f, const TwoDag& g);

}  // namespace epw
