#include "epw/twodag.hpp"

#include "epw/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace epw {

using nlohmann::json;

RawDag parse_raw_dag(const json& doc) {
  if (!doc.is_object() || !doc.contains("nodes") || !doc.at("nodes").is_object()) {
    throw Error("2-dag document needs a \"nodes\" object");
  }
  RawDag raw;
  for (const auto& [id, succ] : doc.at("nodes").items()) {
    RawDag::Entry e{id, std::nullopt};
    if (succ.is_array()) {
      std::vector<std::string> s;
      for (const auto& c : succ) {
        if (!c.is_string()) throw UnknownNode("successor ids must be strings (node " + id + ")");
        s.push_back(c.get<std::string>());
      }
      e.successors = std::move(s);
    } else if (!succ.is_null()) {
      throw BadOutDegree("node " + id + " must map to null or a successor list");
    }
    raw.nodes.push_back(std::move(e));
  }
  if (doc.contains("root")) {
    if (!doc.at("root").is_string()) throw UnknownNode("root must be a node id string");
    raw.root = doc.at("root").get<std::string>();
  }
  return raw;
}

json dag_to_json(const TwoDag& g) {
  json nodes = json::object();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& nd = g.node(i);
    nodes[g.name(i)] = nd.is_leaf() ? json(nullptr) : json::array({g.name(nd.left), g.name(nd.right)});
  }
  return {{"nodes", nodes}, {"root", g.name(g.root())}};
}

TwoDag validate_dag(const RawDag& raw) {
  TwoDag g;
  std::map<std::string, std::size_t> index;
  for (const auto& e : raw.nodes) {
    if (!index.emplace(e.id, index.size()).second) throw Error("duplicate node id " + e.id);
    g.names_.push_back(e.id);
  }
  const std::size_t n = raw.nodes.size();
  if (n == 0) throw NoRoot("empty graph");
  g.nodes_.resize(n);
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& succ = raw.nodes[i].successors;
    if (!succ || succ->empty()) continue;
    if (succ->size() != 2) {
      throw BadOutDegree("node " + raw.nodes[i].id + " has " + std::to_string(succ->size()) +
                         " successors");
    }
    std::size_t kids[2];
    for (int k = 0; k < 2; ++k) {
      auto it = index.find((*succ)[k]);
      if (it == index.end()) throw UnknownNode("node " + raw.nodes[i].id + " points to " + (*succ)[k]);
      kids[k] = it->second;
      ++indegree[kids[k]];
    }
    g.nodes_[i] = {kids[0], kids[1]};
  }

  // Cycle check (iterative three-colour DFS).
  std::vector<int> colour(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s]) continue;
    std::vector<std::pair<std::size_t, int>> stack{{s, 0}};
    colour[s] = 1;
    while (!stack.empty()) {
      auto& [x, k] = stack.back();
      const auto& nd = g.nodes_[x];
      if (nd.is_leaf() || k == 2) {
        colour[x] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t c = k == 0 ? nd.left : nd.right;
      ++k;
      if (colour[c] == 1) throw Cyclic("cycle through node " + g.names_[c]);
      if (colour[c] == 0) {
        colour[c] = 1;
        stack.emplace_back(c, 0);
      }
    }
  }

  if (raw.root) {
    auto it = index.find(*raw.root);
    if (it == index.end()) throw UnknownNode("declared root " + *raw.root);
    g.root_ = it->second;
    if (indegree[g.root_] != 0) throw NoRoot("declared root " + *raw.root + " has a predecessor");
  } else {
    std::vector<std::size_t> sources;
    for (std::size_t i = 0; i < n; ++i) {
      if (indegree[i] == 0) sources.push_back(i);
    }
    if (sources.empty()) throw NoRoot("every node has a predecessor");
    if (sources.size() > 1) {
      throw MultipleRoots(std::to_string(sources.size()) + " nodes without predecessors");
    }
    g.root_ = sources.front();
  }

  // Shortest-path depths by BFS.
  g.depth_.assign(n, TwoDag::kNone);
  g.depth_[g.root_] = 0;
  std::deque<std::size_t> queue{g.root_};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    const auto& nd = g.nodes_[x];
    if (nd.is_leaf()) continue;
    for (std::size_t c : {nd.left, nd.right}) {
      if (g.depth_[c] == TwoDag::kNone) {
        g.depth_[c] = g.depth_[x] + 1;
        queue.push_back(c);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.depth_[i] == TwoDag::kNone) throw Unreachable("node " + g.names_[i]);
  }
  g.max_depth_ = *std::max_element(g.depth_.begin(), g.depth_.end());
  return g;
}

TwoDag make_dag(const std::vector<std::optional<std::pair<std::size_t, std::size_t>>>& succ,
                std::size_t root) {
  RawDag raw;
  for (std::size_t i = 0; i < succ.size(); ++i) {
    RawDag::Entry e{std::to_string(i), std::nullopt};
    if (succ[i]) e.successors = std::vector<std::string>{std::to_string(succ[i]->first),
                                                          std::to_string(succ[i]->second)};
    raw.nodes.push_back(std::move(e));
  }
  raw.root = std::to_string(root);
  return validate_dag(raw);
}

TwoDag apply_flips(const TwoDag& g, const FlipSet& flips) {
  if (flips.size() != g.max_depth() + 1) {
    throw LengthMismatch("flip set of length " + std::to_string(flips.size()) + " for depths 0.." +
                         std::to_string(g.max_depth()));
  }
  TwoDag out = g;
  for (std::size_t i = 0; i < out.nodes_.size(); ++i) {
    auto& nd = out.nodes_[i];
    if (!nd.is_leaf() && flips.get(out.depth_[i])) std::swap(nd.left, nd.right);
  }
  return out;
}

std::vector<std::size_t> canonical_form(const TwoDag& g) {
  std::vector<std::size_t> number(g.size(), TwoDag::kNone);
  std::vector<std::size_t> visit_order;
  visit_order.reserve(g.size());
  std::function<void(std::size_t)> visit = [&](std::size_t x) {
    if (number[x] != TwoDag::kNone) return;
    number[x] = visit_order.size();
    visit_order.push_back(x);
    const auto& nd = g.node(x);
    if (nd.is_leaf()) return;
    visit(nd.left);
    visit(nd.right);
  };
  visit(g.root());
  std::vector<std::size_t> form;
  form.reserve(3 * visit_order.size());
  for (std::size_t x : visit_order) {
    const auto& nd = g.node(x);
    if (nd.is_leaf()) {
      form.push_back(0);
    } else {
      form.push_back(1);
      form.push_back(number[nd.left]);
      form.push_back(number[nd.right]);
    }
  }
  return form;
}

bool canonical_equal(const TwoDag& a, const TwoDag& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

namespace {

std::vector<GF2Vector> matching_flips(const std::vector<std::size_t>& target, const TwoDag& g) {
  const std::size_t width = g.max_depth() + 1;
  if (g.max_depth() > kMaxFlipDepth) {
    throw DepthTooLarge("maximum depth " + std::to_string(g.max_depth()) + " exceeds " +
                        std::to_string(kMaxFlipDepth));
  }
  std::vector<GF2Vector> out;
  const std::uint64_t total = std::uint64_t{1} << width;
  for (std::uint64_t s = 0; s < total; ++s) {
    const FlipSet flips = GF2Vector::from_index(s, width);
    if (canonical_form(apply_flips(g, flips)) == target) out.push_back(flips);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GF2Basis flip_stabilizer(const TwoDag& g) {
  const auto pts = matching_flips(canonical_form(g), g);
  GF2Basis basis = echelon_basis(pts, g.max_depth() + 1);
  if (pts.size() != (std::size_t{1} << basis.dim())) {
    throw NotACoset("flip stabilizer is not closed under XOR");
  }
  return basis;
}

AffineSet interchange_witnesses(const TwoDag& f, const TwoDag& g) {
  if (f.max_depth() != g.max_depth()) return AffineSet::empty_set();
  AffineSet w = affine_from_points(matching_flips(canonical_form(f), g));
  if (!w.empty() && !(w.basis() == flip_stabilizer(g))) {
    throw NotACoset("interchange witnesses are not a coset of the flip stabilizer");
  }
  return w;
}

NegEquivReport decide_interchange(const TwoDag& f, const TwoDag& g) {
  NegEquivReport r;
  r.method = Method::Brute;
  const GF2Basis stab = flip_stabilizer(g);
  r.witnesses = interchange_witnesses(f, g);
  r.witness_count = coset_cardinality(r.witnesses);
  r.equivalent = r.witness_count >= 1;
  r.stabilizer_dim = stab.dim();
  r.power_of_two_or_zero = r.witness_count == 0 || is_power_of_two(r.witness_count);
  if (r.equivalent && r.witness_count != pow2(static_cast<unsigned>(stab.dim()))) {
    throw NotACoset("interchange witness count differs from 2^dim of the stabilizer");
  }
  return r;
}

}  // namespace epw
