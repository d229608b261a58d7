#include "epw/random_instances.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace epw {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

GF2Vector random_vector(Rng& rng, std::size_t n) {
  GF2Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1u);
  return v;
}

Formula random_formula(Rng& rng, std::size_t n, std::size_t max_depth, bool xor_gadgets) {
  std::function<Formula::NodePtr(std::size_t)> gen = [&](std::size_t depth) -> Formula::NodePtr {
    const std::size_t roll = uniform(rng, 0, 99);
    if (depth == 0 || roll < 20) return Formula::var(uniform(rng, 1, n));
    if (roll < 35) return Formula::negation(gen(depth - 1));
    auto l = gen(depth - 1);
    auto r = gen(depth - 1);
    if (xor_gadgets && roll < 60) {
      return Formula::conjunction(Formula::disjunction(l, r),
                                  Formula::negation(Formula::conjunction(l, r)));
    }
    return roll < 80 ? Formula::conjunction(l, r) : Formula::disjunction(l, r);
  };
  return Formula(gen(max_depth), n);
}

TwoDag random_dag(Rng& rng, std::size_t max_depth, std::size_t max_nodes) {
  for (;;) {
    using Succ = std::optional<std::pair<std::size_t, std::size_t>>;
    std::vector<Succ> pool;
    const std::size_t leaves = uniform(rng, 1, 3);
    for (std::size_t i = 0; i < leaves; ++i) pool.emplace_back(std::nullopt);
    const std::size_t internal = uniform(rng, 0, max_nodes - leaves);
    for (std::size_t i = 0; i < internal; ++i) {
      // Prefer recent nodes so the result is not too shallow.
      auto pick = [&] {
        const std::size_t span = std::min<std::size_t>(pool.size(), 6);
        return uniform(rng, 0, 3) == 0 ? uniform(rng, 0, pool.size() - 1)
                                       : pool.size() - 1 - uniform(rng, 0, span - 1);
      };
      pool.emplace_back(std::make_pair(pick(), pick()));
    }
    const std::size_t root = pool.size() - 1;

    std::vector<char> reach(pool.size(), 0);
    std::function<void(std::size_t)> mark = [&](std::size_t x) {
      if (reach[x]) return;
      reach[x] = 1;
      if (pool[x]) {
        mark(pool[x]->first);
        mark(pool[x]->second);
      }
    };
    mark(root);
    std::vector<std::size_t> remap(pool.size(), 0);
    std::vector<Succ> kept;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (reach[i]) remap[i] = kept.size(), kept.push_back(pool[i]);
    }
    for (auto& s : kept) {
      if (s) s = std::make_pair(remap[s->first], remap[s->second]);
    }
    if (kept.size() > max_nodes) continue;
    TwoDag g = make_dag(kept, remap[root]);
    if (g.max_depth() <= max_depth) return g;
  }
}

TwoDag relabel(const TwoDag& g, Rng& rng) {
  std::vector<std::size_t> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> succ(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& nd = g.node(i);
    if (!nd.is_leaf()) succ[perm[i]] = std::make_pair(perm[nd.left], perm[nd.right]);
  }
  return make_dag(succ, perm[g.root()]);
}

}  // namespace epw
