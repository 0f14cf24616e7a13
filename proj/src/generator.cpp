#include "treecross/generator.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <string>

namespace treecross {

namespace {

// std::uniform_int_distribution is implementation defined; these helpers pin
// the draw algorithm so instances reproduce everywhere.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  // rejection sampling on the top multiple of n
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

bool chance(std::mt19937_64& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return static_cast<double>(rng()) < p * 18446744073709551616.0;  // p * 2^64
}

struct BuiltTree {
  RawTree raw;
  std::vector<VertexId> leaves;  // in embedding order
};

BuiltTree build_tree(std::mt19937_64& rng, int tree_index, int budget, int num_layers) {
  BuiltTree out;
  const std::string prefix = "t" + std::to_string(tree_index + 1) + "_";
  int counter = 0;
  auto fresh = [&] { return prefix + std::to_string(counter++); };

  if (budget == 1) {
    VertexId leaf = fresh();
    out.raw.root = leaf;
    out.raw.layers.emplace(leaf, 1);
    out.leaves.push_back(leaf);
    return out;
  }

  int height = uniform_int(rng, 2, std::min(num_layers, budget));

  // One vertex per layer keeps the tree connected; extras go to random
  // layers below the root, then counts are re-sorted non-increasing toward
  // layer 1 so every internal vertex can keep at least one child.
  std::vector<int> count(height + 1, 1);
  for (int extra = budget - height; extra > 0; --extra) count[uniform_int(rng, 1, height - 1)]++;
  std::sort(count.begin() + 1, count.begin() + height, std::greater<int>());

  std::vector<std::vector<int>> vertex_at(height + 1);        // layer -> vertex numbers
  std::vector<std::vector<int>> children_of;                  // vertex number -> children
  std::vector<int> layer_of;
  auto add_vertex = [&](int layer) {
    int v = static_cast<int>(layer_of.size());
    layer_of.push_back(layer);
    children_of.emplace_back();
    vertex_at[layer].push_back(v);
    return v;
  };

  add_vertex(height);  // root
  for (int layer = height - 1; layer >= 1; --layer) {
    for (int m = 0; m < count[layer]; ++m) {
      int v = add_vertex(layer);
      int parent;
      if (m < count[layer + 1]) {
        parent = vertex_at[layer + 1][m];  // cover every parent first
      } else {
        parent = vertex_at[layer + 1][uniform_int(rng, 0, count[layer + 1] - 1)];
      }
      auto& siblings = children_of[parent];
      siblings.insert(siblings.begin() + uniform_int(rng, 0, static_cast<int>(siblings.size())), v);
    }
  }

  // Names and edges in a depth-first sweep; the visit order is the embedding.
  std::vector<VertexId> name(layer_of.size());
  std::function<void(int)> visit = [&](int v) {
    name[v] = fresh();
    out.raw.layers.emplace(name[v], layer_of[v]);
    if (children_of[v].empty()) out.leaves.push_back(name[v]);
    for (int c : children_of[v]) {
      visit(c);
      out.raw.edges.emplace_back(name[c], name[v]);
    }
  };
  visit(0);
  out.raw.root = name[0];
  return out;
}

}  // namespace

LayeredForest gen_instance(const GenParams& params) {
  if (params.num_trees < 1) fail(ErrorKind::InvalidParams, "need at least one tree");
  if (params.num_layers < 2) fail(ErrorKind::InvalidParams, "need at least two layers");
  if (params.n_target < params.num_trees)
    fail(ErrorKind::InvalidParams, "n_target must be at least the number of trees");
  if (params.interleave_bias < 0.0 || params.interleave_bias > 1.0)
    fail(ErrorKind::InvalidParams, "interleave_bias must lie in [0, 1]");

  std::mt19937_64 rng(params.seed);

  RawForest raw;
  raw.num_layers = params.num_layers;

  std::vector<std::vector<VertexId>> leaves(params.num_trees);
  for (int t = 0; t < params.num_trees; ++t) {
    int budget = params.n_target / params.num_trees + (t < params.n_target % params.num_trees ? 1 : 0);
    BuiltTree built = build_tree(rng, t, budget, params.num_layers);
    raw.trees.push_back(std::move(built.raw));
    leaves[t] = std::move(built.leaves);
  }

  // Order-preserving riffle: with probability bias pick the source tree
  // proportionally to its remaining leaves, otherwise take from the lowest
  // indexed unfinished tree (bias 0 therefore concatenates blocks).
  std::vector<std::size_t> next(params.num_trees, 0);
  std::size_t remaining = 0;
  for (const auto& seq : leaves) remaining += seq.size();
  while (remaining > 0) {
    int source = -1;
    if (chance(rng, params.interleave_bias)) {
      std::uint64_t pick = uniform_below(rng, remaining);
      for (int t = 0; t < params.num_trees; ++t) {
        std::uint64_t left = leaves[t].size() - next[t];
        if (pick < left) {
          source = t;
          break;
        }
        pick -= left;
      }
    } else {
      for (int t = 0; t < params.num_trees; ++t)
        if (next[t] < leaves[t].size()) {
          source = t;
          break;
        }
    }
    raw.leaf_order.push_back(leaves[source][next[source]++]);
    --remaining;
  }

  return validate_forest(raw);
}

}  // namespace treecross
