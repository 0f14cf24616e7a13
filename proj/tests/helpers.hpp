#ifndef TREECROSS_TESTS_HELPERS_HPP
#define TREECROSS_TESTS_HELPERS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treecross/drawing.hpp"
#include "treecross/error.hpp"
#include "treecross/forest.hpp"
#include "treecross/grid_solver.hpp"
#include "treecross/layer_orders.hpp"

namespace treecross {

inline RawTree raw_tree(VertexId root, std::vector<std::pair<VertexId, VertexId>> edges,
                        std::vector<std::pair<VertexId, int>> layers) {
  RawTree t;
  t.root = std::move(root);
  t.edges = std::move(edges);
  for (auto& [id, layer] : layers) t.layers[id] = layer;
  return t;
}

inline RawForest raw_forest(int num_layers, std::vector<RawTree> trees,
                            std::vector<VertexId> leaf_order) {
  RawForest f;
  f.num_layers = num_layers;
  f.trees = std::move(trees);
  f.leaf_order = std::move(leaf_order);
  return f;
}

inline VertexRef ref(const LayeredForest& forest, const VertexId& id) {
  auto r = forest.find(id);
  if (!r) throw std::runtime_error("test helper: unknown vertex '" + id + "'");
  return *r;
}

inline Drawing drawing_from_ids(const LayeredForest& forest,
                                const std::vector<std::vector<VertexId>>& layers) {
  Drawing d;
  for (const auto& line : layers) {
    std::vector<VertexRef> refs;
    for (const auto& id : line) refs.push_back(ref(forest, id));
    d.layers.push_back(std::move(refs));
  }
  return d;
}

/// Runs f, expecting it to throw Error; returns the kind (or count(-1) cast
/// when nothing was thrown, which no real kind equals).
template <class F>
ErrorKind thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return static_cast<ErrorKind>(-1);
}

// ---------------------------------------------------------------------------
// two-layer pair of cherries forced to cross once: a1 b1 a2 b2
inline LayeredForest cherry_pair() {
  return validate_forest(raw_forest(
      2,
      {raw_tree("ra", {{"a1", "ra"}, {"a2", "ra"}}, {{"ra", 2}, {"a1", 1}, {"a2", 1}}),
       raw_tree("rb", {{"b1", "rb"}, {"b2", "rb"}}, {{"rb", 2}, {"b1", 1}, {"b2", 1}})},
      {"a1", "b1", "a2", "b2"}));
}

// three-layer micro pair: a1,a2 -> A -> R1 and b1,b2 -> B -> R2, interleaved
inline LayeredForest micro_pair() {
  return validate_forest(raw_forest(
      3,
      {raw_tree("R1", {{"a1", "A"}, {"a2", "A"}, {"A", "R1"}},
                {{"R1", 3}, {"A", 2}, {"a1", 1}, {"a2", 1}}),
       raw_tree("R2", {{"b1", "B"}, {"b2", "B"}, {"B", "R2"}},
                {{"R2", 3}, {"B", 2}, {"b1", 1}, {"b2", 1}})},
      {"a1", "b1", "a2", "b2"}));
}

// fixed tree with two one-leaf prongs plus a single-leaf companion tree
inline LayeredForest two_prong() {
  return validate_forest(raw_forest(
      3,
      {raw_tree("R", {{"a", "A"}, {"b", "B"}, {"A", "R"}, {"B", "R"}},
                {{"R", 3}, {"A", 2}, {"B", 2}, {"a", 1}, {"b", 1}}),
       raw_tree("c", {}, {{"c", 1}})},
      {"a", "b", "c"}));
}

// same fixed tree, companion is the chain c -> m -> w
inline LayeredForest two_prong_chain() {
  return validate_forest(raw_forest(
      3,
      {raw_tree("R", {{"a", "A"}, {"b", "B"}, {"A", "R"}, {"B", "R"}},
                {{"R", 3}, {"A", 2}, {"B", 2}, {"a", 1}, {"b", 1}}),
       raw_tree("w", {{"c", "m"}, {"m", "w"}}, {{"w", 3}, {"m", 2}, {"c", 1}})},
      {"a", "b", "c"}));
}

// ---------------------------------------------------------------------------
/// Crossing count from actual straight-line geometry: vertices get real
/// x-coordinates through an arbitrary strictly increasing per-layer map and
/// segment pairs are tested by the sign of the endpoint differences. Shares
/// no code with the library's pair scan.
inline std::int64_t geometric_crossings(
    const LayeredForest& forest, const Drawing& d,
    const std::function<double(int layer, int index)>& x_map = [](int, int i) { return double(i); }) {
  std::vector<std::vector<double>> x(forest.num_trees());
  for (int t = 0; t < forest.num_trees(); ++t) x[t].assign(forest.tree(t).size(), 0.0);
  for (int layer = 1; layer <= static_cast<int>(d.layers.size()); ++layer)
    for (int i = 0; i < static_cast<int>(d.layers[layer - 1].size()); ++i) {
      VertexRef r = d.layers[layer - 1][i];
      x[r.tree][r.index] = x_map(layer, i);
    }

  std::int64_t total = 0;
  for (int layer = 1; layer < static_cast<int>(d.layers.size()); ++layer) {
    std::vector<std::pair<double, double>> segs;
    for (VertexRef r : d.layers[layer - 1]) {
      const Vertex& v = forest.vertex(r);
      if (v.parent == -1) continue;
      segs.emplace_back(x[r.tree][r.index], x[r.tree][v.parent]);
    }
    for (std::size_t i = 0; i < segs.size(); ++i)
      for (std::size_t j = i + 1; j < segs.size(); ++j)
        if ((segs[i].first - segs[j].first) * (segs[i].second - segs[j].second) < 0) ++total;
  }
  return total;
}

/// Independent recount of one insertion-table entry: lay out tree `against`
/// at even layer-2 coordinates, drop v at 2p-1, give roots the coordinates
/// of root_order, and count sign-test crossings between v's star and every
/// edge of tree `against`.
inline std::int64_t geometric_insertion_count(const LayeredForest& forest, const LayerOrders& orders,
                                              const std::vector<VertexRef>& root_order, VertexRef v,
                                              int against, int p) {
  auto root_x = [&](int tree) -> std::int64_t {
    for (std::size_t i = 0; i < root_order.size(); ++i)
      if (root_order[i].tree == tree) return static_cast<std::int64_t>(i);
    throw std::runtime_error("test helper: tree has no layer-3 root");
  };

  const Vertex& vv = forest.vertex(v);
  const std::int64_t xv = 2 * static_cast<std::int64_t>(p) - 1;

  // star of v: (leaf x, xv) segments below, one (xv, root x) segment above
  std::vector<std::pair<std::int64_t, std::int64_t>> star_low;
  for (int c : vv.children)
    star_low.emplace_back(forest.leaf_position({v.tree, c}), xv);

  std::int64_t total = 0;
  for (int w : orders.of(against, 2)) {
    const Vertex& wv = forest.tree(against)[w];
    const std::int64_t xw = 2 * static_cast<std::int64_t>(orders.rank({against, w}));
    for (int c : wv.children) {
      std::int64_t xc = forest.leaf_position({against, c});
      for (auto [lo, hi] : star_low)
        if ((lo - xc) * (hi - xw) < 0) ++total;
    }
    if (wv.parent != -1 && vv.parent != -1)
      if ((xv - xw) * (root_x(v.tree) - root_x(against)) < 0) ++total;
  }
  return total;
}

// ---------------------------------------------------------------------------
/// Structure of a filled subproblem table: every row's minimizers form one
/// contiguous block, values grow strictly (by at least 1 per step) outside
/// it, and along each layer's own order both block endpoints move weakly
/// right.
inline bool dp_table_structure_ok(const LayeredForest& forest, const LayerOrders& orders,
                                  const DpTable& table) {
  const Tree& t1 = forest.tree(1);
  for (int layer = 2; layer <= t1.height(); ++layer) {
    int prev_lo = -1;
    int prev_hi = -1;
    for (int v : orders.of(1, layer)) {
      if (!table.filled(v)) return false;
      PositionInterval iv = table.optimal_positions(v);
      std::int64_t best = table.value(v, iv.lo);
      for (int p = iv.lo; p <= iv.hi; ++p)
        if (table.value(v, p) != best) return false;
      for (int p = iv.hi + 1; p < table.domain_size(v); ++p) {
        if (table.value(v, p) <= table.value(v, p - 1)) return false;
        if (table.value(v, p) < best + (p - iv.hi)) return false;
      }
      for (int p = iv.lo - 1; p >= 0; --p) {
        if (table.value(v, p) <= table.value(v, p + 1)) return false;
        if (table.value(v, p) < best + (iv.lo - p)) return false;
      }
      if (iv.lo < prev_lo || iv.hi < prev_hi) return false;
      prev_lo = iv.lo;
      prev_hi = iv.hi;
    }
  }
  return true;
}

/// Every filled entry above layer 2 decomposes over its children at their
/// clamped ideal positions, and the stored choices are exactly those.
inline bool dp_decomposition_ok(const LayeredForest& forest, const LayerOrders& orders,
                                const DpTable& table, const CrossingTable& ct) {
  const Tree& t1 = forest.tree(1);
  for (int v = 0; v < t1.size(); ++v) {
    if (!table.filled(v) || t1[v].layer < 3) continue;
    int j = t1[v].layer;
    for (int p = 0; p < table.domain_size(v); ++p) {
      std::int64_t sum = 0;
      const std::vector<int>& chosen = table.chosen(v, p);
      for (std::size_t i = 0; i < t1[v].children.size(); ++i) {
        int c = t1[v].children[i];
        int np = natural_position(forest, orders, table, c, p);
        if (chosen[i] != np) return false;
        sum += table.value(c, np) + ct.cro(j - 1, np, p);
      }
      if (sum != table.value(v, p)) return false;
    }
  }
  return true;
}

/// Unit-step law of the crossing tables: on every strip that carries tree-0
/// edges, each column is 0 at the ideal position and grows by exactly 1 per
/// step away from it; moving the target away from its own ideal grows the
/// count by at least 1 per step.
inline bool crossing_table_law_ok(const LayeredForest& forest, const LayerOrders& orders,
                                  const CrossingTable& ct) {
  int top = forest.tree(0).height();
  for (int x = 1; x < top; ++x) {
    for (int z = 0; z <= ct.target_positions(x); ++z) {
      int ideal = ideal_position(forest, orders, x + 1, z);
      if (ct.cro(x, ideal, z) != 0) return false;
      for (int d = 1; ideal - d >= 0; ++d)
        if (ct.cro(x, ideal - d, z) != d) return false;
      for (int d = 1; ideal + d <= ct.source_positions(x); ++d)
        if (ct.cro(x, ideal + d, z) != d) return false;
    }
    for (int p = 0; p <= ct.target_positions(x); ++p) {
      int ideal = ideal_position(forest, orders, x + 1, p);
      std::int64_t prev = 0;
      for (int d = 1; p + d <= ct.target_positions(x); ++d) {
        std::int64_t val = ct.cro(x, ideal, p + d);
        if (val <= prev || val < d) return false;
        prev = val;
      }
      prev = 0;
      for (int d = 1; p - d >= 0; ++d) {
        std::int64_t val = ct.cro(x, ideal, p - d);
        if (val <= prev || val < d) return false;
        prev = val;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
/// Uniform-ish interleave of the per-tree sequences on one layer.
inline std::vector<VertexRef> random_riffle(const LayeredForest& forest, const LayerOrders& orders,
                                            int layer, std::mt19937_64& rng) {
  std::vector<int> taken(forest.num_trees(), 0);
  std::vector<VertexRef> out;
  int remaining = 0;
  for (int t = 0; t < forest.num_trees(); ++t) remaining += orders.count(t, layer);
  while (remaining > 0) {
    auto pick = static_cast<int>(rng() % static_cast<std::uint64_t>(remaining));
    for (int t = 0; t < forest.num_trees(); ++t) {
      int left = orders.count(t, layer) - taken[t];
      if (pick < left) {
        out.push_back({t, orders.of(t, layer)[taken[t]]});
        ++taken[t];
        break;
      }
      pick -= left;
    }
    --remaining;
  }
  return out;
}

/// Random valid drawing: fixed leaves, every other layer a random extension.
inline Drawing random_drawing(const LayeredForest& forest, const LayerOrders& orders,
                              std::mt19937_64& rng) {
  Drawing d;
  d.layers.resize(forest.num_layers());
  d.layers[0] = forest.leaf_refs();
  for (int j = 2; j <= forest.num_layers(); ++j)
    d.layers[j - 1] = random_riffle(forest, orders, j, rng);
  return d;
}

/// Roots standing on layer 3, in tree order.
inline std::vector<VertexRef> layer3_roots(const LayeredForest& forest) {
  std::vector<VertexRef> roots;
  for (int t = 0; t < forest.num_trees(); ++t)
    if (forest.tree(t).height() == 3) roots.push_back({t, forest.tree(t).root()});
  return roots;
}

struct SampledPath {
  std::vector<int> steps;
  std::int64_t weight = 0;
  std::vector<VertexRef> order;
};

/// Walks a uniformly random monotone lattice path, accumulating step
/// weights.
inline SampledPath sample_grid_path(const LayeredForest& forest, const LayerOrders& orders,
                                    const InsertionTables& tables, std::mt19937_64& rng) {
  int k = forest.num_trees();
  std::vector<int> coord(k, 0);
  std::vector<int> side(k);
  int total = 0;
  for (int t = 0; t < k; ++t) {
    side[t] = orders.count(t, 2);
    total += side[t];
  }
  SampledPath path;
  for (int step = 0; step < total; ++step) {
    int remaining = 0;
    for (int t = 0; t < k; ++t) remaining += side[t] - coord[t];
    int pick = static_cast<int>(rng() % static_cast<std::uint64_t>(remaining));
    for (int t = 0; t < k; ++t) {
      int left = side[t] - coord[t];
      if (pick < left) {
        path.weight = sat_add(path.weight, grid_edge_weight(tables, orders, coord, t, {}));
        path.order.push_back({t, orders.of(t, 2)[coord[t]]});
        path.steps.push_back(t);
        ++coord[t];
        break;
      }
      pick -= left;
    }
  }
  return path;
}

/// Three-layer drawing with the given middle order and root order.
inline Drawing drawing_from_layer2(const LayeredForest& forest, const std::vector<VertexRef>& layer2,
                                   const std::vector<VertexRef>& root_order) {
  Drawing d;
  d.layers.resize(forest.num_layers());
  d.layers[0] = forest.leaf_refs();
  if (forest.num_layers() >= 2) d.layers[1] = layer2;
  if (forest.num_layers() >= 3) d.layers[2] = root_order;
  return d;
}

}  // namespace treecross

#endif
