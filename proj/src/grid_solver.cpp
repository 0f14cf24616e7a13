#include "treecross/grid_solver.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace treecross {

namespace {

// Geometry of one layer-2 vertex: leaf endpoints below, root endpoint above.
struct Star {
  std::vector<int> leaves;  // global leaf-order positions of the children
  int root_pos = -1;        // index of the parent in the root order, -1 if none
};

// Crossings between two stars' edges for a fixed relative order of their
// layer-2 centers. Only pairs in the same strip can cross.
std::int64_t star_pairs(const Star& a, const Star& b, bool a_left) {
  std::int64_t n = 0;
  for (int x : a.leaves)
    for (int y : b.leaves)
      if ((x < y) != a_left) ++n;
  if (a.root_pos >= 0 && b.root_pos >= 0 && (a.root_pos < b.root_pos) != a_left) ++n;
  return n;
}

std::vector<Star> build_stars(const LayeredForest& forest, const LayerOrders& orders, int tree,
                              const std::vector<int>& root_pos_of_tree) {
  const Tree& t = forest.tree(tree);
  std::vector<Star> stars;
  stars.reserve(orders.count(tree, 2));
  for (int v : orders.of(tree, 2)) {
    Star s;
    for (int c : t[v].children) s.leaves.push_back(t[c].leftmost_leaf);
    if (t[v].parent != -1) s.root_pos = root_pos_of_tree[tree];
    stars.push_back(std::move(s));
  }
  return stars;
}

}  // namespace

InsertionTables compute_insertion_tables(const LayeredForest& forest, const LayerOrders& orders,
                                         const std::vector<VertexRef>& root_order) {
  const int k = forest.num_trees();

  std::vector<int> root_pos_of_tree(k, -1);
  for (int i = 0; i < static_cast<int>(root_order.size()); ++i)
    root_pos_of_tree[root_order[i].tree] = i;

  std::vector<std::vector<Star>> stars(k);
  for (int t = 0; t < k; ++t) stars[t] = build_stars(forest, orders, t, root_pos_of_tree);

  InsertionTables tables;
  tables.rank_.resize(k);
  for (int t = 0; t < k; ++t) {
    tables.rank_[t].assign(forest.tree(t).size(), -1);
    const auto& seq = orders.of(t, 2);
    for (int r = 0; r < static_cast<int>(seq.size()); ++r) tables.rank_[t][seq[r]] = r;
  }

  tables.rows_.assign(k, {});
  for (int i = 0; i < k; ++i) {
    tables.rows_[i].resize(k);
    int n_i = orders.count(i, 2);
    for (int t = 0; t < k; ++t) {
      if (t == i) continue;
      tables.rows_[i][t].resize(orders.count(t, 2));
      for (int r = 0; r < orders.count(t, 2); ++r) {
        const Star& sv = stars[t][r];
        auto& row = tables.rows_[i][t][r];
        row.assign(n_i + 1, 0);
        std::int64_t acc = 0;
        for (int m = 0; m < n_i; ++m) acc += star_pairs(sv, stars[i][m], /*a_left=*/true);
        row[0] = acc;
        for (int p = 1; p <= n_i; ++p) {
          const Star& passed = stars[i][p - 1];
          acc += star_pairs(sv, passed, /*a_left=*/false) - star_pairs(sv, passed, /*a_left=*/true);
          row[p] = acc;
        }
      }
    }
  }
  return tables;
}

std::int64_t grid_edge_weight(const InsertionTables& tables, const LayerOrders& orders,
                              std::span<const int> coord, int dim, std::span<const GridRule> rules) {
  int n_dim = orders.count(dim, 2);
  if (coord[dim] < 0 || coord[dim] >= n_dim)
    fail(ErrorKind::OutOfGrid, "no step in dimension " + std::to_string(dim) + " from coordinate " +
                                   std::to_string(coord[dim]));
  int rank = coord[dim] + 1;  // the vertex this step takes, 1-based

  for (const GridRule& rule : rules) {
    if (rule.before_tree == dim && rule.before_rank == rank && coord[rule.after_tree] >= rule.after_rank)
      return kInfiniteWeight;
    if (rule.after_tree == dim && rule.after_rank == rank && coord[rule.before_tree] < rule.before_rank)
      return kInfiniteWeight;
  }

  VertexRef v{dim, orders.of(dim, 2)[rank - 1]};
  std::int64_t w = 0;
  for (int i = 0; i < orders.num_trees(); ++i) {
    if (i == dim) continue;
    w = sat_add(w, tables.cro(i, v, coord[i]));
  }
  return w;
}

FixedOrderSolution solve_fixed_orders(const LayeredForest& forest, const LayerOrders& orders,
                                      const std::vector<VertexRef>& root_order,
                                      const std::vector<GridRule>& rules, std::uint64_t max_cells) {
  if (forest.max_occupied_layer() > 3)
    fail(ErrorKind::NotThreeLayers, "solver handles at most 3 occupied layers, instance has " +
                                        std::to_string(forest.max_occupied_layer()));
  const int k = forest.num_trees();

  std::vector<int> side(k);
  std::uint64_t cells = 1;
  for (int t = 0; t < k; ++t) {
    side[t] = orders.count(t, 2);
    std::uint64_t next = cells * (static_cast<std::uint64_t>(side[t]) + 1);
    if (next / (side[t] + 1) != cells || next > max_cells)
      fail(ErrorKind::TooLarge, "grid needs more than " + std::to_string(max_cells) +
                                    " cells; raise the cell limit or shrink the instance");
    cells = next;
  }

  InsertionTables tables = compute_insertion_tables(forest, orders, root_order);

  std::vector<std::uint64_t> stride(k);
  std::uint64_t acc = 1;
  for (int t = 0; t < k; ++t) {
    stride[t] = acc;
    acc *= side[t] + 1;
  }

  std::vector<std::int64_t> dist(cells, kInfiniteWeight);
  std::vector<std::int16_t> pred(cells, -1);
  dist[0] = 0;

  // Linear index order is colexicographic on the tuples, hence topological;
  // scanning dimensions from the last one down makes ties pick the
  // colexicographically smallest predecessor.
  std::vector<int> coord(k, 0);
  for (std::uint64_t cell = 1; cell < cells; ++cell) {
    int t = 0;
    while (++coord[t] > side[t]) {
      coord[t] = 0;
      ++t;
    }
    std::int64_t best = kInfiniteWeight;
    std::int16_t best_dim = -1;
    for (int j = k - 1; j >= 0; --j) {
      if (coord[j] == 0) continue;
      std::uint64_t from = cell - stride[j];
      if (dist[from] >= kInfiniteWeight) continue;
      --coord[j];
      std::int64_t cand = sat_add(dist[from], grid_edge_weight(tables, orders, coord, j, rules));
      ++coord[j];
      if (cand < best) {
        best = cand;
        best_dim = static_cast<std::int16_t>(j);
      }
    }
    dist[cell] = best;
    pred[cell] = best_dim;
  }

  if (dist[cells - 1] >= kInfiniteWeight)
    fail(ErrorKind::Infeasible, "constraints cut every path through the grid");

  FixedOrderSolution sol;
  sol.path.weight = dist[cells - 1];
  for (std::uint64_t cell = cells - 1; cell != 0;) {
    int j = pred[cell];
    assert(j >= 0);
    sol.path.steps.push_back(j);
    cell -= stride[j];
  }
  std::reverse(sol.path.steps.begin(), sol.path.steps.end());

  std::vector<int> taken(k, 0);
  for (int j : sol.path.steps) sol.path.order.push_back(VertexRef{j, orders.of(j, 2)[taken[j]++]});

  sol.drawing.layers.resize(forest.num_layers());
  sol.drawing.layers[0] = forest.leaf_refs();
  if (forest.num_layers() >= 2) sol.drawing.layers[1] = sol.path.order;
  if (forest.num_layers() >= 3) sol.drawing.layers[2] = root_order;
  return sol;
}

ThreeLayerSolution solve_three_layer(const LayeredForest& forest,
                                     const std::vector<Constraint>& constraints,
                                     const std::optional<std::vector<VertexRef>>& fixed_root_order,
                                     std::uint64_t max_cells) {
  if (forest.max_occupied_layer() > 3)
    fail(ErrorKind::NotThreeLayers, "solver handles at most 3 occupied layers, instance has " +
                                        std::to_string(forest.max_occupied_layer()));

  LayerOrders orders = derive_layer_orders(forest);

  std::vector<GridRule> rules;
  std::vector<std::pair<int, int>> root_pairs;  // (tree of before, tree of after)
  for (const Constraint& c : constraints) {
    int layer = forest.vertex(c.before).layer;
    if (layer == 1) {
      if (forest.leaf_position(c.before) > forest.leaf_position(c.after))
        fail(ErrorKind::Infeasible, "constraint contradicts the fixed leaf order");
    } else if (layer == 2) {
      if (c.before.tree == c.after.tree) {
        if (orders.rank(c.before) > orders.rank(c.after))
          fail(ErrorKind::Infeasible, "constraint contradicts the embedding of tree " +
                                          std::to_string(c.before.tree));
        continue;  // already implied
      }
      rules.push_back({c.before.tree, orders.rank(c.before) + 1, c.after.tree, orders.rank(c.after) + 1});
    } else {
      root_pairs.emplace_back(c.before.tree, c.after.tree);
    }
  }

  std::vector<VertexRef> roots;
  for (int t = 0; t < forest.num_trees(); ++t) {
    const Tree& tree = forest.tree(t);
    if (tree[tree.root()].layer == 3) roots.push_back(VertexRef{t, tree.root()});
  }

  std::vector<std::vector<VertexRef>> permutations;
  if (fixed_root_order) {
    std::vector<VertexRef> sorted_fixed(*fixed_root_order), sorted_roots(roots);
    std::sort(sorted_fixed.begin(), sorted_fixed.end());
    std::sort(sorted_roots.begin(), sorted_roots.end());
    if (sorted_fixed != sorted_roots)
      fail(ErrorKind::Malformed, "fixed root order must list exactly the layer-3 roots");
    permutations.push_back(*fixed_root_order);
  } else {
    std::vector<VertexRef> perm = roots;  // already in tree-index order
    do {
      permutations.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  ThreeLayerSolution best;
  std::int64_t best_weight = -1;
  for (const auto& perm : permutations) {
    std::vector<int> pos_of_tree(forest.num_trees(), -1);
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) pos_of_tree[perm[i].tree] = i;
    bool admissible = true;
    for (const auto& [before_tree, after_tree] : root_pairs)
      if (pos_of_tree[before_tree] > pos_of_tree[after_tree]) admissible = false;
    if (!admissible) continue;

    try {
      FixedOrderSolution sol = solve_fixed_orders(forest, orders, perm, rules, max_cells);
      if (best_weight < 0 || sol.path.weight < best_weight) {
        best_weight = sol.path.weight;
        best.drawing = std::move(sol.drawing);
        best.root_order = perm;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Infeasible) throw;
    }
  }

  if (best_weight < 0)
    fail(ErrorKind::Infeasible, "no root permutation admits a drawing under the constraints");
  assert(best_weight % 2 == 0);
  best.crossings = best_weight / 2;
  return best;
}

}  // namespace treecross
