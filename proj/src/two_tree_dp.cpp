#include "treecross/two_tree_dp.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace treecross {

CrossingTable build_crossing_table(const LayeredForest& forest, const LayerOrders& orders) {
  if (forest.num_trees() != 2)
    fail(ErrorKind::NotTwoTrees, "crossing tables need exactly 2 trees, got " +
                                     std::to_string(forest.num_trees()));

  const int L = forest.num_layers();
  const Tree& t0 = forest.tree(0);

  CrossingTable ct;
  ct.tables_.resize(L);
  ct.source_size_.assign(L, 0);
  ct.target_size_.assign(L, 0);

  for (int x = 1; x < L; ++x) {
    int na = orders.count(0, x);
    int nb = orders.count(0, x + 1);
    ct.source_size_[x] = na;
    ct.target_size_[x] = nb;

    // M[y][z] = number of tree-0 strip edges with child rank <= y and parent
    // rank <= z (ranks 1-based); then
    //   cro(y, z) = (A[y] - M[y][z]) + (B[z] - M[y][z]).
    std::vector<std::int64_t> M(static_cast<std::size_t>(na + 1) * (nb + 1), 0);
    auto at = [&](int y, int z) -> std::int64_t& {
      return M[static_cast<std::size_t>(y) * (nb + 1) + z];
    };
    std::vector<std::int64_t> A(na + 1, 0), B(nb + 1, 0);

    for (int rank = 0; rank < na; ++rank) {
      int v = orders.of(0, x)[rank];
      if (t0[v].parent == -1) continue;
      int a = rank + 1;
      int b = orders.rank(VertexRef{0, t0[v].parent}) + 1;
      at(a, b) += 1;
      A[a] += 1;
      B[b] += 1;
    }
    for (int y = 1; y <= na; ++y) A[y] += A[y - 1];
    for (int z = 1; z <= nb; ++z) B[z] += B[z - 1];
    for (int y = 1; y <= na; ++y)
      for (int z = 0; z <= nb; ++z) at(y, z) += at(y - 1, z);
    for (int y = 0; y <= na; ++y)
      for (int z = 1; z <= nb; ++z) at(y, z) += at(y, z - 1);

    auto& tab = ct.tables_[x];
    tab.resize(M.size());
    for (int y = 0; y <= na; ++y)
      for (int z = 0; z <= nb; ++z)
        tab[static_cast<std::size_t>(y) * (nb + 1) + z] = (A[y] - at(y, z)) + (B[z] - at(y, z));
  }
  return ct;
}

int ideal_position(const LayeredForest& forest, const LayerOrders& orders, int layer, int p) {
  if (layer < 2 || layer > forest.num_layers())
    fail(ErrorKind::InvalidParams, "ideal_position: layer " + std::to_string(layer) + " out of range");
  if (p < 0 || p > orders.count(0, layer))
    fail(ErrorKind::InvalidParams, "ideal_position: position " + std::to_string(p) + " out of range");
  // Descending the gap right of the first p vertices passes exactly their
  // children, which the embedding keeps as a prefix of layer-1's sequence.
  const Tree& t0 = forest.tree(0);
  int below = 0;
  for (int m = 0; m < p; ++m) below += static_cast<int>(t0[orders.of(0, layer)[m]].children.size());
  return below;
}

PositionInterval DpTable::optimal_positions(int v) const {
  const Row& r = row(v);
  std::int64_t best = *std::min_element(r.values.begin(), r.values.end());
  PositionInterval iv;
  iv.lo = static_cast<int>(std::find(r.values.begin(), r.values.end(), best) - r.values.begin());
  iv.hi = static_cast<int>(r.values.size()) - 1;
  while (r.values[iv.hi] != best) --iv.hi;
  return iv;
}

PositionInterval optimal_positions(const DpTable& table, int v) { return table.optimal_positions(v); }

int natural_position(const LayeredForest& forest, const LayerOrders& orders, const DpTable& table,
                     int child, int parent_position) {
  int child_layer = forest.tree(1)[child].layer;
  int ideal = ideal_position(forest, orders, child_layer + 1, parent_position);
  PositionInterval iv = table.optimal_positions(child);
  return std::clamp(ideal, iv.lo, iv.hi);
}

struct DpFill {
  static void fill(DpTable& table, const LayeredForest& forest, const LayerOrders& orders,
                   const CrossingTable& ct) {
    const Tree& t1 = forest.tree(1);
    table.rows_.resize(t1.size());

    // Positions of tree 1's leaves in tree 0's frame: the number of tree-0
    // leaves standing left of each in the global order.
    std::vector<int> leaf_pos(t1.size(), 0);
    {
      int t0_seen = 0;
      for (const VertexRef& r : forest.leaf_refs()) {
        if (r.tree == 0) ++t0_seen;
        else leaf_pos[r.index] = t0_seen;
      }
    }

    int top = t1[t1.root()].layer;
    for (int layer = 2; layer <= top; ++layer) {
      for (int v : orders.of(1, layer)) {
        DpTable::Row row;
        row.filled = true;
        int domain = orders.count(0, layer);
        row.values.assign(domain + 1, 0);
        if (layer == 2) {
          for (int p = 0; p <= domain; ++p) {
            std::int64_t sum = 0;
            for (int c : t1[v].children) sum += ct.cro(1, leaf_pos[c], p);
            row.values[p] = sum;
          }
        } else {
          row.choices.resize(domain + 1);
          int q_max = orders.count(0, layer - 1);
          for (int p = 0; p <= domain; ++p) {
            std::int64_t sum = 0;
            auto& chosen = row.choices[p];
            chosen.reserve(t1[v].children.size());
            for (int c : t1[v].children) {
              const auto& child_values = table.rows_[c].values;
              std::int64_t best = kInfiniteWeight;
              std::int64_t best_cro = -1;
              int best_q = 0;
              for (int q = 0; q <= q_max; ++q) {
                std::int64_t cr = ct.cro(layer - 1, q, p);
                std::int64_t s = child_values[q] + cr;
                // On equal sums keep the larger crossing share: that pins the
                // child to the natural clamped position.
                if (s < best || (s == best && cr > best_cro)) {
                  best = s;
                  best_cro = cr;
                  best_q = q;
                }
              }
              sum += best;
              chosen.push_back(best_q);
            }
            row.values[p] = sum;
          }
        }
        table.rows_[v] = std::move(row);
        table.fill_order_.push_back(v);
      }
    }
  }
};

TwoTreeSolution solve_two_trees(const LayeredForest& forest) {
  if (forest.num_trees() != 2)
    fail(ErrorKind::NotTwoTrees, "solver needs exactly 2 trees, got " +
                                     std::to_string(forest.num_trees()));

  LayerOrders orders = derive_layer_orders(forest);

  TwoTreeSolution sol;
  sol.cross = build_crossing_table(forest, orders);

  const Tree& t1 = forest.tree(1);
  std::vector<int> position(t1.size(), 0);

  if (t1.height() >= 2) {
    DpFill::fill(sol.table, forest, orders, sol.cross);

    // Root row: smallest minimizing position, then walk the choices down.
    int root = t1.root();
    PositionInterval iv = sol.table.optimal_positions(root);
    sol.crossings = sol.table.value(root, iv.lo);
    position[root] = iv.lo;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (t1[v].layer <= 2) continue;
      const std::vector<int>& chosen = sol.table.chosen(v, position[v]);
      for (std::size_t i = 0; i < t1[v].children.size(); ++i) {
        int c = t1[v].children[i];
        position[c] = chosen[i];
        stack.push_back(c);
      }
    }
  }

  // Merge: tree 1's vertices enter their gaps, equal positions keep the
  // embedding order (stable sort of an already embedding-ordered sequence).
  sol.drawing.layers.resize(forest.num_layers());
  sol.drawing.layers[0] = forest.leaf_refs();
  for (int layer = 2; layer <= forest.num_layers(); ++layer) {
    auto& line = sol.drawing.layers[layer - 1];
    const auto& fixed = orders.of(0, layer);
    std::vector<int> own(orders.of(1, layer));
    std::stable_sort(own.begin(), own.end(),
                     [&](int a, int b) { return position[a] < position[b]; });
    std::size_t next = 0;
    for (int p = 0; p <= static_cast<int>(fixed.size()); ++p) {
      while (next < own.size() && position[own[next]] == p) line.push_back(VertexRef{1, own[next++]});
      if (p < static_cast<int>(fixed.size())) line.push_back(VertexRef{0, fixed[p]});
    }
    assert(next == own.size());
  }
  return sol;
}

}  // namespace treecross
