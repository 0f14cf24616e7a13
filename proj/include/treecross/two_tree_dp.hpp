#ifndef TREECROSS_TWO_TREE_DP_HPP
#define TREECROSS_TWO_TREE_DP_HPP

#include <cstdint>
#include <vector>

#include "treecross/drawing.hpp"
#include "treecross/forest.hpp"
#include "treecross/layer_orders.hpp"

namespace treecross {

/// Sentinel for "no placement possible"; additions saturate here.
inline constexpr std::int64_t kInfiniteWeight = INT64_C(1) << 60;

inline std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= kInfiniteWeight || b >= kInfiniteWeight) return kInfiniteWeight;
  return a + b;
}

/// Positions on a layer are the gaps of the fixed tree: position p on layer
/// j means "p of tree 0's layer-j vertices stand to the left". cro(x, y, z)
/// counts the crossings a single foreign edge between layers x and x+1
/// admits against tree 0's edges when its endpoints take positions y and z.
class CrossingTable {
 public:
  /// +infinity outside the position domains.
  std::int64_t cro(int x, int y, int z) const {
    if (x < 1 || x >= static_cast<int>(source_size_.size())) return kInfiniteWeight;
    if (y < 0 || y > source_size_[x] || z < 0 || z > target_size_[x]) return kInfiniteWeight;
    return tables_[x][static_cast<std::size_t>(y) * (target_size_[x] + 1) + z];
  }

  int source_positions(int x) const { return source_size_[x]; }  // n of tree 0 on layer x
  int target_positions(int x) const { return target_size_[x]; }  // n of tree 0 on layer x+1

 private:
  friend CrossingTable build_crossing_table(const LayeredForest&, const LayerOrders&);

  std::vector<std::vector<std::int64_t>> tables_;  // [x], x in 1..L-1
  std::vector<int> source_size_;
  std::vector<int> target_size_;
};

/// Requires a validated 2-tree forest (NotTwoTrees otherwise).
CrossingTable build_crossing_table(const LayeredForest& forest, const LayerOrders& orders);

/// The gap on layer j-1 reached by descending from gap p on layer j along
/// tree 0's embedding: the unique crossing-free position where a strip
/// carries tree-0 edges, 0 where it does not.
int ideal_position(const LayeredForest& forest, const LayerOrders& orders, int layer, int p);

struct PositionInterval {
  int lo = 0;
  int hi = 0;
};

/// Subproblem values o[v][p] for tree 1's internal vertices, plus the child
/// positions the minimization selected (for vertices on layer >= 3).
class DpTable {
 public:
  bool filled(int v) const { return v >= 0 && v < static_cast<int>(rows_.size()) && rows_[v].filled; }

  std::int64_t value(int v, int p) const { return row(v).values[p]; }
  int domain_size(int v) const { return static_cast<int>(row(v).values.size()); }

  /// Position chosen for each child of v when v stands at position p; empty
  /// for vertices on layer 2 (their children are fixed leaves).
  const std::vector<int>& chosen(int v, int p) const { return row(v).choices[p]; }

  /// argmin of o[v][.]; contiguous by construction of the problem.
  PositionInterval optimal_positions(int v) const;

  /// Internal vertices in fill order (lowest layer first).
  const std::vector<int>& fill_order() const { return fill_order_; }

 private:
  friend struct DpFill;

  struct Row {
    bool filled = false;
    std::vector<std::int64_t> values;
    std::vector<std::vector<int>> choices;
  };

  const Row& row(int v) const {
    if (!filled(v)) fail(ErrorKind::TableNotFilled, "no table row for vertex " + std::to_string(v));
    return rows_[v];
  }

  std::vector<Row> rows_;
  std::vector<int> fill_order_;
};

PositionInterval optimal_positions(const DpTable& table, int v);

/// natpos(u, p): the ideal position of p clamped into optimal_positions(u).
int natural_position(const LayeredForest& forest, const LayerOrders& orders, const DpTable& table,
                     int child, int parent_position);

struct TwoTreeSolution {
  Drawing drawing;
  std::int64_t crossings = 0;
  DpTable table;
  CrossingTable cross;
};

/// Exact minimum-crossing drawing of a 2-tree forest: tree 0 keeps its
/// embedding, tree 1's vertices are assigned gap positions bottom-up.
TwoTreeSolution solve_two_trees(const LayeredForest& forest);

}  // namespace treecross

#endif
