#ifndef TREECROSS_GRID_SOLVER_HPP
#define TREECROSS_GRID_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "treecross/constraint.hpp"
#include "treecross/drawing.hpp"
#include "treecross/forest.hpp"
#include "treecross/layer_orders.hpp"
#include "treecross/two_tree_dp.hpp"  // kInfiniteWeight, sat_add

namespace treecross {

inline constexpr std::uint64_t kDefaultMaxGridCells = 100'000'000;

/// cro^v_i(p): crossings between the star of layer-2 vertex v (v, its
/// leaves, its layer-3 parent edge if any) and all edges of tree i, when v
/// stands behind p of tree i's layer-2 vertices. Built incrementally, one
/// neighbor star per step.
class InsertionTables {
 public:
  std::int64_t cro(int against_tree, VertexRef v, int p) const {
    const auto& r = row(against_tree, v);
    if (p < 0 || p >= static_cast<int>(r.size())) return kInfiniteWeight;
    return r[p];
  }

  const std::vector<std::int64_t>& row(int against_tree, VertexRef v) const {
    if (against_tree == v.tree)
      fail(ErrorKind::InvalidParams, "no insertion table of a vertex against its own tree");
    return rows_[against_tree][v.tree][rank_[v.tree][v.index]];
  }

 private:
  friend InsertionTables compute_insertion_tables(const LayeredForest&, const LayerOrders&,
                                                  const std::vector<VertexRef>&);

  // rows_[i][t][rank of v in tree t's layer-2 order][p]
  std::vector<std::vector<std::vector<std::vector<std::int64_t>>>> rows_;
  std::vector<std::vector<int>> rank_;
};

/// root_order fixes layer 3 (one entry per tree whose root sits there).
InsertionTables compute_insertion_tables(const LayeredForest& forest, const LayerOrders& orders,
                                         const std::vector<VertexRef>& root_order);

/// Layer-2 precedence in grid terms: vertex of rank before_rank (1-based) in
/// tree before_tree must precede rank after_rank in tree after_tree.
struct GridRule {
  int before_tree;
  int before_rank;
  int after_tree;
  int after_rank;
};

/// Weight of the grid step that leaves `coord` along dimension `dim`, i.e.
/// appends tree dim's next layer-2 vertex to the partial order. Infinite if
/// a rule forbids it; OutOfGrid if that tree is exhausted at coord.
std::int64_t grid_edge_weight(const InsertionTables& tables, const LayerOrders& orders,
                              std::span<const int> coord, int dim,
                              std::span<const GridRule> rules = {});

struct GridPath {
  std::vector<int> steps;          // dimension taken at each move, |V_2| entries
  std::int64_t weight = 0;         // twice the crossing count
  std::vector<VertexRef> order;    // the layer-2 order the path spells
};

struct FixedOrderSolution {
  GridPath path;
  Drawing drawing;
};

/// Lightest monotone lattice path for one fixed root order. The grid is
/// never materialized; a distance array over coordinate tuples is filled in
/// colexicographic order. Throws TooLarge when the tuple count exceeds
/// max_cells and Infeasible when rules cut every path.
FixedOrderSolution solve_fixed_orders(const LayeredForest& forest, const LayerOrders& orders,
                                      const std::vector<VertexRef>& root_order,
                                      const std::vector<GridRule>& rules = {},
                                      std::uint64_t max_cells = kDefaultMaxGridCells);

struct ThreeLayerSolution {
  Drawing drawing;
  std::int64_t crossings = 0;
  std::vector<VertexRef> root_order;
};

/// Exact minimum for forests occupying at most 3 layers: every admissible
/// root permutation is solved and the lightest kept (first in lexicographic
/// tree-index order on ties). Constraints may relate same-layer vertices of
/// layers 1, 2 (grid rules) or 3 (permutation filter).
ThreeLayerSolution solve_three_layer(const LayeredForest& forest,
                                     const std::vector<Constraint>& constraints = {},
                                     const std::optional<std::vector<VertexRef>>& fixed_root_order = std::nullopt,
                                     std::uint64_t max_cells = kDefaultMaxGridCells);

}  // namespace treecross

#endif
