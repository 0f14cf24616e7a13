#ifndef TREECROSS_LAYER_ORDERS_HPP
#define TREECROSS_LAYER_ORDERS_HPP

#include <vector>

#include "treecross/forest.hpp"

namespace treecross {

/// Per-tree, per-layer vertex sequences induced by the embeddings: on each
/// layer a tree's vertices are ordered by leftmost descendant leaf. The
/// disjoint union of these sequences is the partial order every drawing must
/// extend.
class LayerOrders {
 public:
  /// Vertices (indices within tree t) on the given layer, left to right.
  const std::vector<int>& of(int tree, int layer) const {
    return seq_[tree][layer];
  }

  /// Number of tree t's vertices on the given layer.
  int count(int tree, int layer) const {
    return static_cast<int>(seq_[tree][layer].size());
  }

  /// 0-based rank of a vertex within its own tree's layer sequence.
  int rank(VertexRef r) const { return rank_[r.tree][r.index]; }

  int num_trees() const { return static_cast<int>(seq_.size()); }
  int num_layers() const { return static_cast<int>(seq_.front().size()) - 1; }

 private:
  friend LayerOrders derive_layer_orders(const LayeredForest& forest);

  std::vector<std::vector<std::vector<int>>> seq_;  // [tree][layer] -> vertex indices
  std::vector<std::vector<int>> rank_;              // [tree][vertex] -> rank
};

LayerOrders derive_layer_orders(const LayeredForest& forest);

}  // namespace treecross

#endif
