#ifndef TREECROSS_DRAWING_HPP
#define TREECROSS_DRAWING_HPP

#include <cstdint>
#include <vector>

#include "treecross/forest.hpp"
#include "treecross/layer_orders.hpp"

namespace treecross {

/// One total order per layer; layers[0] is layer 1 and always equals the
/// fixed leaf order.
struct Drawing {
  std::vector<std::vector<VertexRef>> layers;

  friend bool operator==(const Drawing& a, const Drawing& b) { return a.layers == b.layers; }
};

/// Throws InvalidDrawing unless every layer is a permutation of that layer's
/// vertices extending each tree's own sequence, with layer 1 the leaf order.
void validate_drawing(const LayeredForest& forest, const LayerOrders& orders, const Drawing& d);

/// Number of pairwise edge crossings. Validates the drawing first.
std::int64_t count_crossings(const LayeredForest& forest, const Drawing& d);
std::int64_t count_crossings(const LayeredForest& forest, const LayerOrders& orders, const Drawing& d);

/// Same count without validation; callers guarantee a well-formed drawing.
std::int64_t count_crossings_unchecked(const LayeredForest& forest, const Drawing& d);

/// Crossings among the edges of one tree only (no validation).
std::int64_t count_tree_crossings(const LayeredForest& forest, const Drawing& d, int tree);

/// The block-concatenated drawing: on every layer, tree 0's vertices first,
/// then tree 1's, each in embedding order.
Drawing embedding_drawing(const LayeredForest& forest, const LayerOrders& orders);

}  // namespace treecross

#endif
