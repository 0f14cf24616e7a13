#include "treecross/drawing.hpp"

#include <string>

namespace treecross {

namespace {

// x-coordinate of every vertex within its layer; -1 marks "not placed".
std::vector<std::vector<int>> positions(const LayeredForest& forest, const Drawing& d) {
  std::vector<std::vector<int>> pos(forest.num_trees());
  for (int t = 0; t < forest.num_trees(); ++t) pos[t].assign(forest.tree(t).size(), -1);
  for (const auto& layer : d.layers)
    for (int x = 0; x < static_cast<int>(layer.size()); ++x)
      pos[layer[x].tree][layer[x].index] = x;
  return pos;
}

std::int64_t count_with_filter(const LayeredForest& forest, const Drawing& d, int only_tree) {
  auto pos = positions(forest, d);

  std::int64_t total = 0;
  std::vector<std::pair<int, int>> strip;  // (child x, parent x)
  for (int layer = 1; layer < static_cast<int>(d.layers.size()); ++layer) {
    strip.clear();
    for (const VertexRef& r : d.layers[layer - 1]) {
      if (only_tree >= 0 && r.tree != only_tree) continue;
      const Vertex& v = forest.vertex(r);
      if (v.parent == -1) continue;
      strip.emplace_back(pos[r.tree][r.index], pos[r.tree][v.parent]);
    }
    for (std::size_t i = 0; i < strip.size(); ++i)
      for (std::size_t j = i + 1; j < strip.size(); ++j) {
        auto [a1, b1] = strip[i];
        auto [a2, b2] = strip[j];
        if ((a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2)) ++total;
      }
  }
  return total;
}

}  // namespace

void validate_drawing(const LayeredForest& forest, const LayerOrders& orders, const Drawing& d) {
  if (static_cast<int>(d.layers.size()) != forest.num_layers())
    fail(ErrorKind::InvalidDrawing, "drawing has " + std::to_string(d.layers.size()) +
                                        " layers, forest has " + std::to_string(forest.num_layers()));
  if (d.layers[0] != forest.leaf_refs())
    fail(ErrorKind::InvalidDrawing, "layer 1 must equal the fixed leaf order");

  std::vector<std::vector<char>> seen(forest.num_trees());
  for (int t = 0; t < forest.num_trees(); ++t) seen[t].assign(forest.tree(t).size(), 0);

  for (int layer = 1; layer <= forest.num_layers(); ++layer) {
    std::vector<int> last_rank(forest.num_trees(), -1);
    std::vector<int> taken(forest.num_trees(), 0);
    for (const VertexRef& r : d.layers[layer - 1]) {
      if (r.tree < 0 || r.tree >= forest.num_trees() || r.index < 0 ||
          r.index >= forest.tree(r.tree).size())
        fail(ErrorKind::InvalidDrawing, "drawing references an unknown vertex");
      const Vertex& v = forest.vertex(r);
      if (v.layer != layer)
        fail(ErrorKind::InvalidDrawing, "vertex '" + v.id + "' drawn on layer " +
                                            std::to_string(layer) + " but lives on layer " +
                                            std::to_string(v.layer));
      if (seen[r.tree][r.index]++)
        fail(ErrorKind::InvalidDrawing, "vertex '" + v.id + "' drawn twice");
      int rk = orders.rank(r);
      if (rk <= last_rank[r.tree])
        fail(ErrorKind::InvalidDrawing,
             "layer " + std::to_string(layer) + " violates the order of tree " + std::to_string(r.tree) +
                 " at vertex '" + v.id + "'");
      last_rank[r.tree] = rk;
      ++taken[r.tree];
    }
    for (int t = 0; t < forest.num_trees(); ++t)
      if (taken[t] != orders.count(t, layer))
        fail(ErrorKind::InvalidDrawing, "layer " + std::to_string(layer) + " omits vertices of tree " +
                                            std::to_string(t));
  }
}

std::int64_t count_crossings(const LayeredForest& forest, const Drawing& d) {
  return count_crossings(forest, derive_layer_orders(forest), d);
}

std::int64_t count_crossings(const LayeredForest& forest, const LayerOrders& orders, const Drawing& d) {
  validate_drawing(forest, orders, d);
  return count_with_filter(forest, d, -1);
}

std::int64_t count_crossings_unchecked(const LayeredForest& forest, const Drawing& d) {
  return count_with_filter(forest, d, -1);
}

std::int64_t count_tree_crossings(const LayeredForest& forest, const Drawing& d, int tree) {
  return count_with_filter(forest, d, tree);
}

Drawing embedding_drawing(const LayeredForest& forest, const LayerOrders& orders) {
  Drawing d;
  d.layers.resize(forest.num_layers());
  d.layers[0] = forest.leaf_refs();
  for (int layer = 2; layer <= forest.num_layers(); ++layer)
    for (int t = 0; t < forest.num_trees(); ++t)
      for (int v : orders.of(t, layer)) d.layers[layer - 1].push_back(VertexRef{t, v});
  return d;
}

}  // namespace treecross
