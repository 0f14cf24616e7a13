#include "treecross/layer_orders.hpp"

#include <algorithm>

namespace treecross {

LayerOrders derive_layer_orders(const LayeredForest& forest) {
  LayerOrders orders;
  orders.seq_.resize(forest.num_trees());
  orders.rank_.resize(forest.num_trees());

  for (int t = 0; t < forest.num_trees(); ++t) {
    const Tree& tree = forest.tree(t);
    orders.seq_[t].assign(forest.num_layers() + 1, {});
    orders.rank_[t].assign(tree.size(), -1);

    for (int v = 0; v < tree.size(); ++v)
      orders.seq_[t][tree[v].layer].push_back(v);

    for (int layer = 1; layer <= forest.num_layers(); ++layer) {
      auto& seq = orders.seq_[t][layer];
      std::sort(seq.begin(), seq.end(),
                [&](int a, int b) { return tree[a].leftmost_leaf < tree[b].leftmost_leaf; });
      for (int i = 0; i < static_cast<int>(seq.size()); ++i)
        orders.rank_[t][seq[i]] = i;
    }
  }
  return orders;
}

}  // namespace treecross
