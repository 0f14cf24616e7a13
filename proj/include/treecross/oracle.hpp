#ifndef TREECROSS_ORACLE_HPP
#define TREECROSS_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "treecross/constraint.hpp"
#include "treecross/drawing.hpp"
#include "treecross/forest.hpp"
#include "treecross/layer_orders.hpp"

namespace treecross {

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

/// Calls fn once for every interleaving of the per-tree sequences on the
/// given layer (every linear extension of the layer's partial order), in a
/// fixed deterministic order.
void for_each_layer_extension(const LayeredForest& forest, const LayerOrders& orders, int layer,
                              const std::function<void(const std::vector<VertexRef>&)>& fn);

/// Materialized variant of the above.
std::vector<std::vector<VertexRef>> enumerate_layer_extensions(const LayeredForest& forest,
                                                               const LayerOrders& orders, int layer);

/// Number of extensions of one layer (multinomial), saturated at 2^63-1.
std::uint64_t count_layer_extensions(const LayerOrders& orders, int layer);

struct OracleResult {
  Drawing drawing;
  std::int64_t crossings = 0;
};

/// Exhaustive minimum over the full product of layer extensions. Intended as
/// ground truth for the solvers, so it stays deliberately naive: no pruning,
/// every candidate drawing is counted from scratch.
///
/// Throws TooLarge when the product of extension counts exceeds max_drawings
/// and Infeasible when constraints eliminate every drawing.
OracleResult brute_force_min(const LayeredForest& forest, const std::vector<Constraint>& constraints = {},
                             std::uint64_t max_drawings = kDefaultOracleCap);

}  // namespace treecross

#endif
