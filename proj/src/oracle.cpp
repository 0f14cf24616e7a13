#include "treecross/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace treecross {

namespace {

constexpr std::uint64_t kCountCap = std::numeric_limits<std::int64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCountCap / b) return kCountCap;
  return a * b;
}

void interleave(const LayeredForest& forest, const LayerOrders& orders, int layer,
                std::vector<int>& taken, std::vector<VertexRef>& acc,
                const std::function<void(const std::vector<VertexRef>&)>& fn) {
  bool done = true;
  for (int t = 0; t < forest.num_trees(); ++t) {
    if (taken[t] == orders.count(t, layer)) continue;
    done = false;
    acc.push_back(VertexRef{t, orders.of(t, layer)[taken[t]]});
    ++taken[t];
    interleave(forest, orders, layer, taken, acc, fn);
    --taken[t];
    acc.pop_back();
  }
  if (done) fn(acc);
}

}  // namespace

void for_each_layer_extension(const LayeredForest& forest, const LayerOrders& orders, int layer,
                              const std::function<void(const std::vector<VertexRef>&)>& fn) {
  std::vector<int> taken(forest.num_trees(), 0);
  std::vector<VertexRef> acc;
  interleave(forest, orders, layer, taken, acc, fn);
}

std::vector<std::vector<VertexRef>> enumerate_layer_extensions(const LayeredForest& forest,
                                                               const LayerOrders& orders, int layer) {
  std::vector<std::vector<VertexRef>> out;
  for_each_layer_extension(forest, orders, layer,
                           [&](const std::vector<VertexRef>& ext) { out.push_back(ext); });
  return out;
}

std::uint64_t count_layer_extensions(const LayerOrders& orders, int layer) {
  // Multinomial built up as a product of binomials C(seen + n_t, n_t). Each
  // step multiplies by (seen+i)/i >= 1 and stays integral, so on overflow the
  // true count is at least the cap and we can stop early.
  std::uint64_t result = 1;
  std::uint64_t seen = 0;
  for (int t = 0; t < orders.num_trees(); ++t) {
    std::uint64_t n = orders.count(t, layer);
    for (std::uint64_t i = 1; i <= n; ++i) {
      if (result > kCountCap / (seen + i)) return kCountCap;
      result = result * (seen + i) / i;
    }
    seen += n;
  }
  return result;
}

OracleResult brute_force_min(const LayeredForest& forest, const std::vector<Constraint>& constraints,
                             std::uint64_t max_drawings) {
  LayerOrders orders = derive_layer_orders(forest);

  std::uint64_t product = 1;
  for (int layer = 2; layer <= forest.num_layers(); ++layer)
    product = sat_mul(product, count_layer_extensions(orders, layer));
  if (product > max_drawings)
    fail(ErrorKind::TooLarge, "oracle would enumerate " + std::to_string(product) +
                                  " drawings, cap is " + std::to_string(max_drawings));

  // Layer-1 constraints are decided by the fixed leaf order alone.
  std::vector<Constraint> rest;
  for (const Constraint& c : constraints) {
    if (forest.vertex(c.before).layer == 1) {
      if (forest.leaf_position(c.before) > forest.leaf_position(c.after))
        fail(ErrorKind::Infeasible, "constraint contradicts the fixed leaf order");
    } else {
      rest.push_back(c);
    }
  }

  Drawing current;
  current.layers.resize(forest.num_layers());
  current.layers[0] = forest.leaf_refs();

  OracleResult best;
  best.crossings = -1;

  auto satisfied = [&](const Constraint& c) {
    const auto& line = current.layers[forest.vertex(c.before).layer - 1];
    int xb = -1, xa = -1;
    for (int i = 0; i < static_cast<int>(line.size()); ++i) {
      if (line[i] == c.before) xb = i;
      if (line[i] == c.after) xa = i;
    }
    return xb < xa;
  };

  std::function<void(int)> assemble = [&](int layer) {
    if (layer > forest.num_layers()) {
      for (const Constraint& c : rest)
        if (!satisfied(c)) return;
      std::int64_t n = count_crossings_unchecked(forest, current);
      if (best.crossings < 0 || n < best.crossings) {
        best.crossings = n;
        best.drawing = current;
      }
      return;
    }
    for_each_layer_extension(forest, orders, layer, [&](const std::vector<VertexRef>& ext) {
      current.layers[layer - 1] = ext;
      assemble(layer + 1);
    });
  };
  assemble(2);

  if (best.crossings < 0)
    fail(ErrorKind::Infeasible, "constraints eliminate every drawing");
  return best;
}

}  // namespace treecross
