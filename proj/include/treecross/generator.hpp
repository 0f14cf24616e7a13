#ifndef TREECROSS_GENERATOR_HPP
#define TREECROSS_GENERATOR_HPP

#include <cstdint>

#include "treecross/forest.hpp"

namespace treecross {

struct GenParams {
  std::uint64_t seed = 0;
  int num_trees = 2;
  int num_layers = 3;
  int n_target = 8;              // exact total vertex count
  double interleave_bias = 1.0;  // 0 = per-tree leaf blocks, 1 = uniform riffle
};

/// Deterministic random instance: num_trees upward trees of height at most
/// num_layers with n_target vertices in total, leaf order obtained by an
/// order-preserving riffle of the per-tree leaf sequences. The same
/// parameters yield the same instance on every platform (mt19937_64 with
/// fixed draw algorithms, no library distributions).
LayeredForest gen_instance(const GenParams& params);

}  // namespace treecross

#endif
