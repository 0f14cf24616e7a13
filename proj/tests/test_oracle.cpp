#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "treecross/generator.hpp"
#include "treecross/oracle.hpp"

using namespace treecross;

namespace {

std::vector<VertexId> ids_of(const LayeredForest& f, const std::vector<VertexRef>& refs) {
  std::vector<VertexId> out;
  for (auto r : refs) out.push_back(f.vertex(r).id);
  return out;
}

}  // namespace

TEST_CASE("layer extensions are complete and duplicate-free") {
  SUBCASE("1+1 vertices") {
    auto f = cherry_pair();
    auto orders = derive_layer_orders(f);
    auto exts = enumerate_layer_extensions(f, orders, 2);
    CHECK(exts.size() == 2);
    CHECK(count_layer_extensions(orders, 2) == 2);
  }
  SUBCASE("2+1 vertices") {
    auto f = validate_forest(raw_forest(
        3,
        {raw_tree("R", {{"a1", "X"}, {"a2", "Y"}, {"X", "R"}, {"Y", "R"}},
                  {{"R", 3}, {"X", 2}, {"Y", 2}, {"a1", 1}, {"a2", 1}}),
         raw_tree("rb", {{"b", "rb"}}, {{"rb", 2}, {"b", 1}})},
        {"a1", "a2", "b"}));
    auto orders = derive_layer_orders(f);
    auto exts = enumerate_layer_extensions(f, orders, 2);
    CHECK(exts.size() == 3);
    CHECK(count_layer_extensions(orders, 2) == 3);
  }
  SUBCASE("2+2 vertices") {
    auto f = validate_forest(raw_forest(
        3,
        {raw_tree("R", {{"a1", "X"}, {"a2", "Y"}, {"X", "R"}, {"Y", "R"}},
                  {{"R", 3}, {"X", 2}, {"Y", 2}, {"a1", 1}, {"a2", 1}}),
         raw_tree("S", {{"b1", "U"}, {"b2", "V"}, {"U", "S"}, {"V", "S"}},
                  {{"S", 3}, {"U", 2}, {"V", 2}, {"b1", 1}, {"b2", 1}})},
        {"a1", "a2", "b1", "b2"}));
    auto orders = derive_layer_orders(f);
    auto exts = enumerate_layer_extensions(f, orders, 2);
    CHECK(exts.size() == 6);
    CHECK(count_layer_extensions(orders, 2) == 6);

    std::set<std::vector<VertexRef>> unique(exts.begin(), exts.end());
    CHECK(unique.size() == 6);
    for (const auto& ext : exts) {
      // each tree's own sequence must survive as a subsequence
      for (int t = 0; t < f.num_trees(); ++t) {
        std::vector<int> picked;
        for (auto r : ext)
          if (r.tree == t) picked.push_back(r.index);
        CHECK(picked == orders.of(t, 2));
      }
    }
  }
}

TEST_CASE("brute force minima on hand-checkable instances") {
  SUBCASE("single tree") {
    GenParams params;
    params.seed = 5;
    params.num_trees = 1;
    params.num_layers = 3;
    params.n_target = 9;
    auto res = brute_force_min(gen_instance(params));
    CHECK(res.crossings == 0);
  }
  SUBCASE("interleaved cherries cannot avoid one crossing") {
    auto f = cherry_pair();
    auto res = brute_force_min(f);
    CHECK(res.crossings == 1);
    CHECK(count_crossings(f, res.drawing) == 1);
  }
  SUBCASE("three-layer micro pair") {
    auto f = micro_pair();
    auto res = brute_force_min(f);
    CHECK(res.crossings == 1);
    CHECK(ids_of(f, res.drawing.layers[1]) == std::vector<VertexId>{"A", "B"});
    CHECK(ids_of(f, res.drawing.layers[2]) == std::vector<VertexId>{"R1", "R2"});
  }
}

TEST_CASE("constraints filter the oracle") {
  auto f = cherry_pair();
  SUBCASE("force the bad order") {
    auto cons = resolve_constraints(f, {{"rb", "ra"}});
    auto res = brute_force_min(f, cons);
    CHECK(res.crossings == 3);
    CHECK(ids_of(f, res.drawing.layers[1]) == std::vector<VertexId>{"rb", "ra"});
  }
  SUBCASE("contradiction is infeasible") {
    auto cons = resolve_constraints(f, {{"ra", "rb"}, {"rb", "ra"}});
    CHECK(thrown_kind([&] { brute_force_min(f, cons); }) == ErrorKind::Infeasible);
  }
  SUBCASE("constraints against the fixed leaf order are infeasible") {
    auto cons = resolve_constraints(f, {{"b1", "a1"}});
    CHECK(thrown_kind([&] { brute_force_min(f, cons); }) == ErrorKind::Infeasible);
  }
}

TEST_CASE("the size guard trips before enumeration") {
  auto f = micro_pair();  // 2 x 2 = 4 drawings
  CHECK(thrown_kind([&] { brute_force_min(f, {}, 3); }) == ErrorKind::TooLarge);
  CHECK_NOTHROW(brute_force_min(f, {}, 4));
}

TEST_CASE("oracle minimum is a lower bound over random drawings") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GenParams params;
    params.seed = seed;
    params.num_trees = 2 + static_cast<int>(seed % 2);
    params.num_layers = 3;
    params.n_target = 10;
    params.interleave_bias = 0.6;
    auto f = gen_instance(params);
    auto orders = derive_layer_orders(f);
    auto res = brute_force_min(f);
    CHECK(count_crossings(f, orders, res.drawing) == res.crossings);
    for (int rep = 0; rep < 10; ++rep)
      CHECK(res.crossings <= count_crossings(f, orders, random_drawing(f, orders, rng)));
  }
}
