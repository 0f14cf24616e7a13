#include "treecross/forest.hpp"

#include <algorithm>
#include <string>

namespace treecross {

namespace {

struct SubtreeStats {
  int local_lo = -1;   // leaf positions within the tree's own leaf subsequence
  int local_hi = -1;
  int count = 0;
  int global_lo = -1;  // leftmost descendant leaf in the global order
};

}  // namespace

LayeredForest validate_forest(const RawForest& raw) {
  if (raw.num_layers < 2) fail(ErrorKind::Malformed, "num_layers must be at least 2");
  if (raw.trees.empty()) fail(ErrorKind::Malformed, "forest has no trees");

  LayeredForest forest;
  forest.num_layers_ = raw.num_layers;

  // Per-tree structural pass: indices, parents, cycles, layer arithmetic.
  std::vector<std::vector<Vertex>> verts(raw.trees.size());
  std::vector<int> roots(raw.trees.size());
  for (int t = 0; t < static_cast<int>(raw.trees.size()); ++t) {
    const RawTree& rt = raw.trees[t];
    if (rt.layers.empty()) fail(ErrorKind::Malformed, "tree " + std::to_string(t) + " has no vertices");

    std::unordered_map<VertexId, int> local;
    for (const auto& [id, layer] : rt.layers) {
      int idx = static_cast<int>(verts[t].size());
      local.emplace(id, idx);
      Vertex v;
      v.id = id;
      v.layer = layer;
      v.dummy = rt.dummies.count(id) > 0;
      verts[t].push_back(std::move(v));
      if (forest.index_.count(id))
        fail(ErrorKind::Malformed, "duplicate vertex id '" + id + "'");
      forest.index_.emplace(id, VertexRef{t, idx});
    }

    auto root_it = local.find(rt.root);
    if (root_it == local.end())
      fail(ErrorKind::Malformed, "root '" + rt.root + "' missing from layer map of tree " + std::to_string(t));
    roots[t] = root_it->second;

    for (const auto& [child_id, parent_id] : rt.edges) {
      auto ci = local.find(child_id);
      auto pi = local.find(parent_id);
      if (ci == local.end() || pi == local.end())
        fail(ErrorKind::Malformed, "edge (" + child_id + ", " + parent_id + ") references an unknown vertex");
      Vertex& child = verts[t][ci->second];
      if (ci->second == roots[t])
        fail(ErrorKind::Malformed, "root '" + child_id + "' has a parent");
      if (child.parent != -1)
        fail(ErrorKind::Malformed, "vertex '" + child_id + "' has two parents");
      child.parent = pi->second;
      verts[t][pi->second].children.push_back(ci->second);
    }

    // Walk parent chains before touching layer values, so malformed layer
    // data cannot mask a genuine cycle.
    std::vector<int> state(verts[t].size(), 0);  // 0 new, 1 on stack, 2 done
    for (int v = 0; v < static_cast<int>(verts[t].size()); ++v) {
      int u = v;
      std::vector<int> chain;
      while (state[u] == 0) {
        state[u] = 1;
        chain.push_back(u);
        if (verts[t][u].parent == -1) break;
        u = verts[t][u].parent;
      }
      if (state[u] == 1 && verts[t][u].parent != -1)
        fail(ErrorKind::CycleDetected, "cycle through vertex '" + verts[t][u].id + "'");
      for (int w : chain) state[w] = 2;
      state[u] = 2;
      // The chain must have ended at the root; any other parentless vertex
      // means the tree is disconnected.
      if (verts[t][u].parent == -1 && u != roots[t])
        fail(ErrorKind::Malformed, "vertex '" + verts[t][u].id + "' is not connected to root '" + rt.root + "'");
    }

    for (const Vertex& v : verts[t]) {
      if (v.layer < 1 || v.layer > raw.num_layers)
        fail(ErrorKind::Malformed, "vertex '" + v.id + "' has layer " + std::to_string(v.layer) +
                                       " outside 1.." + std::to_string(raw.num_layers));
    }
    for (const Vertex& v : verts[t]) {
      if (v.parent == -1) continue;
      int span = verts[t][v.parent].layer - v.layer;
      if (span >= 2)
        fail(ErrorKind::LongEdge, "edge (" + v.id + ", " + verts[t][v.parent].id + ") spans " +
                                      std::to_string(span) + " layers; subdivide first");
      if (span <= 0)
        fail(ErrorKind::Malformed, "edge (" + v.id + ", " + verts[t][v.parent].id + ") does not go upward");
    }
    for (const Vertex& v : verts[t]) {
      if (v.children.empty() && v.layer != 1)
        fail(ErrorKind::LeafNotOnLayerOne, "leaf '" + v.id + "' sits on layer " + std::to_string(v.layer));
      if (!v.children.empty() && v.layer == 1)
        fail(ErrorKind::Malformed, "vertex '" + v.id + "' on layer 1 has children");
    }
  }

  // Global leaf order: complete, duplicate free, leaves only.
  std::vector<std::vector<int>> local_leaf_pos(raw.trees.size());
  std::vector<int> seen_per_tree(raw.trees.size(), 0);
  for (int t = 0; t < static_cast<int>(raw.trees.size()); ++t)
    local_leaf_pos[t].assign(verts[t].size(), -1);

  forest.leaf_order_ = raw.leaf_order;
  for (int pos = 0; pos < static_cast<int>(raw.leaf_order.size()); ++pos) {
    const VertexId& id = raw.leaf_order[pos];
    auto it = forest.index_.find(id);
    if (it == forest.index_.end())
      fail(ErrorKind::Malformed, "leaf_order mentions unknown vertex '" + id + "'");
    VertexRef r = it->second;
    Vertex& v = verts[r.tree][r.index];
    if (v.layer != 1)
      fail(ErrorKind::Malformed, "leaf_order mentions non-leaf vertex '" + id + "'");
    if (v.leftmost_leaf != -1)
      fail(ErrorKind::Malformed, "leaf '" + id + "' listed twice in leaf_order");
    v.leftmost_leaf = pos;
    local_leaf_pos[r.tree][r.index] = seen_per_tree[r.tree]++;
    forest.leaf_refs_.push_back(r);
  }
  for (int t = 0; t < static_cast<int>(verts.size()); ++t)
    for (const Vertex& v : verts[t])
      if (v.layer == 1 && v.leftmost_leaf == -1)
        fail(ErrorKind::MissingLeafInOrder, "leaf '" + v.id + "' missing from leaf_order");

  // Contiguity: the descendant leaves of every vertex must form a block
  // within the tree's own leaf subsequence. Bottom-up by layer.
  for (int t = 0; t < static_cast<int>(verts.size()); ++t) {
    std::vector<SubtreeStats> stats(verts[t].size());
    std::vector<int> by_layer_order(verts[t].size());
    for (int v = 0; v < static_cast<int>(verts[t].size()); ++v) by_layer_order[v] = v;
    std::sort(by_layer_order.begin(), by_layer_order.end(),
              [&](int a, int b) { return verts[t][a].layer < verts[t][b].layer; });

    for (int v : by_layer_order) {
      Vertex& vx = verts[t][v];
      if (vx.children.empty()) {
        stats[v] = {local_leaf_pos[t][v], local_leaf_pos[t][v], 1, vx.leftmost_leaf};
        continue;
      }
      SubtreeStats s;
      for (int c : vx.children) {
        const SubtreeStats& cs = stats[c];
        if (s.count == 0) {
          s = cs;
        } else {
          s.local_lo = std::min(s.local_lo, cs.local_lo);
          s.local_hi = std::max(s.local_hi, cs.local_hi);
          s.global_lo = std::min(s.global_lo, cs.global_lo);
          s.count += cs.count;
        }
      }
      if (s.local_hi - s.local_lo + 1 != s.count)
        fail(ErrorKind::NonContiguousLeaves,
             "descendant leaves of '" + vx.id + "' (tree " + std::to_string(t) +
                 ") are not contiguous in the leaf order");
      stats[v] = s;
      vx.leftmost_leaf = s.global_lo;
    }

    // Embedding: children left to right by leftmost descendant leaf.
    for (Vertex& v : verts[t])
      std::sort(v.children.begin(), v.children.end(),
                [&](int a, int b) { return verts[t][a].leftmost_leaf < verts[t][b].leftmost_leaf; });
  }

  for (int t = 0; t < static_cast<int>(verts.size()); ++t) {
    forest.total_vertices_ += static_cast<int>(verts[t].size());
    for (const Vertex& v : verts[t])
      forest.max_occupied_layer_ = std::max(forest.max_occupied_layer_, v.layer);
    forest.trees_.emplace_back(roots[t], std::move(verts[t]));
  }
  return forest;
}

RawForest subdivide_long_edges(const RawForest& raw) {
  RawForest out;
  out.num_layers = raw.num_layers;
  out.leaf_order = raw.leaf_order;
  out.trees.reserve(raw.trees.size());

  for (const RawTree& rt : raw.trees) {
    RawTree nt;
    nt.root = rt.root;
    nt.layers = rt.layers;
    nt.dummies = rt.dummies;
    for (const auto& [child, parent] : rt.edges) {
      auto ci = rt.layers.find(child);
      auto pi = rt.layers.find(parent);
      if (ci == rt.layers.end() || pi == rt.layers.end() || pi->second - ci->second <= 1) {
        nt.edges.emplace_back(child, parent);  // proper or broken; validation decides
        continue;
      }
      VertexId prev = child;
      for (int layer = ci->second + 1; layer < pi->second; ++layer) {
        VertexId dummy = child + ">" + parent + "@" + std::to_string(layer);
        while (nt.layers.count(dummy)) dummy += "+";
        nt.layers.emplace(dummy, layer);
        nt.dummies.insert(dummy);
        nt.edges.emplace_back(prev, dummy);
        prev = dummy;
      }
      nt.edges.emplace_back(prev, parent);
    }
    out.trees.push_back(std::move(nt));
  }
  return out;
}

}  // namespace treecross
