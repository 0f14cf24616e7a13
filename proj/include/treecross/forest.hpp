#ifndef TREECROSS_FOREST_HPP
#define TREECROSS_FOREST_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treecross/error.hpp"

namespace treecross {

using VertexId = std::string;

/// Addresses a vertex as (tree index, vertex index within that tree).
struct VertexRef {
  int tree = -1;
  int index = -1;

  friend bool operator==(const VertexRef& a, const VertexRef& b) {
    return a.tree == b.tree && a.index == b.index;
  }
  friend bool operator!=(const VertexRef& a, const VertexRef& b) { return !(a == b); }
  friend bool operator<(const VertexRef& a, const VertexRef& b) {
    return a.tree != b.tree ? a.tree < b.tree : a.index < b.index;
  }
};

/// Unvalidated input shape of one tree: edges are (child, parent) pairs and
/// the layer map lists every vertex of the tree, including isolated roots.
struct RawTree {
  VertexId root;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::map<VertexId, int> layers;
  std::set<VertexId> dummies;  // filled by subdivide_long_edges
};

struct RawForest {
  int num_layers = 0;
  std::vector<RawTree> trees;
  std::vector<VertexId> leaf_order;
};

struct Vertex {
  VertexId id;
  int layer = 1;
  int parent = -1;             // index within the same tree, -1 for the root
  std::vector<int> children;   // ordered left to right as in the embedding
  bool dummy = false;
  int leftmost_leaf = -1;      // global leaf_order position of the leftmost descendant leaf
};

class Tree {
 public:
  Tree(int root, std::vector<Vertex> verts) : root_(root), verts_(std::move(verts)) {}

  int root() const { return root_; }
  int size() const { return static_cast<int>(verts_.size()); }
  const Vertex& operator[](int v) const { return verts_[v]; }
  int height() const { return verts_[root_].layer; }

 private:
  int root_;
  std::vector<Vertex> verts_;
};

/// A validated forest: unit-span edges, leaves exactly on layer 1, one
/// consistent embedding per tree. Immutable after construction.
class LayeredForest {
 public:
  int num_trees() const { return static_cast<int>(trees_.size()); }
  int num_layers() const { return num_layers_; }
  const Tree& tree(int i) const { return trees_[i]; }
  const Vertex& vertex(VertexRef r) const { return trees_[r.tree][r.index]; }

  const std::vector<VertexId>& leaf_order() const { return leaf_order_; }
  const std::vector<VertexRef>& leaf_refs() const { return leaf_refs_; }

  /// Position of a leaf in the global leaf order.
  int leaf_position(VertexRef r) const { return vertex(r).leftmost_leaf; }

  int total_vertices() const { return total_vertices_; }

  /// Highest layer actually carrying a vertex (<= num_layers()).
  int max_occupied_layer() const { return max_occupied_layer_; }

  std::optional<VertexRef> find(const VertexId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  friend LayeredForest validate_forest(const RawForest& raw);

  int num_layers_ = 0;
  int total_vertices_ = 0;
  int max_occupied_layer_ = 1;
  std::vector<Tree> trees_;
  std::vector<VertexId> leaf_order_;
  std::vector<VertexRef> leaf_refs_;
  std::unordered_map<VertexId, VertexRef> index_;
};

/// Checks the whole model contract and derives the per-tree embeddings.
///
/// Throws Error with kind CycleDetected, LongEdge, LeafNotOnLayerOne,
/// MissingLeafInOrder, NonContiguousLeaves, or Malformed.
LayeredForest validate_forest(const RawForest& raw);

/// Replaces every edge spanning two or more layers by a chain of dummy
/// vertices, one per skipped layer. Idempotent on proper forests.
RawForest subdivide_long_edges(const RawForest& raw);

}  // namespace treecross

#endif
