#ifndef TREECROSS_CONSTRAINT_HPP
#define TREECROSS_CONSTRAINT_HPP

#include <string>
#include <utility>
#include <vector>

#include "treecross/forest.hpp"

namespace treecross {

/// Precedence requirement: `before` must appear left of `after` on their
/// common layer.
struct Constraint {
  VertexRef before;
  VertexRef after;
};

/// Maps id pairs onto refs. Both endpoints must exist, be distinct, and sit
/// on the same layer; anything else is Malformed.
inline std::vector<Constraint> resolve_constraints(
    const LayeredForest& forest, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<Constraint> out;
  out.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    auto rx = forest.find(x);
    auto ry = forest.find(y);
    if (!rx) fail(ErrorKind::Malformed, "constraint references unknown vertex '" + x + "'");
    if (!ry) fail(ErrorKind::Malformed, "constraint references unknown vertex '" + y + "'");
    if (*rx == *ry) fail(ErrorKind::Malformed, "constraint relates '" + x + "' to itself");
    if (forest.vertex(*rx).layer != forest.vertex(*ry).layer)
      fail(ErrorKind::Malformed,
           "constraint endpoints '" + x + "' and '" + y + "' sit on different layers");
    out.push_back({*rx, *ry});
  }
  return out;
}

}  // namespace treecross

#endif
