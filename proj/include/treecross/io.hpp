#ifndef TREECROSS_IO_HPP
#define TREECROSS_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treecross/drawing.hpp"
#include "treecross/forest.hpp"

namespace treecross {

struct InstanceOptions {
  std::optional<std::vector<VertexId>> root_order;
  std::vector<std::pair<VertexId, VertexId>> constraints;
};

struct ParsedInstance {
  RawForest forest;
  InstanceOptions options;
};

/// Strict reader for the instance document. Unknown fields, wrong types and
/// out-of-range layers are SchemaError with the offending path; semantic
/// checks stay with validate_forest.
ParsedInstance parse_instance(const std::string& text);

/// Inverse of parse_instance for validated forests.
std::string emit_instance_json(const LayeredForest& forest, const InstanceOptions& options = {});

/// Drawing as JSON: per-layer ordered vertex lists with coordinates
/// (x = index, y = layer), dummy markers, crossing count, algorithm name.
std::string emit_drawing_json(const LayeredForest& forest, const Drawing& d, std::int64_t crossings,
                              const std::string& algorithm);

/// Reads a drawing document back (ids may be bare strings or objects with an
/// "id" field).
Drawing parse_drawing(const std::string& text, const LayeredForest& forest);

/// Plain SVG: layers as horizontal rows at y = layer * 80, vertices at
/// x = index * 40, straight edges, dummies as small dots. Byte-deterministic.
std::string emit_drawing_svg(const LayeredForest& forest, const Drawing& d, std::int64_t crossings,
                             const std::string& algorithm);

}  // namespace treecross

#endif
