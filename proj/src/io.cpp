#include "treecross/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace treecross {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& message) {
  fail(ErrorKind::SchemaError, path + ": " + message);
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known) schema_fail(path + "." + key, "unknown field");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path + "." + key, "missing required field");
  return *it;
}

std::string as_id(const json& value, const std::string& path) {
  if (!value.is_string() || value.get<std::string>().empty())
    schema_fail(path, "expected a non-empty string");
  return value.get<std::string>();
}

std::vector<std::pair<VertexId, VertexId>> parse_id_pairs(const json& arr, const std::string& path) {
  if (!arr.is_array()) schema_fail(path, "expected an array of [x, y] pairs");
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& pair = arr[i];
    std::string p = path + "[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2) schema_fail(p, "expected a pair of ids");
    out.emplace_back(as_id(pair[0], p + "[0]"), as_id(pair[1], p + "[1]"));
  }
  return out;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    schema_fail("$", e.what());
  }
  if (!doc.is_object()) schema_fail("$", "expected an object");
  reject_unknown(doc, "$", {"layers", "trees", "leaf_order", "root_order", "constraints"});

  ParsedInstance out;

  const json& layers = require(doc, "$", "layers");
  if (!layers.is_number_integer() || layers.get<std::int64_t>() < 2)
    schema_fail("$.layers", "expected an integer >= 2");
  out.forest.num_layers = layers.get<int>();

  const json& trees = require(doc, "$", "trees");
  if (!trees.is_array() || trees.empty()) schema_fail("$.trees", "expected a non-empty array");
  for (std::size_t i = 0; i < trees.size(); ++i) {
    std::string path = "$.trees[" + std::to_string(i) + "]";
    const json& jt = trees[i];
    if (!jt.is_object()) schema_fail(path, "expected an object");
    reject_unknown(jt, path, {"root", "edges", "layer"});

    RawTree rt;
    rt.root = as_id(require(jt, path, "root"), path + ".root");

    const json& layer_map = require(jt, path, "layer");
    if (!layer_map.is_object() || layer_map.empty())
      schema_fail(path + ".layer", "expected a non-empty object of vertex layers");
    for (const auto& [id, value] : layer_map.items()) {
      if (id.empty()) schema_fail(path + ".layer", "empty vertex id");
      if (!value.is_number_integer() || value.get<std::int64_t>() < 1 ||
          value.get<std::int64_t>() > out.forest.num_layers)
        schema_fail(path + ".layer." + id,
                    "expected an integer in 1.." + std::to_string(out.forest.num_layers));
      if (!rt.layers.emplace(id, value.get<int>()).second)
        schema_fail(path + ".layer." + id, "duplicate vertex");
    }

    auto it = jt.find("edges");
    if (it != jt.end())
      for (auto& [child, parent] : parse_id_pairs(*it, path + ".edges")) rt.edges.emplace_back(child, parent);
    out.forest.trees.push_back(std::move(rt));
  }

  const json& leaf_order = require(doc, "$", "leaf_order");
  if (!leaf_order.is_array() || leaf_order.empty())
    schema_fail("$.leaf_order", "expected a non-empty array of leaf ids");
  for (std::size_t i = 0; i < leaf_order.size(); ++i)
    out.forest.leaf_order.push_back(as_id(leaf_order[i], "$.leaf_order[" + std::to_string(i) + "]"));

  if (auto it = doc.find("root_order"); it != doc.end()) {
    if (!it->is_array()) schema_fail("$.root_order", "expected an array of root ids");
    std::vector<VertexId> order;
    for (std::size_t i = 0; i < it->size(); ++i)
      order.push_back(as_id((*it)[i], "$.root_order[" + std::to_string(i) + "]"));
    out.options.root_order = std::move(order);
  }
  if (auto it = doc.find("constraints"); it != doc.end())
    out.options.constraints = parse_id_pairs(*it, "$.constraints");

  return out;
}

std::string emit_instance_json(const LayeredForest& forest, const InstanceOptions& options) {
  json doc;
  doc["layers"] = forest.num_layers();
  doc["trees"] = json::array();
  for (int t = 0; t < forest.num_trees(); ++t) {
    const Tree& tree = forest.tree(t);
    json jt;
    jt["root"] = tree[tree.root()].id;
    json edges = json::array();
    for (int v = 0; v < tree.size(); ++v)
      if (tree[v].parent != -1) edges.push_back({tree[v].id, tree[tree[v].parent].id});
    jt["edges"] = std::move(edges);
    json layer_map = json::object();
    for (int v = 0; v < tree.size(); ++v) layer_map[tree[v].id] = tree[v].layer;
    jt["layer"] = std::move(layer_map);
    doc["trees"].push_back(std::move(jt));
  }
  doc["leaf_order"] = forest.leaf_order();
  if (options.root_order) doc["root_order"] = *options.root_order;
  if (!options.constraints.empty()) {
    json cons = json::array();
    for (const auto& [x, y] : options.constraints) cons.push_back({x, y});
    doc["constraints"] = std::move(cons);
  }
  return doc.dump(2) + "\n";
}

std::string emit_drawing_json(const LayeredForest& forest, const Drawing& d, std::int64_t crossings,
                              const std::string& algorithm) {
  json doc;
  doc["algorithm"] = algorithm;
  doc["crossings"] = crossings;
  doc["layers"] = json::array();
  for (int layer = 1; layer <= static_cast<int>(d.layers.size()); ++layer) {
    json line = json::array();
    const auto& refs = d.layers[layer - 1];
    for (int x = 0; x < static_cast<int>(refs.size()); ++x) {
      const Vertex& v = forest.vertex(refs[x]);
      json jv;
      jv["id"] = v.id;
      jv["x"] = x;
      jv["y"] = layer;
      jv["dummy"] = v.dummy;
      line.push_back(std::move(jv));
    }
    doc["layers"].push_back(std::move(line));
  }
  return doc.dump(2) + "\n";
}

Drawing parse_drawing(const std::string& text, const LayeredForest& forest) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    schema_fail("$", e.what());
  }
  if (!doc.is_object()) schema_fail("$", "expected an object");
  reject_unknown(doc, "$", {"algorithm", "crossings", "layers"});

  const json& layers = require(doc, "$", "layers");
  if (!layers.is_array()) schema_fail("$.layers", "expected an array of layers");

  Drawing d;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    std::string path = "$.layers[" + std::to_string(i) + "]";
    if (!layers[i].is_array()) schema_fail(path, "expected an array of vertices");
    std::vector<VertexRef> line;
    for (std::size_t x = 0; x < layers[i].size(); ++x) {
      const json& jv = layers[i][x];
      std::string vp = path + "[" + std::to_string(x) + "]";
      VertexId id;
      if (jv.is_string()) {
        id = as_id(jv, vp);
      } else if (jv.is_object()) {
        id = as_id(require(jv, vp, "id"), vp + ".id");
      } else {
        schema_fail(vp, "expected a vertex id or object");
      }
      auto ref = forest.find(id);
      if (!ref) schema_fail(vp, "unknown vertex '" + id + "'");
      line.push_back(*ref);
    }
    d.layers.push_back(std::move(line));
  }
  return d;
}

std::string emit_drawing_svg(const LayeredForest& forest, const Drawing& d, std::int64_t crossings,
                             const std::string& algorithm) {
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  const int num_layers = static_cast<int>(d.layers.size());

  int max_len = 1;
  for (const auto& line : d.layers) max_len = std::max(max_len, static_cast<int>(line.size()));
  int width = (max_len - 1) * 40 + 40;
  int height = num_layers * 80;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"-20 40 " << width << " " << height << "\">\n";
  svg << "  <title>" << algorithm << ": " << crossings << " crossings</title>\n";

  auto x_of = [&](VertexRef r) {
    const auto& line = d.layers[forest.vertex(r).layer - 1];
    for (int x = 0; x < static_cast<int>(line.size()); ++x)
      if (line[x] == r) return x * 40;
    return -1;
  };

  for (int layer = 1; layer <= num_layers; ++layer)
    for (const VertexRef& r : d.layers[layer - 1]) {
      const Vertex& v = forest.vertex(r);
      if (v.parent == -1) continue;
      svg << "  <line x1=\"" << x_of(r) << "\" y1=\"" << layer * 80 << "\" x2=\""
          << x_of(VertexRef{r.tree, v.parent}) << "\" y2=\"" << (layer + 1) * 80
          << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    }

  for (int layer = 1; layer <= num_layers; ++layer) {
    const auto& line = d.layers[layer - 1];
    for (int x = 0; x < static_cast<int>(line.size()); ++x) {
      const Vertex& v = forest.vertex(line[x]);
      const char* color = kPalette[line[x].tree % 8];
      if (v.dummy) {
        svg << "  <circle cx=\"" << x * 40 << "\" cy=\"" << layer * 80
            << "\" r=\"2\" fill=\"#888888\"/>\n";
      } else {
        svg << "  <circle cx=\"" << x * 40 << "\" cy=\"" << layer * 80 << "\" r=\"4\" fill=\"" << color
            << "\"/>\n";
        svg << "  <text x=\"" << x * 40 + 6 << "\" y=\"" << layer * 80 - 6
            << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#222222\">" << v.id
            << "</text>\n";
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace treecross
