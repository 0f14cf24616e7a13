// treecross: crossing-minimal layered drawings of tree forests.
//
// Exit codes: 0 success, 2 invalid input, 3 infeasible constraints,
// 4 size guard tripped.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "treecross/constraint.hpp"
#include "treecross/drawing.hpp"
#include "treecross/error.hpp"
#include "treecross/forest.hpp"
#include "treecross/generator.hpp"
#include "treecross/grid_solver.hpp"
#include "treecross/io.hpp"
#include "treecross/oracle.hpp"
#include "treecross/two_tree_dp.hpp"

namespace {

using namespace treecross;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Malformed, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Malformed, "cannot open '" + path + "' for writing");
  out << text;
}

struct LoadedInstance {
  LayeredForest forest;
  std::vector<Constraint> constraints;
  std::optional<std::vector<VertexRef>> root_order;
};

LoadedInstance load_instance(const std::string& input, const std::vector<std::string>& cli_roots) {
  ParsedInstance parsed = parse_instance(read_input(input));
  LoadedInstance out{validate_forest(subdivide_long_edges(parsed.forest)), {}, std::nullopt};
  out.constraints = resolve_constraints(out.forest, parsed.options.constraints);

  const std::vector<VertexId>* ids = nullptr;
  if (!cli_roots.empty())
    ids = &cli_roots;
  else if (parsed.options.root_order)
    ids = &*parsed.options.root_order;
  if (ids) {
    std::vector<VertexRef> refs;
    for (const VertexId& id : *ids) {
      auto ref = out.forest.find(id);
      if (!ref) fail(ErrorKind::Malformed, "root order references unknown vertex '" + id + "'");
      refs.push_back(*ref);
    }
    out.root_order = std::move(refs);
  }
  return out;
}

int run_solve(const std::string& input, std::string algorithm, const std::string& format,
              const std::string& out_path, const std::vector<std::string>& cli_roots,
              std::uint64_t max_cells) {
  LoadedInstance inst = load_instance(input, cli_roots);
  const int k = inst.forest.num_trees();
  const int occupied = inst.forest.max_occupied_layer();

  if (algorithm == "auto") {
    if (!inst.constraints.empty() || inst.root_order)
      algorithm = "grid3";
    else if (k == 2)
      algorithm = "dp2";
    else if (occupied <= 3)
      algorithm = "grid3";
    else
      fail(ErrorKind::InvalidParams,
           "no exact algorithm for " + std::to_string(k) + " trees on " + std::to_string(occupied) +
               " layers: the case of 3 or more trees on 4 or more layers is open");
  }

  Drawing drawing;
  std::int64_t crossings = 0;
  if (algorithm == "dp2") {
    if (!inst.constraints.empty() || inst.root_order)
      fail(ErrorKind::InvalidParams, "dp2 does not support constraints or a fixed root order");
    TwoTreeSolution sol = solve_two_trees(inst.forest);
    drawing = std::move(sol.drawing);
    crossings = sol.crossings;
  } else {
    ThreeLayerSolution sol = solve_three_layer(inst.forest, inst.constraints, inst.root_order, max_cells);
    drawing = std::move(sol.drawing);
    crossings = sol.crossings;
  }

  write_output(out_path, format == "svg" ? emit_drawing_svg(inst.forest, drawing, crossings, algorithm)
                                         : emit_drawing_json(inst.forest, drawing, crossings, algorithm));
  return 0;
}

int run_oracle(const std::string& input, const std::string& format, const std::string& out_path,
               const std::vector<std::string>& cli_roots) {
  LoadedInstance inst = load_instance(input, cli_roots);
  std::vector<Constraint> constraints = inst.constraints;
  if (inst.root_order) {
    // a fixed root order is just a chain of precedence constraints
    for (std::size_t i = 0; i + 1 < inst.root_order->size(); ++i)
      constraints.push_back({(*inst.root_order)[i], (*inst.root_order)[i + 1]});
  }
  OracleResult res = brute_force_min(inst.forest, constraints);
  write_output(out_path, format == "svg" ? emit_drawing_svg(inst.forest, res.drawing, res.crossings, "oracle")
                                         : emit_drawing_json(inst.forest, res.drawing, res.crossings, "oracle"));
  return 0;
}

int run_gen(const GenParams& params, const std::string& out_path) {
  LayeredForest forest = gen_instance(params);
  write_output(out_path, emit_instance_json(forest));
  return 0;
}

int run_check(const std::string& instance_path, const std::string& drawing_path,
              const std::string& out_path) {
  ParsedInstance parsed = parse_instance(read_input(instance_path));
  LayeredForest forest = validate_forest(subdivide_long_edges(parsed.forest));
  Drawing d = parse_drawing(read_input(drawing_path), forest);
  std::int64_t crossings = count_crossings(forest, d);
  write_output(out_path, "{\n  \"valid\": true,\n  \"crossings\": " + std::to_string(crossings) + "\n}\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crossing-minimal layered drawings of forests of rooted trees"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::string algorithm = "auto";
  std::string format = "json";
  std::vector<std::string> cli_roots;
  std::uint64_t max_cells = kDefaultMaxGridCells;

  auto* solve = app.add_subcommand("solve", "compute a crossing-minimal drawing");
  solve->add_option("input", input, "instance JSON file ('-' or absent: stdin)");
  solve->add_option("--algorithm", algorithm, "auto, dp2 (two trees) or grid3 (up to 3 layers)")
      ->check(CLI::IsMember({"auto", "dp2", "grid3"}));
  solve->add_option("--format", format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  solve->add_option("--out", out_path, "output file (default: stdout)");
  solve->add_option("--fixed-root-order", cli_roots, "comma-separated root ids, overrides the document")
      ->delimiter(',');
  solve->add_option("--max-grid-cells", max_cells, "size guard for the grid solver");

  auto* oracle = app.add_subcommand("oracle", "exhaustive minimum (small instances only)");
  oracle->add_option("input", input, "instance JSON file ('-' or absent: stdin)");
  oracle->add_option("--format", format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  oracle->add_option("--out", out_path, "output file (default: stdout)");
  oracle->add_option("--fixed-root-order", cli_roots, "comma-separated root ids, overrides the document")
      ->delimiter(',');

  GenParams params;
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--seed", params.seed, "RNG seed");
  gen->add_option("--trees", params.num_trees, "number of trees");
  gen->add_option("--layers", params.num_layers, "number of layers");
  gen->add_option("--n", params.n_target, "total vertex count");
  gen->add_option("--bias", params.interleave_bias, "leaf interleaving bias in [0,1]");
  gen->add_option("--out", out_path, "output file (default: stdout)");

  std::string drawing_path;
  auto* check = app.add_subcommand("check", "validate a drawing and count its crossings");
  check->add_option("instance", input, "instance JSON file")->required();
  check->add_option("drawing", drawing_path, "drawing JSON file")->required();
  check->add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return run_solve(input, algorithm, format, out_path, cli_roots, max_cells);
    if (oracle->parsed()) return run_oracle(input, format, out_path, cli_roots);
    if (gen->parsed()) return run_gen(params, out_path);
    return run_check(input, drawing_path, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::Infeasible) return 3;
    if (e.kind() == ErrorKind::TooLarge) return 4;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
