#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "meshtree/meshtree.hpp"

namespace meshtree::cli {
namespace {

constexpr std::size_t kExactDiameterLimit = 10000;
constexpr std::size_t kDefaultSamples = 32;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    if (!out) throw Error("write failure on standard output");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw Error("write failure on '" + path + "'");
}

Mesh load_mesh(const std::string& points_path, const std::string& edges_path) {
  auto p = open_input(points_path);
  auto e = open_input(edges_path);
  return read_graph(p, e);
}

PointSet load_points(const std::string& path) {
  auto in = open_input(path);
  return read_point_cloud(in);
}

std::optional<DiameterMode> parse_diameter(const std::string& s) {
  if (s == "exact") return DiameterMode::exact();
  constexpr std::string_view prefix = "sampled:";
  if (s.rfind(prefix, 0) != 0) return std::nullopt;
  const std::string digits = s.substr(prefix.size());
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n == 0) return std::nullopt;
  return DiameterMode::sampled(n);
}

std::optional<Bandwidth> parse_bandwidth(const std::string& s) {
  if (s == "auto") return Bandwidth{AutoBandwidth{}};
  double h = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), h);
  if (ec != std::errc() || ptr != s.data() + s.size() || !(h > 0.0) || !std::isfinite(h))
    return std::nullopt;
  return Bandwidth{h};
}

std::string pool_map_text(const PoolStage& stage) {
  std::string text;
  for (std::size_t v = 0; v < stage.fine_to_coarse.size(); ++v) {
    text += std::to_string(v);
    text += ' ';
    text += std::to_string(stage.fine_to_coarse[v]);
    text += ' ';
    text += std::to_string(stage.fronts[v]);
    text += '\n';
  }
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hierarchical tree-edge rewiring and diagnostics for mesh graphs", "meshtree"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string points, edges, output = "-";
  std::size_t levels = 0, merge_exponent = 1, stages = 5, grid = 128;
  std::string diameter, bandwidth = "auto";

  auto* tri = app.add_subcommand("triangulate", "Delaunay edges of a 2-d point cloud");
  tri->add_option("points", points, "point file")->required();
  tri->add_option("-o,--output", output, "edge file, '-' for standard output");

  auto* rew = app.add_subcommand("rewire", "add hierarchical tree edges to a mesh graph");
  rew->add_option("points", points, "point file")->required();
  rew->add_option("edges", edges, "edge file")->required();
  rew->add_option("--levels", levels, "number of recursive splits")
      ->required()->check(CLI::Range(std::size_t{1}, std::size_t{30}));
  rew->add_option("--merge-exponent", merge_exponent, "merge 2^M bins per hierarchy step")
      ->check(CLI::Range(std::size_t{1}, std::size_t{30}))->capture_default_str();
  rew->add_option("-o,--output", output, "tagged edge file, '-' for standard output");

  auto* pool = app.add_subcommand("pool", "bi-stride pooling pyramid");
  pool->add_option("points", points, "point file")->required();
  pool->add_option("edges", edges, "edge file")->required();
  pool->add_option("--stages", stages, "number of pooling stages")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}))->capture_default_str();
  pool->add_option("-o,--output", output,
                   "output prefix; writes PREFIX.stageN.edges and PREFIX.stageN.map");

  auto* stats = app.add_subcommand("stats", "connectivity, diameter and degree report");
  stats->add_option("points", points, "point file")->required();
  stats->add_option("edges", edges, "edge file")->required();
  stats->add_option("--diameter", diameter, "exact or sampled:N")
      ->check([](const std::string& s) {
        return parse_diameter(s) ? std::string() : "expected 'exact' or 'sampled:N'";
      });
  stats->add_option("-o,--output", output, "report file, '-' for standard output");

  auto* dens = app.add_subcommand("density", "Gaussian kernel density on a grid");
  dens->add_option("points", points, "point file")->required();
  dens->add_option("--bandwidth", bandwidth, "H or auto")
      ->check([](const std::string& s) {
        return parse_bandwidth(s) ? std::string() : "expected a positive number or 'auto'";
      })->capture_default_str();
  dens->add_option("--grid", grid, "cells per axis")
      ->check(CLI::Range(std::size_t{2}, std::size_t{4096}))->capture_default_str();
  dens->add_option("-o,--output", output, "report file, '-' for standard output");

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  if (storage.empty()) storage.push_back("meshtree");
  for (auto& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return 2;
  }

  try {
    std::ostringstream text;
    if (tri->parsed()) {
      const auto t = delaunay_triangulate(load_points(points));
      write_graph(tag_all(t.edges(), EdgeTag::Mesh), text);
    } else if (rew->parsed()) {
      const auto result = rewire(load_mesh(points, edges), {levels, merge_exponent});
      write_graph(result, text);
    } else if (pool->parsed()) {
      const Mesh mesh = load_mesh(points, edges);
      const auto pyramid = build_pyramid(graph_of(mesh), mesh.positions, stages);
      for (std::size_t s = 0; s < pyramid.stages.size(); ++s) {
        const auto& stage = pyramid.stages[s];
        const std::string base = "stage" + std::to_string(s + 1);
        std::ostringstream edge_text;
        write_graph(tag_all(stage.coarse_edges, EdgeTag::Mesh), edge_text);
        if (output == "-") {
          text << "# " << base << ".edges\n" << edge_text.str();
          text << "# " << base << ".map\n" << pool_map_text(stage);
        } else {
          emit(output + "." + base + ".edges", edge_text.str(), out);
          emit(output + "." + base + ".map", pool_map_text(stage), out);
        }
      }
      if (output != "-") return 0;
    } else if (stats->parsed()) {
      const Mesh mesh = load_mesh(points, edges);
      DiameterMode mode = mesh.node_count() > kExactDiameterLimit
                              ? DiameterMode::sampled(kDefaultSamples)
                              : DiameterMode::exact();
      if (!diameter.empty()) mode = *parse_diameter(diameter);
      write_report(graph_report(graph_of(mesh), mode), text);
    } else if (dens->parsed()) {
      write_report(density_kde(load_points(points), *parse_bandwidth(bandwidth), grid), text);
    }
    emit(output, text.str(), out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace meshtree::cli
