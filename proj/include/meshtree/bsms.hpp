#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "meshtree/error.hpp"
#include "meshtree/mesh.hpp"
#include "meshtree/metrics.hpp"
#include "meshtree/partition.hpp"

namespace meshtree {

// Hop distance from every node to its nearest seed.
inline std::vector<std::size_t> bfs_fronts(const Graph& g, std::span<const NodeId> seeds) {
  require_valid(g);
  if (seeds.empty()) throw Error("no seeds given");
  for (NodeId s : seeds)
    if (s >= g.node_count) throw Error("seed index out of range");
  auto fronts = bfs_distances(Adjacency(g), seeds);
  for (std::size_t v = 0; v < fronts.size(); ++v)
    if (fronts[v] == kUnreached)
      throw Error("uncovered component: node " + std::to_string(v) + " is unreachable from every seed");
  return fronts;
}

// Adds every pair at hop distance two, i.e. the pattern of A + A^2 without
// the diagonal.
inline Graph enhance_adjacency(const Graph& g) {
  require_valid(g);
  const Adjacency adj(g);
  std::vector<Edge> edges = g.edges;
  for (std::size_t v = 0; v < g.node_count; ++v) {
    const auto nb = adj.neighbors(static_cast<NodeId>(v));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (nb[i] != nb[j]) edges.push_back({nb[i], nb[j]});
  }
  canonicalize(edges);
  return {g.node_count, std::move(edges)};
}

struct PoolStage {
  std::vector<NodeId> kept_nodes;    // fine ids, ascending; coarse id = position
  std::vector<Edge> coarse_edges;    // over coarse ids, canonical order
  std::vector<NodeId> fine_to_coarse;
  std::vector<std::size_t> fronts;   // BFS front of every fine node

  std::size_t coarse_count() const { return kept_nodes.size(); }
  bool front_parity_even(NodeId v) const { return fronts[v] % 2 == 0; }
};

// One bi-stride pooling step.
//
// Fronts come from BFS over the input graph; nodes on even fronts survive.
// Two kept nodes are joined when they are adjacent in the 2-hop enhanced
// graph. Each dropped node maps to its lowest-id kept neighbour.
inline PoolStage pool_stage(const Graph& g, std::span<const NodeId> seeds) {
  PoolStage out;
  out.fronts = bfs_fronts(g, seeds);
  const Graph enhanced = enhance_adjacency(g);

  constexpr NodeId kDropped = std::numeric_limits<NodeId>::max();
  out.fine_to_coarse.assign(g.node_count, kDropped);
  for (std::size_t v = 0; v < g.node_count; ++v) {
    if (out.fronts[v] % 2 == 0) {
      out.fine_to_coarse[v] = static_cast<NodeId>(out.kept_nodes.size());
      out.kept_nodes.push_back(static_cast<NodeId>(v));
    }
  }

  for (const auto& e : enhanced.edges) {
    const NodeId a = out.fine_to_coarse[e.u];
    const NodeId b = out.fine_to_coarse[e.v];
    if (a != kDropped && b != kDropped) out.coarse_edges.push_back({a, b});
  }
  canonicalize(out.coarse_edges);

  // Odd-front nodes always have a neighbour one front closer to a seed.
  const Adjacency adj(g);
  for (std::size_t v = 0; v < g.node_count; ++v) {
    if (out.fronts[v] % 2 == 0) continue;
    NodeId best = kDropped;
    for (NodeId w : adj.neighbors(static_cast<NodeId>(v)))
      if (out.fronts[w] % 2 == 0) best = std::min(best, out.fine_to_coarse[w]);
    out.fine_to_coarse[v] = best;
  }
  return out;
}

// Seed policy: the center node of each connected component.
inline std::vector<NodeId> component_seeds(const Graph& g, const PointSet& points) {
  if (points.size() != g.node_count) throw Error("position count does not match node count");
  const auto comps = connected_components(g);
  std::vector<std::vector<NodeId>> members(comps.count);
  for (std::size_t v = 0; v < g.node_count; ++v)
    members[comps.component_id[v]].push_back(static_cast<NodeId>(v));
  std::vector<NodeId> seeds;
  seeds.reserve(comps.count);
  for (const auto& m : members) seeds.push_back(center_node(m, points));
  std::sort(seeds.begin(), seeds.end());
  return seeds;
}

inline PoolStage pool_stage(const Graph& g, const PointSet& points) {
  return pool_stage(g, component_seeds(g, points));
}

struct Pyramid {
  std::vector<PoolStage> stages;
};

// Repeated pooling. Stops after `stages` levels, once a single node is left,
// or when a stage removes nothing (every node is its own seed).
inline Pyramid build_pyramid(const Graph& g, const PointSet& points, std::size_t stages) {
  if (stages < 1) throw Error("stage count must be at least 1");
  if (g.node_count == 0) throw Error("cannot pool an empty graph");
  Pyramid out;
  Graph level = g;
  PointSet level_points = points;
  for (std::size_t s = 0; s < stages; ++s) {
    PoolStage stage = pool_stage(level, level_points);
    const std::size_t before = level.node_count;
    level_points = level_points.subset(stage.kept_nodes);
    level = Graph{stage.kept_nodes.size(), stage.coarse_edges};
    out.stages.push_back(std::move(stage));
    if (level.node_count <= 1 || level.node_count == before) break;
  }
  return out;
}

}  // namespace meshtree
