#pragma once

// Flat-array entry points for foreign callers (graph-learning pipelines).
// Edges come in as a 2 x E block (all sources, then all targets) and go out
// symmetrized: canonical edge i appears as entries 2i (u -> v) and
// 2i + 1 (v -> u). Taking every even entry recovers the native order.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "meshtree/bsms.hpp"
#include "meshtree/delaunay.hpp"
#include "meshtree/error.hpp"
#include "meshtree/mesh.hpp"
#include "meshtree/rewire.hpp"

namespace meshtree::arrays {

struct RewireArrays {
  std::vector<std::int64_t> edge_index;  // 2 x E'
  std::vector<std::uint8_t> edge_tag;    // 0 = mesh, 1 = tree
  std::vector<double> edge_attr;         // E' x D
};

struct PoolArrays {
  std::vector<std::int64_t> kept_nodes;
  std::vector<std::int64_t> coarse_edge_index;  // 2 x E'
  std::vector<std::int64_t> fine_to_coarse;
};

inline PointSet to_points(std::span<const double> positions, std::size_t dim) {
  if (dim == 0) throw Error("positions: dimension must be at least 1");
  if (positions.size() % dim != 0)
    throw Error("positions: length " + std::to_string(positions.size()) +
                " is not a multiple of dimension " + std::to_string(dim));
  if (positions.empty()) throw Error("positions: no nodes");
  return PointSet(dim, std::vector<double>(positions.begin(), positions.end()));
}

// Accepts one or both directions of each undirected edge.
inline std::vector<Edge> to_edges(std::span<const std::int64_t> edge_index, std::size_t n) {
  if (edge_index.size() % 2 != 0)
    throw Error("edge_index: length " + std::to_string(edge_index.size()) + " is not even");
  const std::size_t e = edge_index.size() / 2;
  std::vector<Edge> out;
  out.reserve(e);
  for (std::size_t i = 0; i < e; ++i) {
    const std::int64_t u = edge_index[i], v = edge_index[e + i];
    if (u < 0 || v < 0 || static_cast<std::uint64_t>(u) >= n || static_cast<std::uint64_t>(v) >= n)
      throw Error("edge_index: entry " + std::to_string(i) + " out of range");
    if (u == v) throw Error("edge_index: self-loop at entry " + std::to_string(i));
    out.push_back(Edge{static_cast<NodeId>(u), static_cast<NodeId>(v)}.canonical());
  }
  canonicalize(out);
  return out;
}

inline std::vector<std::int64_t> symmetrize(std::span<const Edge> edges) {
  const std::size_t e = edges.size() * 2;
  std::vector<std::int64_t> out(2 * e);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out[2 * i] = edges[i].u;
    out[2 * i + 1] = edges[i].v;
    out[e + 2 * i] = edges[i].v;
    out[e + 2 * i + 1] = edges[i].u;
  }
  return out;
}

inline RewireArrays rewire_arrays(std::span<const double> positions, std::size_t dim,
                                  std::span<const std::int64_t> edge_index, std::size_t levels,
                                  std::size_t merge_exponent) {
  Mesh mesh;
  mesh.positions = to_points(positions, dim);
  mesh.edges = to_edges(edge_index, mesh.node_count());
  const TaggedEdgeSet set = rewire(mesh, {levels, merge_exponent});

  RewireArrays out;
  out.edge_index = symmetrize(set.plain_edges());
  out.edge_tag.reserve(2 * set.size());
  out.edge_attr.reserve(2 * set.attributes.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto tag = static_cast<std::uint8_t>(set.edges[i].tag);
    out.edge_tag.push_back(tag);
    out.edge_tag.push_back(tag);
    const auto attr = set.attribute(i);
    out.edge_attr.insert(out.edge_attr.end(), attr.begin(), attr.end());
    for (double x : attr) out.edge_attr.push_back(-x);
  }
  return out;
}

inline std::vector<PoolArrays> pool_arrays(std::span<const double> positions, std::size_t dim,
                                           std::span<const std::int64_t> edge_index,
                                           std::size_t stages) {
  const PointSet points = to_points(positions, dim);
  const Graph g{points.size(), to_edges(edge_index, points.size())};
  const Pyramid pyramid = build_pyramid(g, points, stages);
  std::vector<PoolArrays> out;
  for (const auto& s : pyramid.stages) {
    PoolArrays a;
    a.kept_nodes.assign(s.kept_nodes.begin(), s.kept_nodes.end());
    a.coarse_edge_index = symmetrize(s.coarse_edges);
    a.fine_to_coarse.assign(s.fine_to_coarse.begin(), s.fine_to_coarse.end());
    out.push_back(std::move(a));
  }
  return out;
}

inline std::vector<std::int64_t> triangulate_arrays(std::span<const double> positions) {
  return symmetrize(delaunay_triangulate(to_points(positions, 2)).edges());
}

}  // namespace meshtree::arrays
