#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "meshtree/error.hpp"
#include "meshtree/mesh.hpp"
#include "meshtree/partition.hpp"

namespace meshtree {

struct RewireParams {
  std::size_t levels = 1;          // k, number of recursive splits
  std::size_t merge_exponent = 1;  // m, each hierarchy step merges 2^m bins

  void check() const {
    if (levels < 1) throw Error("levels must be at least 1");
    if (merge_exponent < 1) throw Error("merge exponent must be at least 1");
  }
};

// Tree depths whose bins are linked to the next selected depth:
// 0, m, 2m, ... and finally k. When m does not divide k the last step
// covers only the k mod m remaining levels.
inline std::vector<std::size_t> hierarchy_levels(const RewireParams& p) {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < p.levels; l += p.merge_exponent) out.push_back(l);
  out.push_back(p.levels);
  return out;
}

namespace detail {

// Descendants of `from` that sit on depth `target`, or the leaf that ends a
// path before reaching it.
inline void collect_descendants(const PartitionTree& tree, std::size_t from,
                                std::size_t target, std::vector<std::size_t>& out) {
  const auto& n = tree.node(from);
  for (std::size_t child : {n.lo, n.hi}) {
    const auto& c = tree.node(child);
    if (c.depth == target || c.is_leaf())
      out.push_back(child);
    else
      collect_descendants(tree, child, target, out);
  }
}

inline void sort_tagged(std::vector<TaggedEdge>& edges) {
  std::sort(edges.begin(), edges.end());
}

}  // namespace detail

// Hierarchical tree edges for a partition tree, all tagged Tree.
//
// Every leaf bin becomes a star around its center node. Then, for each
// selected depth, the center of every bin there is linked to the centers of
// its descendant bins on the next selected depth.
inline TaggedEdgeSet emit_tree_edges(const PartitionTree& tree, const PointSet& points,
                                     const RewireParams& params) {
  params.check();
  if (tree.levels() != params.levels)
    throw Error("partition tree depth does not match requested levels");
  if (tree.root().bin.size() != points.size())
    throw Error("partition tree was built from a different point set");

  const auto nodes = tree.nodes();
  std::vector<NodeId> centers(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) centers[i] = center_node(nodes[i].bin, points);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].is_leaf()) continue;
    for (NodeId v : nodes[i].bin)
      if (v != centers[i]) edges.push_back(Edge{centers[i], v}.canonical());
  }

  const auto selected = hierarchy_levels(params);
  std::vector<std::size_t> next_depth(params.levels + 1, 0);
  for (std::size_t j = 0; j + 1 < selected.size(); ++j)
    for (std::size_t d = selected[j]; d < selected[j + 1]; ++d) next_depth[d] = selected[j + 1];
  std::vector<bool> is_selected(params.levels + 1, false);
  for (std::size_t l : selected) is_selected[l] = true;

  std::vector<std::size_t> below;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    if (n.is_leaf() || !is_selected[n.depth]) continue;
    below.clear();
    detail::collect_descendants(tree, i, next_depth[n.depth], below);
    for (std::size_t c : below)
      if (centers[c] != centers[i]) edges.push_back(Edge{centers[i], centers[c]}.canonical());
  }

  canonicalize(edges);
  TaggedEdgeSet out;
  out.edges.reserve(edges.size());
  for (const auto& e : edges) out.edges.push_back({e.u, e.v, EdgeTag::Tree});
  return out;
}

// Fills attributes with positions[v] - positions[u] for each stored edge.
inline TaggedEdgeSet edge_attributes(TaggedEdgeSet set, const PointSet& points) {
  const std::size_t dim = points.dim();
  set.attribute_dim = dim;
  set.attributes.assign(set.edges.size() * dim, 0.0);
  for (std::size_t e = 0; e < set.edges.size(); ++e) {
    const auto& edge = set.edges[e];
    if (edge.u >= points.size() || edge.v >= points.size())
      throw Error("edge index out of range at edge " + std::to_string(e));
    for (std::size_t a = 0; a < dim; ++a)
      set.attributes[e * dim + a] = points.coord(edge.v, a) - points.coord(edge.u, a);
  }
  return set;
}

// Mesh edges plus hierarchical tree edges, with relative displacements.
// A tree edge that coincides with a mesh edge is dropped.
inline TaggedEdgeSet rewire(const Mesh& mesh, const RewireParams& params) {
  require_valid(mesh);
  params.check();

  std::vector<Edge> mesh_edges = mesh.edges;
  canonicalize(mesh_edges);

  TaggedEdgeSet tree_edges =
      emit_tree_edges(build_partition_tree(mesh.positions, params.levels), mesh.positions, params);

  TaggedEdgeSet out;
  out.edges.reserve(mesh_edges.size() + tree_edges.size());
  for (const auto& e : mesh_edges) out.edges.push_back({e.u, e.v, EdgeTag::Mesh});
  for (const auto& e : tree_edges.edges)
    if (!std::binary_search(mesh_edges.begin(), mesh_edges.end(), Edge{e.u, e.v}))
      out.edges.push_back(e);
  detail::sort_tagged(out.edges);
  return edge_attributes(std::move(out), mesh.positions);
}

}  // namespace meshtree
