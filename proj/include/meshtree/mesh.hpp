#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "meshtree/error.hpp"

namespace meshtree {

using NodeId = std::uint32_t;

// N points in D dimensions, stored row-major.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dim, std::vector<double> coords)
      : dim_(dim), coords_(std::move(coords)) {
    if (dim_ == 0) throw Error("point dimension must be at least 1");
    if (coords_.size() % dim_ != 0)
      throw Error("coordinate count is not a multiple of the dimension");
  }

  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return size() == 0; }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  double coord(std::size_t i, std::size_t axis) const {
    return coords_[i * dim_ + axis];
  }
  const std::vector<double>& coords() const { return coords_; }

  // Points selected by index, in the given order.
  PointSet subset(std::span<const NodeId> ids) const {
    std::vector<double> out;
    out.reserve(ids.size() * dim_);
    for (NodeId id : ids) {
      auto p = (*this)[id];
      out.insert(out.end(), p.begin(), p.end());
    }
    return PointSet(dim_, std::move(out));
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

// Undirected edge. Canonical form has u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  Edge canonical() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class EdgeTag : std::uint8_t { Mesh = 0, Tree = 1 };

inline char tag_letter(EdgeTag t) { return t == EdgeTag::Mesh ? 'M' : 'T'; }

struct TaggedEdge {
  NodeId u = 0;
  NodeId v = 0;
  EdgeTag tag = EdgeTag::Mesh;

  friend auto operator<=>(const TaggedEdge&, const TaggedEdge&) = default;
};

// Edge list in canonical order (u, then v, then tag). When attributes are
// present, attributes[e * attribute_dim + a] is the relative displacement of
// edge e along axis a.
struct TaggedEdgeSet {
  std::vector<TaggedEdge> edges;
  std::size_t attribute_dim = 0;
  std::vector<double> attributes;

  bool has_attributes() const { return attribute_dim != 0; }
  std::size_t size() const { return edges.size(); }
  std::span<const double> attribute(std::size_t e) const {
    return {attributes.data() + e * attribute_dim, attribute_dim};
  }
  std::size_t count(EdgeTag tag) const {
    return static_cast<std::size_t>(std::count_if(
        edges.begin(), edges.end(),
        [tag](const TaggedEdge& e) { return e.tag == tag; }));
  }
  std::vector<Edge> plain_edges() const {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.push_back({e.u, e.v});
    return out;
  }
  std::vector<Edge> plain_edges(EdgeTag tag) const {
    std::vector<Edge> out;
    for (const auto& e : edges)
      if (e.tag == tag) out.push_back({e.u, e.v});
    return out;
  }

  friend bool operator==(const TaggedEdgeSet&, const TaggedEdgeSet&) = default;
};

struct Mesh {
  PointSet positions;
  std::vector<Edge> edges;

  std::size_t node_count() const { return positions.size(); }
};

// Topology only; used by the graph algorithms that ignore geometry.
struct Graph {
  std::size_t node_count = 0;
  std::vector<Edge> edges;
};

inline Graph graph_of(const Mesh& mesh) {
  return {mesh.node_count(), mesh.edges};
}

// Sorts to canonical orientation and order and removes repeats.
inline void canonicalize(std::vector<Edge>& edges) {
  for (auto& e : edges) e = e.canonical();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

// Compressed sparse row adjacency of an undirected graph, neighbours sorted.
class Adjacency {
 public:
  Adjacency(std::size_t node_count, std::span<const Edge> edges)
      : offsets_(node_count + 1, 0) {
    for (const auto& e : edges) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < node_count; ++i) offsets_[i + 1] += offsets_[i];
    targets_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges) {
      targets_[fill[e.u]++] = e.v;
      targets_[fill[e.v]++] = e.u;
    }
    for (std::size_t i = 0; i < node_count; ++i)
      std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }
  explicit Adjacency(const Graph& g) : Adjacency(g.node_count, g.edges) {}

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

struct Violation {
  enum class Kind {
    EmptyMesh,
    NonFiniteCoordinate,
    IndexOutOfRange,
    SelfLoop,
    DuplicatePair
  };
  Kind kind;
  std::size_t index;  // node index for coordinates, edge index otherwise
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

// Reports every broken Mesh invariant. Never throws.
inline ValidationResult validate_mesh(const Mesh& mesh) {
  ValidationResult result;
  auto add = [&](Violation::Kind k, std::size_t i, std::string msg) {
    result.violations.push_back({k, i, std::move(msg)});
  };
  const std::size_t n = mesh.node_count();
  if (n == 0) add(Violation::Kind::EmptyMesh, 0, "mesh has no nodes");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < mesh.positions.dim(); ++a) {
      if (!std::isfinite(mesh.positions.coord(i, a))) {
        add(Violation::Kind::NonFiniteCoordinate, i,
            "non-finite coordinate at node " + std::to_string(i));
        break;
      }
    }
  }

  std::vector<std::pair<Edge, std::size_t>> seen;
  seen.reserve(mesh.edges.size());
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    const auto [u, v] = mesh.edges[e];
    if (u >= n || v >= n) {
      add(Violation::Kind::IndexOutOfRange, e,
          "edge index out of range at edge " + std::to_string(e));
      continue;
    }
    if (u == v) {
      add(Violation::Kind::SelfLoop, e, "self-loop at edge " + std::to_string(e));
      continue;
    }
    seen.emplace_back(mesh.edges[e].canonical(), e);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      add(Violation::Kind::DuplicatePair, seen[i].second,
          "duplicate unordered pair at edge " + std::to_string(seen[i].second) +
              " (" + std::to_string(seen[i].first.u) + ", " +
              std::to_string(seen[i].first.v) + ")");
    }
  }
  return result;
}

// Throws the first violation, for operations whose precondition is a valid mesh.
inline void require_valid(const Mesh& mesh) {
  auto r = validate_mesh(mesh);
  if (!r.ok()) throw Error(r.violations.front().message);
}

inline void require_valid(const Graph& g) {
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    if (u >= g.node_count || v >= g.node_count)
      throw Error("edge index out of range at edge " + std::to_string(e));
    if (u == v) throw Error("self-loop at edge " + std::to_string(e));
  }
}

}  // namespace meshtree
