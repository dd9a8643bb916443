#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "meshtree/error.hpp"
#include "meshtree/mesh.hpp"
#include "meshtree/predicates.hpp"

namespace meshtree {

struct Triangulation {
  PointSet positions;
  // Counter-clockwise, smallest index first, sorted.
  std::vector<std::array<NodeId, 3>> triangles;

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(triangles.size() * 3);
    for (const auto& t : triangles)
      for (int i = 0; i < 3; ++i) out.push_back(Edge{t[i], t[(i + 1) % 3]}.canonical());
    canonicalize(out);
    return out;
  }
  Mesh mesh() const { return {positions, edges()}; }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Incremental Bowyer-Watson. The usual super-triangle is replaced by a single
// vertex at infinity: every hull edge carries a "ghost" triangle that closes
// the fan around it, so hull triangles are never lost to a finite bounding
// triangle. Exact ties on the circumcircle are broken by an index-ordered
// symbolic perturbation of the lifted heights, which makes the result unique
// and independent of insertion order.
class DelaunayBuilder {
 public:
  static constexpr NodeId kGhost = std::numeric_limits<NodeId>::max();
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  explicit DelaunayBuilder(const PointSet& points) : pts_(points) {}

  std::vector<std::array<NodeId, 3>> run() {
    const std::size_t n = pts_.size();
    std::vector<NodeId> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeId>(i);
    constexpr std::uint64_t kSeed = 0x5eed'0f'de1a'0a7eULL;
    std::sort(order.begin(), order.end(), [](NodeId a, NodeId b) {
      const auto ha = splitmix64(a ^ kSeed), hb = splitmix64(b ^ kSeed);
      return ha < hb || (ha == hb && a < b);
    });

    std::size_t third = 2;
    while (third < n && orient(order[0], order[1], order[third]) == 0) ++third;
    if (third == n) throw Error("no triangulation: all points are collinear");
    std::swap(order[2], order[third]);
    seed_triangle(order[0], order[1], order[2]);
    for (std::size_t i = 3; i < n; ++i) insert(order[i]);

    std::vector<std::array<NodeId, 3>> out;
    for (const auto& t : tris_) {
      if (!t.alive || t.v[2] == kGhost) continue;
      auto v = t.v;
      const auto m = std::min_element(v.begin(), v.end()) - v.begin();
      std::rotate(v.begin(), v.begin() + m, v.end());
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Tri {
    std::array<NodeId, 3> v;  // ghost vertex, when present, is v[2]
    std::array<std::size_t, 3> n{kNone, kNone, kNone};  // n[i] is opposite v[i]
    bool alive = true;
  };

  const double* at(NodeId i) const { return pts_[i].data(); }
  int orient(NodeId a, NodeId b, NodeId c) const {
    return predicates::orient2d(at(a), at(b), at(c));
  }

  bool strictly_between(NodeId u, NodeId v, NodeId p) const {
    for (int axis = 0; axis < 2; ++axis) {
      const double a = at(u)[axis], b = at(v)[axis], x = at(p)[axis];
      if (a != b) return (a < x && x < b) || (b < x && x < a);
    }
    return false;
  }

  // Whether p lies inside the (perturbed) circumcircle of triangle t.
  bool conflicts(const Tri& t, NodeId p) const {
    const auto [a, b, c] = t.v;
    if (c == kGhost) {
      const int o = orient(a, b, p);
      return o > 0 || (o == 0 && strictly_between(a, b, p));
    }
    const int s = predicates::incircle(at(a), at(b), at(c), at(p));
    if (s != 0) return s > 0;

    // Heights are lowered by w_i, with w dominated by the lowest index. The
    // first index with a nonzero coefficient decides; for a triangle vertex
    // that coefficient has the sign of -(barycentric weight of p).
    std::array<NodeId, 4> ids{a, b, c, p};
    std::sort(ids.begin(), ids.end());
    for (NodeId id : ids) {
      if (id == p) return true;
      int o = 0;
      if (id == a) o = orient(p, b, c);
      else if (id == b) o = orient(a, p, c);
      else o = orient(a, b, p);
      if (o != 0) return o < 0;
    }
    return false;
  }

  std::size_t add(NodeId a, NodeId b, NodeId c) {
    while (a == kGhost || b == kGhost) {
      const NodeId t = a;
      a = b;
      b = c;
      c = t;
    }
    tris_.push_back(Tri{{a, b, c}});
    return tris_.size() - 1;
  }

  static std::uint64_t key(NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  // Links the internal edges among a batch of fresh triangles.
  void link(const std::vector<std::size_t>& batch) {
    edge_owner_.clear();
    for (std::size_t t : batch)
      for (int i = 0; i < 3; ++i)
        edge_owner_[key(tris_[t].v[(i + 1) % 3], tris_[t].v[(i + 2) % 3])] = {t, i};
    for (std::size_t t : batch) {
      for (int i = 0; i < 3; ++i) {
        if (tris_[t].n[i] != kNone) continue;
        const auto it = edge_owner_.find(key(tris_[t].v[(i + 2) % 3], tris_[t].v[(i + 1) % 3]));
        if (it != edge_owner_.end()) tris_[t].n[i] = it->second.first;
      }
    }
  }

  void seed_triangle(NodeId a, NodeId b, NodeId c) {
    if (orient(a, b, c) < 0) std::swap(a, b);
    std::vector<std::size_t> batch{add(a, b, c), add(b, a, kGhost), add(c, b, kGhost),
                                   add(a, c, kGhost)};
    link(batch);
    last_ = batch.front();
  }

  // Visibility walk toward p; returns a triangle in conflict with p.
  std::size_t locate(NodeId p) const {
    std::size_t t = last_;
    if (tris_[t].v[2] == kGhost) t = tris_[t].n[2];
    const std::size_t cap = 4 * tris_.size() + 16;
    for (std::size_t step = 0; step < cap; ++step) {
      const Tri& tri = tris_[t];
      std::size_t next = kNone;
      for (int k = 0; k < 3; ++k) {
        const int i = static_cast<int>((step + static_cast<std::size_t>(k)) % 3);
        if (orient(tri.v[(i + 1) % 3], tri.v[(i + 2) % 3], p) < 0) {
          next = tri.n[i];
          break;
        }
      }
      if (next == kNone) return t;
      if (tris_[next].v[2] == kGhost) return next;
      t = next;
    }
    for (std::size_t i = 0; i < tris_.size(); ++i)
      if (tris_[i].alive && conflicts(tris_[i], p)) return i;
    throw Error("triangulation walk failed");
  }

  void insert(NodeId p) {
    const std::size_t start = locate(p);
    cavity_.assign(1, start);
    tris_[start].alive = false;
    for (std::size_t k = 0; k < cavity_.size(); ++k) {
      for (std::size_t nb : tris_[cavity_[k]].n) {
        if (tris_[nb].alive && conflicts(tris_[nb], p)) {
          tris_[nb].alive = false;
          cavity_.push_back(nb);
        }
      }
    }

    std::vector<std::size_t> batch;
    for (std::size_t dead : cavity_) {
      for (int i = 0; i < 3; ++i) {
        const std::size_t outside = tris_[dead].n[i];
        if (!tris_[outside].alive) continue;
        const NodeId e0 = tris_[dead].v[(i + 1) % 3];
        const NodeId e1 = tris_[dead].v[(i + 2) % 3];
        const std::size_t fresh = add(e0, e1, p);
        // After rotation the boundary edge e0->e1 sits opposite p.
        Tri& f = tris_[fresh];
        const int slot = static_cast<int>(std::find(f.v.begin(), f.v.end(), p) - f.v.begin());
        f.n[slot] = outside;
        for (auto& back : tris_[outside].n)
          if (back == dead) back = fresh;
        batch.push_back(fresh);
      }
    }
    link(batch);
    last_ = batch.back();
  }

  const PointSet& pts_;
  std::vector<Tri> tris_;
  std::vector<std::size_t> cavity_;
  std::unordered_map<std::uint64_t, std::pair<std::size_t, int>> edge_owner_;
  std::size_t last_ = 0;
};

}  // namespace detail

// Delaunay triangulation of a planar point set covering its convex hull.
inline Triangulation delaunay_triangulate(const PointSet& points) {
  if (points.dim() != 2) throw Error("no triangulation: points must be 2-dimensional");
  if (points.size() < 3) throw Error("no triangulation: need at least 3 points");
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!std::isfinite(points.coord(i, 0)) || !std::isfinite(points.coord(i, 1)))
      throw Error("non-finite coordinate at node " + std::to_string(i));

  std::vector<NodeId> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<NodeId>(i);
  auto coords = [&](NodeId i) { return std::pair(points.coord(i, 0), points.coord(i, 1)); };
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return std::pair(coords(a), a) < std::pair(coords(b), b);
  });
  std::string dupes;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (coords(order[i]) == coords(order[i - 1])) {
      if (!dupes.empty()) dupes += ", ";
      dupes += std::to_string(order[i - 1]) + "=" + std::to_string(order[i]);
    }
  }
  if (!dupes.empty()) throw Error("duplicate points: " + dupes);

  Triangulation out;
  out.positions = points;
  out.triangles = detail::DelaunayBuilder(points).run();
  return out;
}

}  // namespace meshtree
