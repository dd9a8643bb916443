#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "meshtree/error.hpp"
#include "meshtree/mesh.hpp"

namespace meshtree {

inline constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Hop distance from the nearest source; kUnreached where no path exists.
inline std::vector<std::size_t> bfs_distances(const Adjacency& adj,
                                              std::span<const NodeId> sources) {
  std::vector<std::size_t> dist(adj.node_count(), kUnreached);
  std::vector<NodeId> queue;
  queue.reserve(adj.node_count());
  for (NodeId s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId w : adj.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

struct Components {
  std::vector<std::size_t> component_id;  // numbered in order of lowest member
  std::size_t count = 0;
};

inline Components connected_components(const Graph& g) {
  require_valid(g);
  const Adjacency adj(g);
  Components out;
  out.component_id.assign(g.node_count, kUnreached);
  std::vector<NodeId> stack;
  for (std::size_t s = 0; s < g.node_count; ++s) {
    if (out.component_id[s] != kUnreached) continue;
    out.component_id[s] = out.count;
    stack.push_back(static_cast<NodeId>(s));
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : adj.neighbors(v)) {
        if (out.component_id[w] == kUnreached) {
          out.component_id[w] = out.count;
          stack.push_back(w);
        }
      }
    }
    ++out.count;
  }
  return out;
}

struct DiameterMode {
  enum class Kind { Exact, Sampled };
  Kind kind = Kind::Exact;
  std::size_t samples = 0;

  static DiameterMode exact() { return {}; }
  static DiameterMode sampled(std::size_t count) { return {Kind::Sampled, count}; }

  std::string str() const {
    return kind == Kind::Exact ? "exact" : "sampled:" + std::to_string(samples);
  }
};

// BFS sources for sampled mode: `count` evenly strided node indices.
inline std::vector<NodeId> strided_sources(std::size_t node_count, std::size_t count) {
  std::vector<NodeId> out;
  count = std::min(count, node_count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(static_cast<NodeId>(i * node_count / count));
  return out;
}

// Largest shortest-path hop count; nullopt when the graph is disconnected.
// Sampled mode only runs BFS from a few sources and so gives a lower bound.
inline std::optional<std::size_t> hop_diameter(const Graph& g, DiameterMode mode = {}) {
  require_valid(g);
  if (g.node_count == 0) return 0;
  const Adjacency adj(g);

  std::vector<NodeId> sources;
  if (mode.kind == DiameterMode::Kind::Exact) {
    sources.resize(g.node_count);
    for (std::size_t i = 0; i < g.node_count; ++i) sources[i] = static_cast<NodeId>(i);
  } else {
    if (mode.samples == 0) throw Error("sampled diameter needs at least one source");
    sources = strided_sources(g.node_count, mode.samples);
  }

  std::size_t diameter = 0;
  for (NodeId s : sources) {
    const auto dist = bfs_distances(adj, std::span<const NodeId>(&s, 1));
    for (std::size_t d : dist) {
      if (d == kUnreached) return std::nullopt;
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

struct DegreeReport {
  std::vector<std::size_t> degrees;
  std::map<std::size_t, std::size_t> histogram;  // degree -> node count
  std::vector<NodeId> isolated;
};

inline DegreeReport degree_report(const Graph& g) {
  require_valid(g);
  DegreeReport out;
  out.degrees.assign(g.node_count, 0);
  for (const auto& e : g.edges) {
    ++out.degrees[e.u];
    ++out.degrees[e.v];
  }
  for (std::size_t i = 0; i < g.node_count; ++i) {
    ++out.histogram[out.degrees[i]];
    if (out.degrees[i] == 0) out.isolated.push_back(static_cast<NodeId>(i));
  }
  return out;
}

struct GraphReport {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t component_count = 0;
  std::vector<std::size_t> component_id;
  DiameterMode diameter_mode;
  std::optional<std::size_t> hop_diameter;  // nullopt means unreachable
  std::map<std::size_t, std::size_t> degree_histogram;
  std::vector<NodeId> isolated_nodes;
};

inline GraphReport graph_report(const Graph& g, DiameterMode mode) {
  GraphReport r;
  r.node_count = g.node_count;
  r.edge_count = g.edges.size();
  auto comps = connected_components(g);
  r.component_count = comps.count;
  r.component_id = std::move(comps.component_id);
  r.diameter_mode = mode;
  r.hop_diameter = r.component_count > 1 ? std::nullopt : hop_diameter(g, mode);
  auto deg = degree_report(g);
  r.degree_histogram = std::move(deg.histogram);
  r.isolated_nodes = std::move(deg.isolated);
  return r;
}

// Gaussian kernel density sampled at cell centres of a regular grid.
// values are row-major with the last axis fastest.
struct DensityGrid {
  std::vector<double> lower;  // per axis
  std::vector<double> upper;
  std::vector<std::size_t> resolution;
  std::vector<double> bandwidth;
  std::vector<double> values;

  std::size_t dim() const { return lower.size(); }
  double cell_width(std::size_t axis) const {
    return (upper[axis] - lower[axis]) / static_cast<double>(resolution[axis]);
  }
  double cell_volume() const {
    double v = 1.0;
    for (std::size_t a = 0; a < dim(); ++a) v *= cell_width(a);
    return v;
  }
  double cell_center(std::size_t axis, std::size_t i) const {
    return lower[axis] + (static_cast<double>(i) + 0.5) * cell_width(axis);
  }
  // Riemann sum of the density over the grid.
  double mass() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s * cell_volume();
  }
};

struct AutoBandwidth {};
using Bandwidth = std::variant<AutoBandwidth, double>;

// Scott's rule: h_a = N^(-1/(D+4)) * sample standard deviation along a.
inline std::vector<double> scott_bandwidth(const PointSet& points) {
  const std::size_t n = points.size();
  const std::size_t dim = points.dim();
  if (n < 2) throw Error("bandwidth undefined: need at least two points");
  const double factor = std::pow(static_cast<double>(n), -1.0 / (static_cast<double>(dim) + 4.0));
  std::vector<double> h(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += points.coord(i, a);
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = points.coord(i, a) - mean;
      ss += d * d;
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sd > 0.0))
      throw Error("bandwidth undefined: zero variance along axis " + std::to_string(a));
    h[a] = factor * sd;
  }
  return h;
}

// density(x) = 1/N sum_i prod_a phi((x_a - p_ia) / h_a) / h_a over a grid
// covering the bounding box padded by 3h on every side.
inline DensityGrid density_kde(const PointSet& points, const Bandwidth& bandwidth,
                               std::size_t grid_resolution) {
  const std::size_t n = points.size();
  const std::size_t dim = points.dim();
  if (n == 0) throw Error("density of an empty point set");
  if (grid_resolution < 2) throw Error("grid resolution must be at least 2");

  DensityGrid g;
  if (std::holds_alternative<double>(bandwidth)) {
    const double h = std::get<double>(bandwidth);
    if (!(h > 0.0) || !std::isfinite(h)) throw Error("bandwidth must be positive");
    g.bandwidth.assign(dim, h);
  } else {
    g.bandwidth = scott_bandwidth(points);
  }
  g.resolution.assign(dim, grid_resolution);
  g.lower.resize(dim);
  g.upper.resize(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    double lo = points.coord(0, a), hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, points.coord(i, a));
      hi = std::max(hi, points.coord(i, a));
    }
    g.lower[a] = lo - 3.0 * g.bandwidth[a];
    g.upper[a] = hi + 3.0 * g.bandwidth[a];
  }

  // The kernel is separable: tabulate the 1-d factor of every point on every
  // axis, then accumulate products cell by cell.
  const std::size_t r = grid_resolution;
  std::vector<std::vector<double>> factors(dim, std::vector<double>(n * r));
  for (std::size_t a = 0; a < dim; ++a) {
    const double h = g.bandwidth[a];
    const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * h);
    for (std::size_t i = 0; i < n; ++i) {
      const double p = points.coord(i, a);
      for (std::size_t c = 0; c < r; ++c) {
        const double z = (g.cell_center(a, c) - p) / h;
        factors[a][i * r + c] = norm * std::exp(-0.5 * z * z);
      }
    }
  }

  std::size_t cells = 1;
  for (std::size_t a = 0; a < dim; ++a) cells *= r;
  g.values.assign(cells, 0.0);
  std::vector<std::size_t> idx(dim, 0);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double prod = 1.0;
      for (std::size_t a = 0; a < dim; ++a) prod *= factors[a][i * r + idx[a]];
      sum += prod;
    }
    g.values[cell] = sum / static_cast<double>(n);
    for (std::size_t a = dim; a-- > 0;) {
      if (++idx[a] < r) break;
      idx[a] = 0;
    }
  }
  return g;
}

}  // namespace meshtree
