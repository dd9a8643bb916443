#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "meshtree/error.hpp"
#include "meshtree/mesh.hpp"

namespace meshtree {

struct BinSplit {
  std::size_t dimension = 0;
  double split_value = 0.0;
  std::vector<NodeId> lo;  // below the median, sorted by node id
  std::vector<NodeId> hi;  // at or above the median, sorted by node id
};

// Axis of largest population variance over the bin; ties go to the lowest axis.
inline std::size_t widest_axis(std::span<const NodeId> bin, const PointSet& points) {
  std::size_t best_axis = 0;
  double best_var = -1.0;
  const double n = static_cast<double>(bin.size());
  for (std::size_t a = 0; a < points.dim(); ++a) {
    double mean = 0.0;
    for (NodeId i : bin) mean += points.coord(i, a);
    mean /= n;
    double var = 0.0;
    for (NodeId i : bin) {
      const double d = points.coord(i, a) - mean;
      var += d * d;
    }
    var /= n;
    if (var > best_var) {
      best_var = var;
      best_axis = a;
    }
  }
  return best_axis;
}

// Median split of a bin along its widest axis.
//
// Nodes are ranked by (coordinate, node id) and the lowest floor(n/2) ranks go
// to `lo`, so the upper bin holds the median element for odd sizes. This is
// the usual ">= median" rule for distinct coordinates, and it keeps both bins
// within one node of each other when coordinates repeat.
inline BinSplit split_bin(std::span<const NodeId> bin, const PointSet& points) {
  if (bin.size() < 2) throw Error("unsplittable bin");
  BinSplit out;
  out.dimension = widest_axis(bin, points);
  const std::size_t axis = out.dimension;
  auto rank_less = [&](NodeId a, NodeId b) {
    const double ca = points.coord(a, axis);
    const double cb = points.coord(b, axis);
    return ca < cb || (ca == cb && a < b);
  };

  std::vector<NodeId> order(bin.begin(), bin.end());
  const auto cut = static_cast<std::ptrdiff_t>(order.size() / 2);
  std::nth_element(order.begin(), order.begin() + cut, order.end(), rank_less);
  const double upper = points.coord(order[static_cast<std::size_t>(cut)], axis);
  if (order.size() % 2 == 1) {
    out.split_value = upper;
  } else {
    const NodeId below = *std::max_element(order.begin(), order.begin() + cut, rank_less);
    out.split_value = 0.5 * (points.coord(below, axis) + upper);
  }

  out.lo.assign(order.begin(), order.begin() + cut);
  out.hi.assign(order.begin() + cut, order.end());
  std::sort(out.lo.begin(), out.lo.end());
  std::sort(out.hi.begin(), out.hi.end());
  return out;
}

// Node of the bin closest to the bin's mean position, lowest id on ties.
inline NodeId center_node(std::span<const NodeId> bin, const PointSet& points) {
  if (bin.empty()) throw Error("center of empty bin");
  const std::size_t dim = points.dim();
  std::vector<double> mean(dim, 0.0);
  for (NodeId i : bin)
    for (std::size_t a = 0; a < dim; ++a) mean[a] += points.coord(i, a);
  for (auto& m : mean) m /= static_cast<double>(bin.size());

  NodeId best = bin.front();
  double best_d2 = std::numeric_limits<double>::infinity();
  for (NodeId i : bin) {
    double d2 = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
      const double d = points.coord(i, a) - mean[a];
      d2 += d * d;
    }
    if (d2 < best_d2 || (d2 == best_d2 && i < best)) {
      best_d2 = d2;
      best = i;
    }
  }
  return best;
}

// Binary space partition built by recursive median splits. Nodes are stored
// in breadth-first order with the root at index 0; a node's children are
// always (lo, hi).
class PartitionTree {
 public:
  static constexpr std::size_t kNoChild = std::numeric_limits<std::size_t>::max();

  struct Node {
    std::vector<NodeId> bin;  // sorted by node id
    std::size_t depth = 0;
    std::size_t split_dimension = 0;
    double split_value = 0.0;
    std::size_t lo = kNoChild;
    std::size_t hi = kNoChild;

    bool is_leaf() const { return lo == kNoChild; }
  };

  PartitionTree(std::size_t levels, std::vector<Node> nodes)
      : levels_(levels), nodes_(std::move(nodes)) {}

  // Requested number of split levels k.
  std::size_t levels() const { return levels_; }
  // Deepest level actually reached; smaller than levels() when bins ran out.
  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& n : nodes_) d = std::max(d, n.depth);
    return d;
  }
  const Node& root() const { return nodes_.front(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::span<const Node> nodes() const { return nodes_; }

  std::vector<std::size_t> leaves() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].is_leaf()) out.push_back(i);
    return out;
  }

 private:
  std::size_t levels_;
  std::vector<Node> nodes_;
};

inline PartitionTree build_partition_tree(const PointSet& points, std::size_t levels) {
  if (points.empty()) throw Error("cannot partition an empty point set");
  if (levels == 0) throw Error("levels must be at least 1");

  std::vector<PartitionTree::Node> nodes;
  PartitionTree::Node root;
  root.bin.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) root.bin[i] = static_cast<NodeId>(i);
  nodes.push_back(std::move(root));

  // Breadth-first, so sibling order and therefore node order are fixed.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].depth == levels || nodes[i].bin.size() < 2) continue;
    BinSplit s = split_bin(nodes[i].bin, points);
    const std::size_t child_depth = nodes[i].depth + 1;
    nodes[i].split_dimension = s.dimension;
    nodes[i].split_value = s.split_value;
    nodes[i].lo = nodes.size();
    nodes[i].hi = nodes.size() + 1;

    PartitionTree::Node lo;
    lo.bin = std::move(s.lo);
    lo.depth = child_depth;
    PartitionTree::Node hi;
    hi.bin = std::move(s.hi);
    hi.depth = child_depth;
    nodes.push_back(std::move(lo));
    nodes.push_back(std::move(hi));
  }
  return PartitionTree(levels, std::move(nodes));
}

}  // namespace meshtree
