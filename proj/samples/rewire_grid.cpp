// Rewires an n x n grid graph and prints how the hop diameter shrinks.
//
//   rewire_grid [n] [levels] [merge_exponent]

#include <cstdlib>
#include <iostream>

#include "meshtree/meshtree.hpp"

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 32;
  const std::size_t levels = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 10;
  const std::size_t merge = argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 1;

  std::vector<double> coords;
  std::vector<meshtree::Edge> edges;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      coords.push_back(static_cast<double>(c));
      coords.push_back(static_cast<double>(r));
      const auto id = static_cast<meshtree::NodeId>(r * n + c);
      if (c + 1 < n) edges.push_back({id, id + 1});
      if (r + 1 < n) edges.push_back({id, static_cast<meshtree::NodeId>(id + n)});
    }
  }
  const meshtree::Mesh mesh{meshtree::PointSet(2, coords), edges};
  const auto rewired = meshtree::rewire(mesh, {levels, merge});

  const auto before = meshtree::hop_diameter(meshtree::graph_of(mesh));
  const auto after = meshtree::hop_diameter({mesh.node_count(), rewired.plain_edges()});
  std::cout << "nodes " << mesh.node_count() << ", mesh edges " << mesh.edges.size()
            << ", tree edges " << rewired.count(meshtree::EdgeTag::Tree) << "\n"
            << "hop diameter " << before.value_or(0) << " -> " << after.value_or(0) << "\n";
}
