#include "rootmat/incidence.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rootmat {

ColoredGraph::ColoredGraph(std::vector<int> colors, const std::vector<std::pair<int, int>>& edges)
    : colors_(std::move(colors)), adjacency_(colors_.size()) {
  const int n = num_vertices();
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not supported");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    num_edges_ += static_cast<int>(nbrs.size());
  }
  num_edges_ /= 2;
}

bool ColoredGraph::has_edge(int u, int v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

ColoredGraph ColoredGraph::relabeled(const Perm& perm) const {
  std::vector<int> colors(colors_.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < num_vertices(); ++u) {
    colors[perm[u]] = colors_[u];
    for (int v : adjacency_[u]) {
      if (u < v) edges.emplace_back(perm[u], perm[v]);
    }
  }
  return ColoredGraph(std::move(colors), edges);
}

bool ColoredGraph::is_automorphism(const Perm& perm) const {
  if (perm.degree() != num_vertices()) return false;
  for (int u = 0; u < num_vertices(); ++u) {
    if (colors_[perm[u]] != colors_[u]) return false;
    if (adjacency_[perm[u]].size() != adjacency_[u].size()) return false;
    for (int v : adjacency_[u]) {
      if (!has_edge(perm[u], perm[v])) return false;
    }
  }
  return true;
}

ColoredGraph build_incidence(int ground_size, const std::vector<std::vector<int>>& sets) {
  std::set<std::vector<int>> distinct;
  std::vector<int> colors(ground_size, kElementColor);
  std::vector<std::pair<int, int>> edges;
  for (const auto& s : sets) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("set with a repeated element");
    }
    if (!distinct.insert(sorted).second) throw std::invalid_argument("duplicate set in incidence structure");
    const int vertex = static_cast<int>(colors.size());
    colors.push_back(kSetColor);
    for (int x : sorted) {
      if (x < 0 || x >= ground_size) throw std::out_of_range("set element out of range");
      edges.emplace_back(x, vertex);
    }
  }
  return ColoredGraph(std::move(colors), edges);
}

Perm restrict_to_ground(const Perm& automorphism, int ground_size) {
  std::vector<int> images(ground_size);
  for (int x = 0; x < ground_size; ++x) {
    images[x] = automorphism[x];
    if (images[x] >= ground_size) throw std::invalid_argument("automorphism does not preserve the ground set");
  }
  return Perm(std::move(images));
}

std::string to_dimacs(const ColoredGraph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (int v = 0; v < g.num_vertices(); ++v) out << "n " << v + 1 << ' ' << g.color(v) << '\n';
  for (int u = 0; u < g.num_vertices(); ++u) {
    for (int v : g.neighbors(u)) {
      if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
  }
  return out.str();
}

}  // namespace rootmat
