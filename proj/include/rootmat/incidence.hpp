#ifndef ROOTMAT_INCIDENCE_HPP
#define ROOTMAT_INCIDENCE_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rootmat/perm.hpp"

namespace rootmat {

// Undirected simple graph with a color per vertex.
class ColoredGraph {
 public:
  ColoredGraph(std::vector<int> colors, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return static_cast<int>(colors_.size()); }
  int num_edges() const { return num_edges_; }
  int color(int v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  bool has_edge(int u, int v) const;

  // Relabels vertex v as perm[v].
  ColoredGraph relabeled(const Perm& perm) const;
  bool is_automorphism(const Perm& perm) const;

 private:
  std::vector<int> colors_;
  std::vector<std::vector<int>> adjacency_;  // sorted
  int num_edges_ = 0;
};

inline constexpr int kElementColor = 0;
inline constexpr int kSetColor = 1;

// Bipartite element/set incidence graph: vertices 0..ground_size-1 are the
// elements (color 0), followed by one vertex per set (color 1). Sets must be
// pairwise distinct.
ColoredGraph build_incidence(int ground_size, const std::vector<std::vector<int>>& sets);

// Action of a color-preserving automorphism on the element vertices.
Perm restrict_to_ground(const Perm& automorphism, int ground_size);

// "p edge V E", then "n v c" color lines and "e u v" edge lines, 1-indexed.
std::string to_dimacs(const ColoredGraph& g);

}  // namespace rootmat

#endif  // ROOTMAT_INCIDENCE_HPP
