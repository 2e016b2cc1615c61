#ifndef ROOTMAT_GRAPHAUTO_HPP
#define ROOTMAT_GRAPHAUTO_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "rootmat/incidence.hpp"
#include "rootmat/perm.hpp"

namespace rootmat {

// Ordered partition of the vertex set. Cells occupy contiguous ranges of
// elements() and are identified by the index of their first position.
class OrderedPartition {
 public:
  static OrderedPartition unit(int n);
  // One cell per color, in increasing color order.
  static OrderedPartition by_colors(const ColoredGraph& g);
  // Cells given explicitly, in order; must cover 0..n-1 exactly once.
  static OrderedPartition from_cells(int n, const std::vector<std::vector<int>>& cells);

  int size() const { return static_cast<int>(elements_.size()); }
  int num_cells() const { return num_cells_; }
  bool is_discrete() const { return num_cells_ == size(); }
  std::span<const int> elements() const { return elements_; }
  int cell_of(int v) const { return cell_[v]; }
  int cell_size(int start) const { return size_at_[start]; }
  std::vector<std::vector<int>> cells() const;  // each cell sorted
  bool is_equitable(const ColoredGraph& g) const;

  // Makes v a singleton cell placed in front of the rest of its cell.
  void individualize(int v);

 private:
  friend class Refiner;

  std::vector<int> elements_;
  std::vector<int> position_;
  std::vector<int> cell_;     // cell start of each vertex
  std::vector<int> size_at_;  // cell size, valid at cell starts
  int num_cells_ = 0;
};

// Coarsest equitable refinement. Splits are ordered by neighbor count, so
// relabeling the graph relabels the result.
OrderedPartition refine(const ColoredGraph& g, OrderedPartition p);

struct SearchOptions {
  std::size_t node_budget = 2'000'000;
};

struct AutomorphismGroup {
  std::vector<Perm> generators;  // each verified edge by edge
  std::vector<int> base;         // individualized vertices along the first path
  std::vector<int> orbit_sizes;  // basic orbit length per base vertex
  mpz_class order;               // product of orbit_sizes
  std::size_t nodes = 0;         // refinements performed
};

// Generators of the color-preserving automorphism group, by
// individualization-refinement with orbit pruning. Throws BudgetExceeded
// (see linmatroid.hpp) after more than node_budget refinements.
AutomorphismGroup automorphism_group(const ColoredGraph& g, const SearchOptions& options = {});

}  // namespace rootmat

#endif  // ROOTMAT_GRAPHAUTO_HPP
