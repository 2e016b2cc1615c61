#ifndef ROOTMAT_LINMATROID_HPP
#define ROOTMAT_LINMATROID_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "rootmat/rootsystem.hpp"

namespace rootmat {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Strictly increasing ground-set indices.
using Circuit = std::vector<int>;

enum class MatroidKind { linear, uniform_rank2 };

// Matroid of a finite vector configuration, with an exact rank oracle.
class LinearMatroid {
 public:
  static LinearMatroid from_system(const RootSystem& system);
  static LinearMatroid from_vectors(std::vector<Vector> vectors);
  static LinearMatroid uniform_rank2(int ground_size);

  int ground_size() const { return ground_size_; }
  MatroidKind kind() const { return kind_; }
  const std::vector<Vector>& vectors() const { return vectors_; }

  int rank(std::span<const int> subset) const;
  int rank() const;  // of the whole ground set
  bool is_independent(std::span<const int> subset) const;
  bool is_circuit(std::span<const int> subset) const;

 private:
  LinearMatroid() = default;

  int ground_size_ = 0;
  MatroidKind kind_ = MatroidKind::linear;
  std::vector<Vector> vectors_;
  // Primitive integer rows, present when every coordinate is rational.
  std::vector<std::vector<long long>> integer_rows_;
};

// All 3-element circuits, lexicographically sorted. The default runs the
// triple scan in parallel; the serial version is the reference.
std::vector<Circuit> circuits3(const LinearMatroid& m);
std::vector<Circuit> circuits3_serial(const LinearMatroid& m);

inline constexpr std::size_t kDefaultCircuitBudget = 50'000'000;

// All circuits with at most kmax elements (kmax is capped at rank + 1).
// Extends independent sets only; throws BudgetExceeded once more than
// node_budget sets have been visited.
std::vector<Circuit> all_circuits_upto(const LinearMatroid& m, int kmax,
                                       std::size_t node_budget = kDefaultCircuitBudget);

// Circuits of A_n, B_n or D_n generated from their signed-graph shapes,
// translated to the line indices of build(family, n).
std::vector<Circuit> classical_circuits(Family family, int n, int kmax,
                                        std::size_t node_budget = kDefaultCircuitBudget);

}  // namespace rootmat

#endif  // ROOTMAT_LINMATROID_HPP
