#ifndef ROOTMAT_PERMGRP_HPP
#define ROOTMAT_PERMGRP_HPP

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "rootmat/perm.hpp"

namespace rootmat {

class DegreeMismatch : public std::invalid_argument {
 public:
  DegreeMismatch() : std::invalid_argument("permutation degrees differ") {}
};

// Permutation group with a base and strong generating set built by the
// deterministic Schreier-Sims algorithm. New base points are always the
// smallest point moved by the element that forces them.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }
  const std::vector<Perm>& strong_generators() const { return strong_; }
  std::vector<std::vector<int>> basic_orbits() const;
  const mpz_class& order() const { return order_; }

  bool contains(const Perm& p) const;

 private:
  struct Level {
    int point = 0;
    std::vector<int> strong;          // indices into strong_ fixing earlier base points
    std::vector<int> orbit;           // orbit of `point`, in discovery order
    std::vector<Perm> transversal;    // transversal[x] maps point to x (empty if x not in orbit)
    std::vector<Perm> inverse;
  };

  void rebuild_orbit(Level& level);
  // Returns the residue and the level where sifting stopped.
  std::pair<Perm, int> strip(Perm g, int from) const;
  void schreier_sims();

  int degree_;
  std::vector<Perm> generators_;
  std::vector<int> base_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
  mpz_class order_ = 1;
};

bool is_subgroup(const PermGroup& h, const PermGroup& g);
bool equal(const PermGroup& g, const PermGroup& h);

}  // namespace rootmat

#endif  // ROOTMAT_PERMGRP_HPP
