#ifndef ROOTMAT_ROOTSYSTEM_HPP
#define ROOTMAT_ROOTSYSTEM_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rootmat/perm.hpp"
#include "rootmat/scalar.hpp"

namespace rootmat {

enum class Family { A, B, D, Dprime4, E6, E7, E8, F4, H3, H4, I2, DirectSum };

enum class Field { rational, quadratic };

using Vector = std::vector<QuadExt>;

class InvalidSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Scales v so that its first nonzero coordinate is positive. Lengths are
// left alone.
Vector canonical(Vector v);

QuadExt dot(const Vector& v, const Vector& w);

// One representative per antipodal pair {v, -v} of a root system.
// I2(m) is carried without coordinates; its matroid is uniform of rank 2.
class RootSystem {
 public:
  Family family() const { return family_; }
  int rank_param() const { return rank_param_; }
  int ambient_dim() const { return ambient_dim_; }
  Field field() const { return field_; }
  const std::string& id() const { return id_; }
  // Rank of the linear span of the roots.
  int rank() const { return rank_; }

  int num_lines() const { return num_lines_; }
  const std::vector<Vector>& lines() const { return lines_; }
  const std::vector<RootSystem>& components() const { return components_; }
  bool has_coordinates() const { return family_ != Family::I2; }

  // Index of the line through v (v nonzero), or -1.
  int find_line(const Vector& v) const;

  friend RootSystem build(Family family, int n);
  friend RootSystem direct_sum(std::vector<RootSystem> components);

 private:
  RootSystem() = default;
  void set_lines(const std::vector<Vector>& roots);

  Family family_ = Family::A;
  int rank_param_ = 0;
  int ambient_dim_ = 0;
  int rank_ = 0;
  int num_lines_ = 0;
  Field field_ = Field::rational;
  std::string id_;
  std::vector<Vector> lines_;
  std::vector<RootSystem> components_;
  // keyed by the vector scaled to have first nonzero coordinate 1
  std::map<Vector, int> index_;
};

// Accepted ranges: A n>=1, B n>=2, D n>=4, I2 m>=5; exceptional families
// ignore n.
RootSystem build(Family family, int n = 0);
RootSystem direct_sum(std::vector<RootSystem> components);

// "A3", "B5", "D4", "Dp4", "E8", "F4", "H3", "I2_7", "A2+A2+B3".
RootSystem parse_system(std::string_view id);

// Line permutation induced by the reflection in the given line.
Perm reflection_perm(const RootSystem& system, int line);

// Symmetries of the line set not generated by reflections: sign change of
// the first coordinate (B, D), the W(F4) action on D4, the F4 duality, and
// the Galois conjugation for H3/H4.
std::vector<Perm> extra_symmetry_perms(const RootSystem& system);

// Generators of the group that is expected to be Aut(M(R)). In rank 2 this
// is the full symmetric group on the lines (uniform matroid); for direct
// sums, the component groups plus swaps of isomorphic components.
std::vector<Perm> known_group_generators(const RootSystem& system);

// Line permutation induced by an arbitrary map on coordinate vectors; throws
// std::logic_error when some image is not a line of the system.
template <class Map>
Perm induced_line_perm(const RootSystem& system, Map&& map) {
  std::vector<int> images(system.num_lines());
  for (int i = 0; i < system.num_lines(); ++i) {
    int j = system.find_line(map(system.lines()[i]));
    if (j < 0) throw std::logic_error("map does not preserve the lines of " + system.id());
    images[i] = j;
  }
  return Perm(std::move(images));
}

}  // namespace rootmat

#endif  // ROOTMAT_ROOTSYSTEM_HPP
