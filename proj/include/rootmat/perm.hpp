#ifndef ROOTMAT_PERM_HPP
#define ROOTMAT_PERM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rootmat {

// Permutation of {0, ..., degree-1}; maps x to images()[x].
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity
  explicit Perm(std::vector<int> images);  // throws if not a bijection

  static Perm identity(int degree) { return Perm(degree); }
  // Parses "(0,1,2)(3,4)"; "()" is the identity.
  static Perm from_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  // First apply *this, then other.
  Perm then(const Perm& other) const;
  std::string cycles() const;
  int first_moved_point() const;  // -1 for identity

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace rootmat

#endif  // ROOTMAT_PERM_HPP
