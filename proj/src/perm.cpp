#include "rootmat/perm.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace rootmat {

Perm::Perm(int degree) : images_(degree) { std::iota(images_.begin(), images_.end(), 0); }

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = 1;
  }
}

Perm Perm::from_cycles(std::string_view text, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto fail = [&] { throw std::invalid_argument("malformed cycle notation: " + std::string(text)); };
  while (i < text.size()) {
    if (text[i] == ' ') { ++i; continue; }
    if (text[i] != '(') fail();
    ++i;
    std::vector<int> cycle;
    while (i < text.size() && text[i] != ')') {
      if (text[i] == ',' || text[i] == ' ') { ++i; continue; }
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc() || v < 0 || v >= degree || used[v]) fail();
      used[v] = 1;
      cycle.push_back(v);
      i = static_cast<std::size_t>(ptr - text.data());
    }
    if (i == text.size()) fail();
    ++i;
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

Perm Perm::then(const Perm& other) const {
  if (other.degree() != degree()) throw std::invalid_argument("degree mismatch");
  Perm p;
  p.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) p.images_[i] = other.images_[images_[i]];
  return p;
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (j != i) out += ',';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

int Perm::first_moved_point() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return i;
  }
  return -1;
}

}  // namespace rootmat
