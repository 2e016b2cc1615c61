#include "rootmat/permgrp.hpp"

#include <algorithm>

namespace rootmat {

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw DegreeMismatch();
  }
  schreier_sims();
}

void PermGroup::rebuild_orbit(Level& level) {
  level.orbit = {level.point};
  level.transversal.assign(degree_, Perm());
  level.inverse.assign(degree_, Perm());
  level.transversal[level.point] = Perm::identity(degree_);
  level.inverse[level.point] = Perm::identity(degree_);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const int x = level.orbit[i];
    for (int s : level.strong) {
      const int y = strong_[s][x];
      if (level.transversal[y].degree() == 0) {
        level.transversal[y] = level.transversal[x].then(strong_[s]);
        level.inverse[y] = level.transversal[y].inverse();
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, int> PermGroup::strip(Perm g, int from) const {
  for (int i = from; i < static_cast<int>(levels_.size()); ++i) {
    const Level& level = levels_[i];
    const int x = g[level.point];
    if (level.transversal[x].degree() == 0) return {std::move(g), i};
    g = g.then(level.inverse[x]);
  }
  return {std::move(g), static_cast<int>(levels_.size())};
}

// Holt's SCHREIERSIMS: walk the levels bottom-up, sifting Schreier
// generators; a non-trivial residue becomes a strong generator for every
// level it stabilizes, and processing resumes at the deepest such level.
void PermGroup::schreier_sims() {
  auto add_strong = [&](const Perm& h, int from_level) {
    const int index = static_cast<int>(strong_.size());
    strong_.push_back(h);
    int level = from_level;
    while (true) {
      if (level == static_cast<int>(levels_.size())) {
        int point = -1;
        for (int x = 0; x < degree_; ++x) {
          if (h[x] != x) {
            point = x;
            break;
          }
        }
        // h fixes all base points, so its first moved point is new
        levels_.push_back(Level{point, {}, {}, {}, {}});
        base_.push_back(point);
      }
      levels_[level].strong.push_back(index);
      rebuild_orbit(levels_[level]);
      if (h[levels_[level].point] != levels_[level].point) break;
      ++level;
    }
    return level;
  };

  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) != strong_.end()) continue;
    add_strong(g, 0);
  }

  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    Level& level = levels_[i];
    for (std::size_t oi = 0; !extended && oi < level.orbit.size(); ++oi) {
      const int x = level.orbit[oi];
      for (std::size_t si = 0; !extended && si < level.strong.size(); ++si) {
        const Perm& s = strong_[level.strong[si]];
        const int y = s[x];
        Perm schreier = level.transversal[x].then(s).then(level.inverse[y]);
        if (schreier.is_identity()) continue;
        auto [residue, stop] = strip(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        add_strong(residue, i + 1);
        i = std::max(stop, i + 1);
        if (i >= static_cast<int>(levels_.size())) i = static_cast<int>(levels_.size()) - 1;
        extended = true;
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const auto& level : levels_) order_ *= static_cast<unsigned long>(level.orbit.size());
}

std::vector<std::vector<int>> PermGroup::basic_orbits() const {
  std::vector<std::vector<int>> out;
  for (const auto& level : levels_) out.push_back(level.orbit);
  return out;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw DegreeMismatch();
  auto [residue, stop] = strip(p, 0);
  return residue.is_identity();
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) throw DegreeMismatch();
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Perm& p) { return g.contains(p); });
}

bool equal(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) throw DegreeMismatch();
  return g.order() == h.order() && is_subgroup(g, h) && is_subgroup(h, g);
}

}  // namespace rootmat
