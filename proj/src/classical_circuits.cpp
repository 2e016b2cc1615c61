#include <algorithm>
#include <set>

#include "rootmat/linmatroid.hpp"

// Circuits of A_n, D_n, B_n read off signed graphs on the coordinate
// vertices: a black edge {i,j} is e_i - e_j, a red edge is e_i + e_j, and a
// marked vertex i is e_i. A cycle is balanced when it has an even number of
// red edges; a marked vertex behaves like an unbalanced cycle of length one.
// The circuits are the balanced cycles and the pairs of unbalanced pieces
// that share exactly one vertex or are joined by a path.

namespace rootmat {

namespace {

struct Piece {
  std::vector<int> lines;     // sorted
  std::vector<int> vertices;  // sorted
};

class ShapeGenerator {
 public:
  ShapeGenerator(Family family, int n, int kmax, std::size_t budget)
      : family_(family), system_(build(family, n)), kmax_(kmax), budget_(budget) {
    vertex_count_ = family == Family::A ? n + 1 : n;
    kmax_ = std::min(kmax_, system_.rank() + 1);
  }

  std::vector<Circuit> run() {
    balanced_cycles();
    if (family_ != Family::A) handcuffs();
    return {found_.begin(), found_.end()};
  }

 private:
  int edge_line(int u, int v, bool red) const {
    Vector w(system_.ambient_dim());
    w[std::min(u, v)] = 1;
    w[std::max(u, v)] = red ? 1 : -1;
    return system_.find_line(w);
  }

  int mark_line(int v) const {
    Vector w(system_.ambient_dim());
    w[v] = 1;
    return system_.find_line(w);
  }

  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded("classical circuit generation exceeded node budget");
  }

  // Simple cycles on >= 3 vertices, each listed once (smallest vertex first,
  // second vertex smaller than the last).
  template <class Visit>
  void for_each_cycle(int max_len, Visit&& visit) {
    std::vector<int> path;
    std::vector<char> used(vertex_count_, 0);
    auto dfs = [&](auto&& self) -> void {
      tick();
      const int len = static_cast<int>(path.size());
      if (len >= 3 && path[1] < path.back()) visit(path);
      if (len == max_len) return;
      for (int v = path[0] + 1; v < vertex_count_; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        path.push_back(v);
        self(self);
        path.pop_back();
        used[v] = 0;
      }
    };
    for (int s = 0; s < vertex_count_; ++s) {
      path = {s};
      used[s] = 1;
      dfs(dfs);
      used[s] = 0;
    }
  }

  // Calls visit(lines, red_count) for every edge coloring of a vertex walk
  // (closed when `closed`). A has black edges only.
  template <class Visit>
  void for_each_coloring(const std::vector<int>& walk, bool closed, Visit&& visit) {
    const int edges = static_cast<int>(walk.size()) - (closed ? 0 : 1);
    const int colorings = family_ == Family::A ? 1 : (1 << edges);
    for (int mask = 0; mask < colorings; ++mask) {
      tick();
      std::vector<int> lines;
      for (int e = 0; e < edges; ++e) {
        int u = walk[e];
        int v = walk[(e + 1) % walk.size()];
        lines.push_back(edge_line(u, v, (mask >> e) & 1));
      }
      visit(lines, __builtin_popcount(static_cast<unsigned>(mask)));
    }
  }

  void add(std::vector<int> lines) {
    std::sort(lines.begin(), lines.end());
    found_.insert(std::move(lines));
  }

  void balanced_cycles() {
    for_each_cycle(kmax_, [&](const std::vector<int>& cycle) {
      for_each_coloring(cycle, true, [&](std::vector<int> lines, int reds) {
        if (reds % 2 == 0) add(std::move(lines));
      });
    });
  }

  std::vector<Piece> unbalanced_pieces() {
    std::vector<Piece> pieces;
    auto sorted = [](std::vector<int> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    if (family_ == Family::B) {
      for (int v = 0; v < vertex_count_; ++v) pieces.push_back({{mark_line(v)}, {v}});
    }
    for (int u = 0; u < vertex_count_; ++u) {
      for (int v = u + 1; v < vertex_count_; ++v) {
        pieces.push_back({sorted({edge_line(u, v, false), edge_line(u, v, true)}), {u, v}});
      }
    }
    // a second piece needs at least one line
    for_each_cycle(kmax_ - 1, [&](const std::vector<int>& cycle) {
      for_each_coloring(cycle, true, [&](std::vector<int> lines, int reds) {
        if (reds % 2 == 1) pieces.push_back({sorted(std::move(lines)), sorted(cycle)});
      });
    });
    return pieces;
  }

  void handcuffs() {
    auto pieces = unbalanced_pieces();
    std::vector<char> blocked(vertex_count_, 0);
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      for (std::size_t q = p + 1; q < pieces.size(); ++q) {
        const Piece& a = pieces[p];
        const Piece& b = pieces[q];
        const int base = static_cast<int>(a.lines.size() + b.lines.size());
        if (base > kmax_) continue;
        std::vector<int> common;
        std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                              b.vertices.end(), std::back_inserter(common));
        if (common.size() > 1) continue;
        std::vector<int> joined = a.lines;
        joined.insert(joined.end(), b.lines.begin(), b.lines.end());
        if (common.size() == 1) {
          tick();
          add(joined);
          continue;
        }
        const int max_path = kmax_ - base;
        if (max_path < 1) continue;
        for (int v : a.vertices) blocked[v] = 1;
        for (int v : b.vertices) blocked[v] = 1;
        for (int s : a.vertices) {
          for (int t : b.vertices) {
            connect(s, t, max_path, blocked, [&](const std::vector<int>& walk) {
              for_each_coloring(walk, false, [&](const std::vector<int>& path_lines, int) {
                std::vector<int> lines = joined;
                lines.insert(lines.end(), path_lines.begin(), path_lines.end());
                add(std::move(lines));
              });
            });
          }
        }
        for (int v : a.vertices) blocked[v] = 0;
        for (int v : b.vertices) blocked[v] = 0;
      }
    }
  }

  // Simple paths s -> t with at most max_len edges whose interior avoids
  // blocked vertices.
  template <class Visit>
  void connect(int s, int t, int max_len, std::vector<char>& blocked, Visit&& visit) {
    std::vector<int> walk{s};
    auto dfs = [&](auto&& self) -> void {
      tick();
      if (static_cast<int>(walk.size()) > max_len) return;
      for (int v = 0; v < vertex_count_; ++v) {
        if (v == t) {
          walk.push_back(t);
          visit(walk);
          walk.pop_back();
        } else if (!blocked[v]) {
          blocked[v] = 1;
          walk.push_back(v);
          self(self);
          walk.pop_back();
          blocked[v] = 0;
        }
      }
    };
    dfs(dfs);
  }

  Family family_;
  RootSystem system_;
  int vertex_count_ = 0;
  int kmax_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::set<Circuit> found_;
};

}  // namespace

std::vector<Circuit> classical_circuits(Family family, int n, int kmax, std::size_t node_budget) {
  if (family != Family::A && family != Family::B && family != Family::D) {
    throw std::invalid_argument("classical circuit shapes exist for A, B and D only");
  }
  return ShapeGenerator(family, n, kmax, node_budget).run();
}

}  // namespace rootmat
