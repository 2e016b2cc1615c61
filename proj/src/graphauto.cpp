#include "rootmat/graphauto.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "rootmat/linmatroid.hpp"

namespace rootmat {

OrderedPartition OrderedPartition::unit(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return from_cells(n, n == 0 ? std::vector<std::vector<int>>{} : std::vector<std::vector<int>>{all});
}

OrderedPartition OrderedPartition::by_colors(const ColoredGraph& g) {
  std::vector<int> colors = g.colors();
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  std::vector<std::vector<int>> cells(colors.size());
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto it = std::lower_bound(colors.begin(), colors.end(), g.color(v));
    cells[it - colors.begin()].push_back(v);
  }
  return from_cells(g.num_vertices(), cells);
}

OrderedPartition OrderedPartition::from_cells(int n, const std::vector<std::vector<int>>& cells) {
  OrderedPartition p;
  p.position_.assign(n, -1);
  p.cell_.assign(n, -1);
  p.size_at_.assign(n, 0);
  for (const auto& c : cells) {
    if (c.empty()) throw std::invalid_argument("empty cell");
    const int start = static_cast<int>(p.elements_.size());
    for (int v : c) {
      if (v < 0 || v >= n || p.position_[v] >= 0) throw std::invalid_argument("cells do not partition the vertices");
      p.position_[v] = static_cast<int>(p.elements_.size());
      p.cell_[v] = start;
      p.elements_.push_back(v);
    }
    p.size_at_[start] = static_cast<int>(c.size());
    ++p.num_cells_;
  }
  if (p.size() != n) throw std::invalid_argument("cells do not cover the vertices");
  return p;
}

std::vector<std::vector<int>> OrderedPartition::cells() const {
  std::vector<std::vector<int>> out;
  for (int s = 0; s < size(); s += size_at_[s]) {
    std::vector<int> c(elements_.begin() + s, elements_.begin() + s + size_at_[s]);
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool OrderedPartition::is_equitable(const ColoredGraph& g) const {
  std::vector<int> count(size());
  for (int s = 0; s < size(); s += size_at_[s]) {
    for (int t = 0; t < size(); t += size_at_[t]) {
      int expected = -1;
      for (int i = s; i < s + size_at_[s]; ++i) {
        int c = 0;
        for (int w : g.neighbors(elements_[i])) c += cell_[w] == t;
        if (expected >= 0 && c != expected) return false;
        expected = c;
      }
    }
  }
  return true;
}

void OrderedPartition::individualize(int v) {
  const int s = cell_[v];
  const int len = size_at_[s];
  if (len == 1) return;
  const int other = elements_[s];
  std::swap(elements_[s], elements_[position_[v]]);
  position_[other] = position_[v];
  position_[v] = s;
  size_at_[s] = 1;
  size_at_[s + 1] = len - 1;
  for (int i = s + 1; i < s + len; ++i) cell_[elements_[i]] = s + 1;
  ++num_cells_;
}

// Splitter-queue refinement; accumulates an isomorphism-invariant trace of
// the splits it performs.
class Refiner {
 public:
  explicit Refiner(const ColoredGraph& g) : g_(g), count_(g.num_vertices(), 0), queued_(g.num_vertices(), 0) {}

  std::uint64_t run(OrderedPartition& p, const std::vector<int>& initial) {
    std::uint64_t trace = 0x9e3779b97f4a7c15ULL;
    std::deque<int> queue;
    for (int s : initial) {
      queue.push_back(s);
      queued_[s] = 1;
    }
    std::vector<int> touched_vertices;
    std::vector<int> touched_cells;
    std::vector<std::pair<int, int>> keyed;  // (count, vertex)
    while (!queue.empty() && !p.is_discrete()) {
      const int w = queue.front();
      queue.pop_front();
      queued_[w] = 0;
      for (int i = w; i < w + p.size_at_[w]; ++i) {
        for (int u : g_.neighbors(p.elements_[i])) {
          if (count_[u]++ == 0) touched_vertices.push_back(u);
        }
      }
      for (int u : touched_vertices) touched_cells.push_back(p.cell_[u]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());
      trace = mix(trace, static_cast<std::uint64_t>(w) << 32 | touched_cells.size());
      for (int s : touched_cells) {
        const int len = p.size_at_[s];
        keyed.clear();
        for (int i = s; i < s + len; ++i) keyed.emplace_back(count_[p.elements_[i]], p.elements_[i]);
        std::sort(keyed.begin(), keyed.end());
        trace = mix(trace, static_cast<std::uint64_t>(s) << 32 | static_cast<std::uint32_t>(keyed.back().first));
        if (keyed.front().first == keyed.back().first) continue;
        // write back and cut into fragments by count
        std::vector<int> starts;
        for (int i = 0; i < len; ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) starts.push_back(s + i);
          const int v = keyed[i].second;
          p.elements_[s + i] = v;
          p.position_[v] = s + i;
        }
        starts.push_back(s + len);
        int largest = 0;
        for (std::size_t f = 0; f + 1 < starts.size(); ++f) {
          const int fs = starts[f];
          const int flen = starts[f + 1] - fs;
          p.size_at_[fs] = flen;
          for (int i = fs; i < fs + flen; ++i) p.cell_[p.elements_[i]] = fs;
          trace = mix(trace, static_cast<std::uint64_t>(count_[p.elements_[fs]]) << 32 | flen);
          if (flen > starts[largest + 1] - starts[largest]) largest = static_cast<int>(f);
        }
        p.num_cells_ += static_cast<int>(starts.size()) - 2;
        const bool parent_queued = queued_[s];
        for (std::size_t f = 0; f + 1 < starts.size(); ++f) {
          const int fs = starts[f];
          if (queued_[fs]) continue;
          if (!parent_queued && static_cast<int>(f) == largest) continue;
          queued_[fs] = 1;
          queue.push_back(fs);
        }
      }
      for (int u : touched_vertices) count_[u] = 0;
      touched_vertices.clear();
      touched_cells.clear();
    }
    for (int s : queue) queued_[s] = 0;
    return mix(trace, static_cast<std::uint64_t>(p.num_cells_));
  }

 private:
  static std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    return h ^ (h >> 33);
  }

  const ColoredGraph& g_;
  std::vector<int> count_;
  std::vector<char> queued_;
};

OrderedPartition refine(const ColoredGraph& g, OrderedPartition p) {
  if (p.size() != g.num_vertices()) throw std::invalid_argument("partition size does not match graph");
  std::vector<int> all;
  for (int s = 0; s < p.size(); s += p.cell_size(s)) all.push_back(s);
  Refiner(g).run(p, all);
  return p;
}

namespace {

int target_cell(const OrderedPartition& p) {
  int best = -1;
  for (int s = 0; s < p.size(); s += p.cell_size(s)) {
    const int len = p.cell_size(s);
    if (len > 1 && (best < 0 || len < p.cell_size(best))) best = s;
  }
  return best;
}

struct Node {
  OrderedPartition partition;
  std::uint64_t trace = 0;
  int target = -1;
};

class Search {
 public:
  Search(const ColoredGraph& g, const SearchOptions& options)
      : g_(g), options_(options), refiner_(g), parent_(g.num_vertices()) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  AutomorphismGroup run() {
    AutomorphismGroup result;
    const int n = g_.num_vertices();
    result.order = 1;
    if (n == 0) return result;

    Node root;
    root.partition = OrderedPartition::by_colors(g_);
    std::vector<int> all;
    for (int s = 0; s < n; s += root.partition.cell_size(s)) all.push_back(s);
    root.trace = refine_step(root.partition, all);
    root.target = target_cell(root.partition);
    path_.push_back(root);
    while (path_.back().target >= 0) {
      Node next;
      next.partition = path_.back().partition;
      const int b = next.partition.elements()[path_.back().target];
      base_.push_back(b);
      next.trace = individualize_refine(next.partition, b);
      next.target = target_cell(next.partition);
      path_.push_back(std::move(next));
    }
    const auto leaf = path_.back().partition.elements();
    leaf_.assign(leaf.begin(), leaf.end());

    std::vector<int> orbit_sizes(base_.size());
    for (int level = static_cast<int>(base_.size()) - 1; level >= 0; --level) {
      const Node& node = path_[level];
      const int b = base_[level];
      const auto cell = node.partition.elements().subspan(node.target, node.partition.cell_size(node.target));
      std::vector<int> candidates(cell.begin(), cell.end());
      std::vector<int> failed_roots;
      for (int v : candidates) {
        if (find(v) == find(b)) continue;
        if (std::find(failed_roots.begin(), failed_roots.end(), find(v)) != failed_roots.end()) continue;
        OrderedPartition child = node.partition;
        const std::uint64_t trace = individualize_refine(child, v);
        std::vector<int> found;
        if (trace == path_[level + 1].trace && descend(child, level + 1, found)) {
          Perm gamma(std::move(found));
          generators_.push_back(gamma);
          for (int x = 0; x < n; ++x) unite(x, gamma[x]);
          for (int& r : failed_roots) r = find(r);
        } else {
          failed_roots.push_back(find(v));
        }
      }
      int size = 0;
      for (int v : candidates) size += find(v) == find(b);
      orbit_sizes[level] = size;
      result.order *= size;
    }
    result.generators = generators_;
    result.base = base_;
    result.orbit_sizes = orbit_sizes;
    result.nodes = nodes_;
    return result;
  }

 private:
  std::uint64_t refine_step(OrderedPartition& p, const std::vector<int>& cells) {
    if (++nodes_ > options_.node_budget) throw BudgetExceeded("automorphism search exceeded node budget");
    return refiner_.run(p, cells);
  }

  std::uint64_t individualize_refine(OrderedPartition& p, int v) {
    p.individualize(v);
    return refine_step(p, {p.cell_of(v)});
  }

  // Looks below `p` (same trace as the first path at `level`) for a leaf
  // whose labeling differs from the first leaf by an automorphism.
  bool descend(const OrderedPartition& p, int level, std::vector<int>& found) {
    if (p.is_discrete()) {
      std::vector<int> images(p.size());
      for (int i = 0; i < p.size(); ++i) images[leaf_[i]] = p.elements()[i];
      Perm gamma(images);
      if (!g_.is_automorphism(gamma)) return false;
      found = std::move(images);
      return true;
    }
    const int t = target_cell(p);
    if (t != path_[level].target) return false;
    const auto cell = p.elements().subspan(t, p.cell_size(t));
    std::vector<int> candidates(cell.begin(), cell.end());
    for (int v : candidates) {
      OrderedPartition child = p;
      if (individualize_refine(child, v) != path_[level + 1].trace) continue;
      if (descend(child, level + 1, found)) return true;
    }
    return false;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  const ColoredGraph& g_;
  SearchOptions options_;
  Refiner refiner_;
  std::vector<Node> path_;
  std::vector<int> base_;
  std::vector<int> leaf_;
  std::vector<Perm> generators_;
  std::vector<int> parent_;
  std::size_t nodes_ = 0;
};

}  // namespace

AutomorphismGroup automorphism_group(const ColoredGraph& g, const SearchOptions& options) {
  return Search(g, options).run();
}

}  // namespace rootmat
