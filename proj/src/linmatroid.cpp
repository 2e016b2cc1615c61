#include "rootmat/linmatroid.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rootmat {

namespace {

// Fraction-free elimination; entries stay integral minors of the input.
// Returns nullopt if an intermediate product overflows.
std::optional<int> bareiss_rank_i64(std::vector<std::vector<long long>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  long long prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        long long x, y, d;
        if (__builtin_mul_overflow(m[r][c], m[i][j], &x) ||
            __builtin_mul_overflow(m[i][c], m[r][j], &y) ||
            __builtin_sub_overflow(x, y, &d)) {
          return std::nullopt;
        }
        m[i][j] = d / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

int bareiss_rank_mpz(const std::vector<std::vector<long long>>& in) {
  std::vector<std::vector<mpz_class>> m;
  for (const auto& row : in) {
    std::vector<mpz_class> r;
    for (long long x : row) r.emplace_back(static_cast<long>(x));
    m.push_back(std::move(r));
  }
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class d = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), d.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

int field_rank(std::vector<Vector> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    QuadExt inv = m[r][c].inverse();
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      QuadExt f = m[i][c] * inv;
      for (int j = c + 1; j < cols; ++j) m[i][j] -= f * m[r][j];
      m[i][c] = QuadExt();
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<long long>> primitive_integer_row(const Vector& v) {
  mpz_class lcm = 1;
  for (const auto& x : v) {
    if (!x.is_rational()) return std::nullopt;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.rational_part().denominator().get_mpz_t());
  }
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.rational_part().numerator() * (lcm / x.rational_part().denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  std::vector<long long> row;
  for (auto& n : ints) {
    if (sgn(g) != 0) n /= g;
    if (!n.fits_slong_p()) return std::nullopt;
    row.push_back(n.get_si());
  }
  return row;
}

}  // namespace

LinearMatroid LinearMatroid::from_vectors(std::vector<Vector> vectors) {
  LinearMatroid m;
  m.ground_size_ = static_cast<int>(vectors.size());
  m.kind_ = MatroidKind::linear;
  bool integral = true;
  for (const auto& v : vectors) {
    auto row = primitive_integer_row(v);
    if (!row) {
      integral = false;
      break;
    }
    m.integer_rows_.push_back(std::move(*row));
  }
  if (!integral) m.integer_rows_.clear();
  m.vectors_ = std::move(vectors);
  return m;
}

LinearMatroid LinearMatroid::uniform_rank2(int ground_size) {
  LinearMatroid m;
  m.ground_size_ = ground_size;
  m.kind_ = MatroidKind::uniform_rank2;
  return m;
}

LinearMatroid LinearMatroid::from_system(const RootSystem& system) {
  if (!system.has_coordinates()) return uniform_rank2(system.num_lines());
  return from_vectors(system.lines());
}

int LinearMatroid::rank(std::span<const int> subset) const {
  if (kind_ == MatroidKind::uniform_rank2) return std::min<int>(static_cast<int>(subset.size()), 2);
  for (int i : subset) {
    if (i < 0 || i >= ground_size_) throw std::out_of_range("ground index out of range");
  }
  if (subset.empty()) return 0;
  if (!integer_rows_.empty()) {
    std::vector<std::vector<long long>> rows;
    rows.reserve(subset.size());
    for (int i : subset) rows.push_back(integer_rows_[i]);
    if (auto r = bareiss_rank_i64(rows)) return *r;
    return bareiss_rank_mpz(rows);
  }
  std::vector<Vector> rows;
  rows.reserve(subset.size());
  for (int i : subset) rows.push_back(vectors_[i]);
  return field_rank(std::move(rows));
}

int LinearMatroid::rank() const {
  std::vector<int> all(ground_size_);
  std::iota(all.begin(), all.end(), 0);
  return rank(all);
}

bool LinearMatroid::is_independent(std::span<const int> subset) const {
  return rank(subset) == static_cast<int>(subset.size());
}

bool LinearMatroid::is_circuit(std::span<const int> subset) const {
  const int k = static_cast<int>(subset.size());
  if (k == 0 || rank(subset) != k - 1) return false;
  std::vector<int> rest;
  for (int skip = 0; skip < k; ++skip) {
    rest.clear();
    for (int t = 0; t < k; ++t) {
      if (t != skip) rest.push_back(subset[t]);
    }
    if (rank(rest) != k - 1) return false;
  }
  return true;
}

namespace {

void scan_triples_from(const LinearMatroid& m, int i, std::vector<Circuit>& out) {
  const int n = m.ground_size();
  for (int j = i + 1; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const int t[3] = {i, j, k};
      if (m.is_circuit(t)) out.push_back({i, j, k});
    }
  }
}

}  // namespace

std::vector<Circuit> circuits3_serial(const LinearMatroid& m) {
  std::vector<Circuit> out;
  for (int i = 0; i < m.ground_size(); ++i) scan_triples_from(m, i, out);
  return out;
}

std::vector<Circuit> circuits3(const LinearMatroid& m) {
  const int n = m.ground_size();
  std::vector<std::vector<Circuit>> by_first(std::max(n, 0));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) scan_triples_from(m, i, by_first[i]);
  std::vector<Circuit> out;
  for (auto& part : by_first) {
    for (auto& c : part) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Circuit> all_circuits_upto(const LinearMatroid& m, int kmax, std::size_t node_budget) {
  const int n = m.ground_size();
  kmax = std::min(kmax, m.rank() + 1);
  std::vector<Circuit> out;
  std::size_t nodes = 0;
  std::vector<int> current;

  // current is independent; try every larger element as the next member
  auto extend = [&](auto&& self) -> void {
    if (++nodes > node_budget) throw BudgetExceeded("circuit enumeration exceeded node budget");
    const int start = current.empty() ? 0 : current.back() + 1;
    const int size = static_cast<int>(current.size()) + 1;
    for (int x = start; x < n; ++x) {
      current.push_back(x);
      if (m.rank(current) == size) {
        if (size < kmax) self(self);
      } else if (m.is_circuit(current)) {
        out.push_back(current);
      }
      current.pop_back();
    }
  };
  if (kmax >= 1) extend(extend);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rootmat
