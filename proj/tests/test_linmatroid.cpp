#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rootmat/linmatroid.hpp"

using namespace rootmat;

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int line(const RootSystem& sys, std::initializer_list<QuadExt> v) {
  int i = sys.find_line(Vector(v));
  REQUIRE(i >= 0);
  return i;
}

std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("rank examples") {
  RootSystem a3 = build(Family::A, 3);
  LinearMatroid m = LinearMatroid::from_system(a3);
  CHECK(m.rank(std::vector<int>{}) == 0);
  CHECK(m.rank() == 3);
  std::vector<int> tri{line(a3, {1, -1, 0, 0}), line(a3, {0, 1, -1, 0}), line(a3, {1, 0, -1, 0})};
  CHECK(m.rank(tri) == 2);
  CHECK_THROWS_AS(m.rank(std::vector<int>{6}), std::out_of_range);

  for (const char* id : {"E6", "E7", "E8", "F4", "H3", "H4", "D5", "B4", "A2+B2"}) {
    RootSystem sys = parse_system(id);
    CAPTURE(id);
    CHECK(LinearMatroid::from_system(sys).rank() == sys.rank());
  }
}

TEST_CASE("independence and circuit examples") {
  RootSystem b2 = build(Family::B, 2);
  LinearMatroid m = LinearMatroid::from_system(b2);
  std::vector<int> three{line(b2, {1, 0}), line(b2, {0, 1}), line(b2, {1, 1})};
  std::sort(three.begin(), three.end());
  CHECK(m.is_circuit(three));
  std::vector<int> two{line(b2, {1, 0}), line(b2, {0, 1})};
  CHECK(m.is_independent(two));
  CHECK_FALSE(m.is_circuit(two));

  RootSystem a4 = build(Family::A, 4);
  LinearMatroid m4 = LinearMatroid::from_system(a4);
  std::vector<int> square{line(a4, {1, -1, 0, 0, 0}), line(a4, {0, 1, -1, 0, 0}), line(a4, {0, 0, 1, -1, 0}),
                          line(a4, {1, 0, 0, -1, 0})};
  std::sort(square.begin(), square.end());
  CHECK(m4.is_circuit(square));
  // adding a chord makes it dependent but not minimal
  square.push_back(line(a4, {1, 0, -1, 0, 0}));
  std::sort(square.begin(), square.end());
  CHECK_FALSE(m4.is_circuit(square));
}

TEST_CASE("uniform rank-2 matroid") {
  LinearMatroid u = LinearMatroid::uniform_rank2(7);
  CHECK(u.kind() == MatroidKind::uniform_rank2);
  CHECK(u.rank(std::vector<int>{0, 1}) == 2);
  CHECK(u.rank(std::vector<int>{0, 1, 2, 3}) == 2);
  CHECK(u.is_circuit(std::vector<int>{1, 4, 6}));
  CHECK_FALSE(u.is_circuit(std::vector<int>{1, 4, 5, 6}));
  for (int m = 5; m <= 9; ++m) CHECK(circuits3(LinearMatroid::uniform_rank2(m)).size() == static_cast<std::size_t>(binom(m, 3)));
}

TEST_CASE("order-3 circuits against subset enumeration") {
  CHECK(circuits3(LinearMatroid::from_system(build(Family::A, 3))).size() == 4);
  CHECK(circuits3(LinearMatroid::from_system(build(Family::B, 2))).size() == 4);
  for (const char* id : {"A3", "B2", "B3", "D4", "F4", "H3", "A2+A2"}) {
    CAPTURE(id);
    RootSystem sys = parse_system(id);
    auto c3 = circuits3(LinearMatroid::from_system(sys));
    auto brute = oracle::circuits_by_subsets(sys.lines(), 3);
    CHECK(c3 == brute);
  }
}

TEST_CASE("order-3 circuit counts of the classical families") {
  for (int n = 2; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(circuits3(LinearMatroid::from_system(build(Family::A, n))).size() == static_cast<std::size_t>(binom(n + 1, 3)));
    // each coordinate pair spans a plane holding 4 lines of B_n
    CHECK(circuits3(LinearMatroid::from_system(build(Family::B, n))).size() ==
          static_cast<std::size_t>(4 * binom(n, 3) + 4 * binom(n, 2)));
    if (n >= 4) {
      CHECK(circuits3(LinearMatroid::from_system(build(Family::D, n))).size() ==
            static_cast<std::size_t>(4 * binom(n, 3)));
    }
  }
}

TEST_CASE("parallel triple scan matches the serial reference") {
  for (const char* id : {"A5", "B4", "D6", "E6", "E7", "F4", "H3", "H4", "A2+B3"}) {
    CAPTURE(id);
    LinearMatroid m = LinearMatroid::from_system(parse_system(id));
    auto fast = circuits3(m);
    CHECK(fast == circuits3_serial(m));
    CHECK(std::is_sorted(fast.begin(), fast.end()));
  }
}

TEST_CASE("all circuits up to a bound") {
  RootSystem a3 = build(Family::A, 3);
  LinearMatroid m = LinearMatroid::from_system(a3);
  auto all = all_circuits_upto(m, 4);
  CHECK(all.size() == 7);
  CHECK(std::count_if(all.begin(), all.end(), [](const Circuit& c) { return c.size() == 4; }) == 3);
  CHECK(all == oracle::circuits_by_subsets(a3.lines(), 4));

  LinearMatroid b2 = LinearMatroid::from_system(build(Family::B, 2));
  CHECK(all_circuits_upto(b2, 3) == circuits3(b2));
  CHECK(all_circuits_upto(b2, 10) == circuits3(b2));  // capped at rank + 1

  for (const char* id : {"B3", "D4", "H3", "A2+A2"}) {
    CAPTURE(id);
    RootSystem sys = parse_system(id);
    LinearMatroid lm = LinearMatroid::from_system(sys);
    CHECK(all_circuits_upto(lm, sys.rank() + 1) == oracle::circuits_by_subsets(sys.lines(), sys.rank() + 1));
  }
  CHECK_THROWS_AS(all_circuits_upto(LinearMatroid::from_system(build(Family::D, 5)), 6, 100), BudgetExceeded);
}

TEST_CASE("matroid axioms hold exhaustively on A3, B3, D4") {
  for (const char* id : {"A3", "B3", "D4"}) {
    CAPTURE(id);
    RootSystem sys = parse_system(id);
    LinearMatroid m = LinearMatroid::from_system(sys);
    std::vector<std::vector<int>> independent;
    std::set<std::vector<int>> lookup;
    for (auto& s : all_subsets(sys.num_lines())) {
      if (m.is_independent(s)) {
        lookup.insert(s);
        independent.push_back(std::move(s));
      }
    }
    REQUIRE(lookup.count({}) == 1);
    for (const auto& s : independent) {
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        std::vector<int> sub = s;
        sub.erase(sub.begin() + static_cast<long>(skip));
        REQUIRE(lookup.count(sub) == 1);
      }
    }
    for (const auto& a : independent) {
      for (const auto& b : independent) {
        if (a.size() <= b.size()) continue;
        bool augmentable = false;
        for (int x : a) {
          if (std::binary_search(b.begin(), b.end(), x)) continue;
          std::vector<int> bx = b;
          bx.insert(std::upper_bound(bx.begin(), bx.end(), x), x);
          if (lookup.count(bx)) {
            augmentable = true;
            break;
          }
        }
        REQUIRE(augmentable);
      }
    }
  }
}

TEST_CASE("ranks do not depend on the chosen representatives") {
  auto flipped = [](const RootSystem& sys, unsigned mask) {
    std::vector<Vector> lines = sys.lines();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (mask >> (i % 32) & 1) {
        for (auto& x : lines[i]) x = -x;
      }
    }
    return LinearMatroid::from_vectors(lines);
  };
  for (const char* id : {"A3", "B2"}) {
    RootSystem sys = parse_system(id);
    LinearMatroid base = LinearMatroid::from_system(sys);
    auto subsets = all_subsets(sys.num_lines());
    for (unsigned mask = 0; mask < (1u << sys.num_lines()); ++mask) {
      LinearMatroid other = flipped(sys, mask);
      for (const auto& s : subsets) REQUIRE(other.rank(s) == base.rank(s));
    }
  }
  std::mt19937 rng(31);
  for (const char* id : {"E8", "H4", "F4", "B6"}) {
    CAPTURE(id);
    RootSystem sys = parse_system(id);
    LinearMatroid base = LinearMatroid::from_system(sys);
    LinearMatroid other = flipped(sys, static_cast<unsigned>(rng()));
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<int> s;
      for (int i = 0; i < sys.num_lines(); ++i) {
        if (rng() % sys.num_lines() < 4) s.push_back(i);
      }
      REQUIRE(other.rank(s) == base.rank(s));
    }
  }
}

TEST_CASE("order-3 circuits are closed under the known symmetries") {
  for (const char* id : {"A4", "B4", "D4", "D5", "E6", "F4", "H3", "H4"}) {
    CAPTURE(id);
    RootSystem sys = parse_system(id);
    auto c3 = circuits3(LinearMatroid::from_system(sys));
    std::set<Circuit> family(c3.begin(), c3.end());
    for (const auto& g : known_group_generators(sys)) {
      for (const auto& c : c3) {
        Circuit image{g[c[0]], g[c[1]], g[c[2]]};
        std::sort(image.begin(), image.end());
        REQUIRE(family.count(image) == 1);
      }
    }
  }
}

TEST_CASE("signed-graph circuit shapes") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    auto a = classical_circuits(Family::A, n, 3);
    CHECK(a.size() == static_cast<std::size_t>(binom(n + 1, 3)));
    CHECK(a == circuits3(LinearMatroid::from_system(build(Family::A, n))));
    auto b = classical_circuits(Family::B, n, 3);
    CHECK(b == circuits3(LinearMatroid::from_system(build(Family::B, n))));
    if (n >= 4) {
      auto d = classical_circuits(Family::D, n, 3);
      CHECK(d.size() == static_cast<std::size_t>(4 * binom(n, 3)));
      CHECK(d == circuits3(LinearMatroid::from_system(build(Family::D, n))));
    }
  }
  for (auto [fam, n] : {std::pair{Family::A, 3}, {Family::A, 4}, {Family::B, 3}, {Family::B, 4}, {Family::D, 4}}) {
    RootSystem sys = build(fam, n);
    CAPTURE(sys.id());
    CHECK(classical_circuits(fam, n, n + 1) == all_circuits_upto(LinearMatroid::from_system(sys), n + 1));
  }
  CHECK_THROWS_AS(classical_circuits(Family::E8, 8, 3), std::invalid_argument);
  CHECK_THROWS_AS(classical_circuits(Family::B, 5, 6, 10), BudgetExceeded);
}
