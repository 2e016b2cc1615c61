#include "rootmat/rootsystem.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

namespace rootmat {

namespace {

Vector unit(int dim, int i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

Vector pm(int dim, int i, int j, int sign) {
  Vector v(dim);
  v[i] = 1;
  v[j] = sign;
  return v;
}

Vector scaled(const Vector& v, const QuadExt& s) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

// Representative with first nonzero coordinate equal to 1.
Vector projective_key(const Vector& v) {
  auto it = std::find_if(v.begin(), v.end(), [](const QuadExt& x) { return !x.is_zero(); });
  if (it == v.end()) throw std::invalid_argument("zero vector has no line");
  return scaled(v, it->inverse());
}

std::vector<Vector> sign_patterns(const Vector& base) {
  std::vector<Vector> out{base};
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i].is_zero()) continue;
    std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) {
      Vector w = out[k];
      w[i] = -w[i];
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<Vector> even_permutations(const Vector& base) {
  std::vector<int> idx(base.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Vector> out;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) inversions += idx[a] > idx[b];
    }
    if (inversions % 2 != 0) continue;
    Vector w(base.size());
    for (std::size_t a = 0; a < idx.size(); ++a) w[a] = base[idx[a]];
    out.push_back(std::move(w));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::vector<Vector> d_roots(int n) {
  std::vector<Vector> roots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      roots.push_back(pm(n, i, j, -1));
      roots.push_back(pm(n, i, j, 1));
    }
  }
  return roots;
}

std::vector<Vector> dprime4_roots() {
  std::vector<Vector> roots;
  for (int i = 0; i < 4; ++i) roots.push_back(unit(4, i));
  Vector half(4, QuadExt(Rational(1, 2)));
  for (auto& v : sign_patterns(half)) roots.push_back(v);
  return roots;
}

std::vector<Vector> e8_roots() {
  std::vector<Vector> roots = d_roots(8);
  Vector half(8, QuadExt(Rational(1, 2)));
  for (auto& v : sign_patterns(half)) {
    int minus = 0;
    for (auto& x : v) minus += x.sign() < 0;
    if (minus % 2 == 0) roots.push_back(v);
  }
  return roots;
}

std::vector<Vector> orthogonal_to(const std::vector<Vector>& roots, const std::vector<Vector>& normals) {
  std::vector<Vector> out;
  for (const auto& r : roots) {
    bool ok = std::all_of(normals.begin(), normals.end(),
                          [&](const Vector& n) { return dot(r, n).is_zero(); });
    if (ok) out.push_back(r);
  }
  return out;
}

// (phi, 1, 1/phi, 0...) / 2 under even coordinate permutations and all signs
std::vector<Vector> golden_roots(int dim) {
  QuadExt phi = golden_ratio();
  Vector base(dim);
  base[0] = phi / QuadExt(2);
  base[1] = QuadExt(Rational(1, 2));
  base[2] = (phi - QuadExt(1)) / QuadExt(2);
  std::vector<Vector> out;
  for (auto& p : even_permutations(base)) {
    for (auto& v : sign_patterns(p)) out.push_back(v);
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidSystem(message);
}

}  // namespace

Vector canonical(Vector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const QuadExt& x) { return !x.is_zero(); });
  if (it != v.end() && it->sign() < 0) {
    for (auto& x : v) x = -x;
  }
  return v;
}

QuadExt dot(const Vector& v, const Vector& w) {
  QuadExt s;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

void RootSystem::set_lines(const std::vector<Vector>& roots) {
  lines_.clear();
  index_.clear();
  for (const auto& r : roots) {
    auto [it, inserted] = index_.emplace(projective_key(r), static_cast<int>(lines_.size()));
    if (inserted) lines_.push_back(canonical(r));
  }
  num_lines_ = static_cast<int>(lines_.size());
  ambient_dim_ = lines_.empty() ? 0 : static_cast<int>(lines_.front().size());
  field_ = Field::rational;
  for (const auto& v : lines_) {
    for (const auto& x : v) {
      if (!x.is_rational()) field_ = Field::quadratic;
    }
  }
}

int RootSystem::find_line(const Vector& v) const {
  if (!has_coordinates() || static_cast<int>(v.size()) != ambient_dim_) return -1;
  auto it = index_.find(projective_key(v));
  return it == index_.end() ? -1 : it->second;
}

RootSystem build(Family family, int n) {
  RootSystem sys;
  sys.family_ = family;
  sys.rank_param_ = n;
  switch (family) {
    case Family::A: {
      require(n >= 1, "A_n requires n >= 1");
      std::vector<Vector> roots;
      for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) roots.push_back(pm(n + 1, i, j, -1));
      }
      sys.set_lines(roots);
      sys.rank_ = n;
      sys.id_ = "A" + std::to_string(n);
      break;
    }
    case Family::B: {
      require(n >= 2, "B_n requires n >= 2");
      std::vector<Vector> roots;
      for (int i = 0; i < n; ++i) roots.push_back(unit(n, i));
      for (auto& v : d_roots(n)) roots.push_back(v);
      sys.set_lines(roots);
      sys.rank_ = n;
      sys.id_ = "B" + std::to_string(n);
      break;
    }
    case Family::D: {
      require(n >= 4, "D_n requires n >= 4 (D3 coincides with A3)");
      sys.set_lines(d_roots(n));
      sys.rank_ = n;
      sys.id_ = "D" + std::to_string(n);
      break;
    }
    case Family::Dprime4:
      sys.set_lines(dprime4_roots());
      sys.rank_param_ = 4;
      sys.rank_ = 4;
      sys.id_ = "Dp4";
      break;
    case Family::F4: {
      auto roots = d_roots(4);
      for (auto& v : dprime4_roots()) roots.push_back(v);
      sys.set_lines(roots);
      sys.rank_param_ = 4;
      sys.rank_ = 4;
      sys.id_ = "F4";
      break;
    }
    case Family::E8:
      sys.set_lines(e8_roots());
      sys.rank_param_ = 8;
      sys.rank_ = 8;
      sys.id_ = "E8";
      break;
    case Family::E7: {
      Vector a(8);
      a[6] = 1;
      a[7] = -1;
      sys.set_lines(orthogonal_to(e8_roots(), {a}));
      sys.rank_param_ = 7;
      sys.rank_ = 7;
      sys.id_ = "E7";
      break;
    }
    case Family::E6: {
      Vector a(8), b(8);
      a[6] = 1;
      a[7] = -1;
      b[5] = 1;
      b[6] = -1;
      sys.set_lines(orthogonal_to(e8_roots(), {a, b}));
      sys.rank_param_ = 6;
      sys.rank_ = 6;
      sys.id_ = "E6";
      break;
    }
    case Family::H3: {
      std::vector<Vector> roots;
      for (int i = 0; i < 3; ++i) roots.push_back(unit(3, i));
      for (auto& v : golden_roots(3)) roots.push_back(v);
      sys.set_lines(roots);
      sys.rank_param_ = 3;
      sys.rank_ = 3;
      sys.id_ = "H3";
      break;
    }
    case Family::H4: {
      std::vector<Vector> roots;
      for (int i = 0; i < 4; ++i) roots.push_back(unit(4, i));
      for (auto& v : sign_patterns(Vector(4, QuadExt(Rational(1, 2))))) roots.push_back(v);
      for (auto& v : golden_roots(4)) roots.push_back(v);
      sys.set_lines(roots);
      sys.rank_param_ = 4;
      sys.rank_ = 4;
      sys.id_ = "H4";
      break;
    }
    case Family::I2:
      require(n >= 5, "I2(m) requires m >= 5");
      sys.num_lines_ = n;
      sys.rank_ = 2;
      sys.id_ = "I2_" + std::to_string(n);
      break;
    case Family::DirectSum:
      throw InvalidSystem("use direct_sum() for reducible systems");
  }
  return sys;
}

RootSystem direct_sum(std::vector<RootSystem> components) {
  require(components.size() >= 2, "a direct sum needs at least two components");
  RootSystem sys;
  sys.family_ = Family::DirectSum;
  int dim = 0;
  for (const auto& c : components) {
    require(c.has_coordinates(), "I2 components are not supported in direct sums");
    require(c.family() != Family::DirectSum, "nested direct sums are not supported");
    dim += c.ambient_dim();
  }
  std::vector<Vector> roots;
  int offset = 0;
  for (const auto& c : components) {
    for (const auto& v : c.lines()) {
      Vector w(dim);
      std::copy(v.begin(), v.end(), w.begin() + offset);
      roots.push_back(std::move(w));
    }
    offset += c.ambient_dim();
    sys.rank_ += c.rank();
    sys.id_ += (sys.id_.empty() ? "" : "+") + c.id();
  }
  sys.set_lines(roots);
  sys.rank_param_ = sys.rank_;
  sys.components_ = std::move(components);
  return sys;
}

namespace {

RootSystem parse_irreducible(std::string_view id) {
  auto number = [&](std::string_view digits) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw InvalidSystem("unknown root system id '" + std::string(id) + "'");
    }
    return value;
  };
  if (id == "E6") return build(Family::E6);
  if (id == "E7") return build(Family::E7);
  if (id == "E8") return build(Family::E8);
  if (id == "F4") return build(Family::F4);
  if (id == "H3") return build(Family::H3);
  if (id == "H4") return build(Family::H4);
  if (id == "Dp4") return build(Family::Dprime4);
  if (id.starts_with("I2_")) return build(Family::I2, number(id.substr(3)));
  if (id.size() >= 2) {
    switch (id[0]) {
      case 'A': return build(Family::A, number(id.substr(1)));
      case 'B': return build(Family::B, number(id.substr(1)));
      case 'D': return build(Family::D, number(id.substr(1)));
      default: break;
    }
  }
  throw InvalidSystem("unknown root system id '" + std::string(id) + "'");
}

}  // namespace

RootSystem parse_system(std::string_view id) {
  std::vector<RootSystem> parts;
  std::size_t start = 0;
  while (true) {
    auto plus = id.find('+', start);
    parts.push_back(parse_irreducible(id.substr(start, plus - start)));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  if (parts.size() == 1) return std::move(parts.front());
  return direct_sum(std::move(parts));
}

Perm reflection_perm(const RootSystem& system, int line) {
  if (!system.has_coordinates()) throw std::invalid_argument("reflections need coordinates");
  const Vector& v = system.lines().at(line);
  QuadExt vv = dot(v, v);
  return induced_line_perm(system, [&](const Vector& w) {
    QuadExt c = QuadExt(2) * dot(w, v) / vv;
    Vector out = w;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * v[i];
    return out;
  });
}

namespace {

Perm negate_first_coordinate(const RootSystem& system) {
  return induced_line_perm(system, [](Vector w) {
    w[0] = -w[0];
    return w;
  });
}

// Lifts a permutation of one component's lines to the whole sum.
Perm embed(const Perm& p, int offset, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (int i = 0; i < p.degree(); ++i) images[offset + i] = offset + p[i];
  return Perm(std::move(images));
}

}  // namespace

namespace {

// Reflections in vectors outside the system that still permute its lines.
void append_reflections_in(const RootSystem& system, const std::vector<Vector>& mirrors, std::vector<Perm>& out) {
  for (const auto& s : mirrors) {
    QuadExt ss = dot(s, s);
    out.push_back(induced_line_perm(system, [&](const Vector& w) {
      QuadExt c = QuadExt(2) * dot(w, s) / ss;
      Vector r = w;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * s[i];
      return r;
    }));
  }
}

}  // namespace

std::vector<Perm> extra_symmetry_perms(const RootSystem& system) {
  std::vector<Perm> out;
  switch (system.family()) {
    case Family::B:
      out.push_back(negate_first_coordinate(system));
      break;
    case Family::D:
      if (system.rank_param() >= 5) {
        out.push_back(negate_first_coordinate(system));
      } else {
        // W(F4) acting on D4: reflections in the short roots of F4
        append_reflections_in(system, dprime4_roots(), out);
      }
      break;
    case Family::Dprime4:
      append_reflections_in(system, build(Family::D, 4).lines(), out);
      break;
    case Family::F4:
      // Integer multiple of the duality exchanging D4 and sqrt(2) D'4.
      out.push_back(induced_line_perm(system, [](const Vector& w) {
        return Vector{w[0] + w[1], w[0] - w[1], w[2] + w[3], w[2] - w[3]};
      }));
      break;
    case Family::H3:
    case Family::H4:
      // Galois conjugation lands on the mirror system (odd permutations of
      // the golden coordinates); the transposition of the first two
      // coordinates brings it back.
      out.push_back(induced_line_perm(system, [](const Vector& w) {
        Vector r(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) r[i] = galois(w[i]);
        std::swap(r[0], r[1]);
        return r;
      }));
      break;
    case Family::DirectSum: {
      int offset = 0;
      for (const auto& c : system.components()) {
        for (const auto& p : extra_symmetry_perms(c)) out.push_back(embed(p, offset, system.num_lines()));
        offset += c.num_lines();
      }
      break;
    }
    default:
      break;
  }
  return out;
}

std::vector<Perm> known_group_generators(const RootSystem& system) {
  std::vector<Perm> gens;
  if (system.rank() == 2 && system.family() != Family::DirectSum) {
    // rank 2 without parallel lines: the uniform matroid U(2, m), preserved
    // by every permutation (I2(m), and B2 = I2(4))
    int m = system.num_lines();
    std::vector<int> swap(m), cycle(m);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < m; ++i) cycle[i] = (i + 1) % m;
    gens.emplace_back(std::move(swap));
    gens.emplace_back(std::move(cycle));
    return gens;
  }
  if (system.family() == Family::DirectSum) {
    const auto& comps = system.components();
    std::vector<int> offsets;
    int offset = 0;
    for (const auto& c : comps) {
      offsets.push_back(offset);
      for (const auto& p : known_group_generators(c)) gens.push_back(embed(p, offset, system.num_lines()));
      offset += c.num_lines();
    }
    // exchange isomorphic components (identical coordinates per block)
    for (std::size_t a = 0; a < comps.size(); ++a) {
      for (std::size_t b = a + 1; b < comps.size(); ++b) {
        if (comps[a].id() != comps[b].id()) continue;
        std::vector<int> images(system.num_lines());
        std::iota(images.begin(), images.end(), 0);
        for (int i = 0; i < comps[a].num_lines(); ++i) {
          images[offsets[a] + i] = offsets[b] + i;
          images[offsets[b] + i] = offsets[a] + i;
        }
        gens.emplace_back(std::move(images));
        break;  // adjacent swaps suffice
      }
    }
    return gens;
  }
  for (int i = 0; i < system.num_lines(); ++i) gens.push_back(reflection_perm(system, i));
  for (auto& p : extra_symmetry_perms(system)) gens.push_back(std::move(p));
  return gens;
}

}  // namespace rootmat
