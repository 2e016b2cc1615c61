#include "rootmat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <map>
#include <set>

#include "rootmat/incidence.hpp"

namespace rootmat {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::budget_exceeded: return "BUDGET_EXCEEDED";
  }
  return "FAIL";
}

Status status_from_string(std::string_view s) {
  if (s == "PASS") return Status::pass;
  if (s == "FAIL") return Status::fail;
  if (s == "BUDGET_EXCEEDED") return Status::budget_exceeded;
  throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

nlohmann::json to_json(const VerificationReport& r) {
  return {
      {"check", r.check},
      {"system", r.system_id},
      {"num_lines", r.num_lines},
      {"c3_count", r.c3_count},
      {"aut_order", r.aut_order.get_str()},
      {"expected_order", r.expected_order.get_str()},
      {"known_group_order", r.known_group_order.get_str()},
      {"subgroup_ok", r.subgroup_ok},
      {"status", to_string(r.status)},
      {"timing_ms", r.millis},
      {"detail", r.detail},
  };
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.check = j.at("check").get<std::string>();
  r.system_id = j.at("system").get<std::string>();
  r.num_lines = j.at("num_lines").get<int>();
  r.c3_count = j.at("c3_count").get<long>();
  r.aut_order = mpz_class(j.at("aut_order").get<std::string>());
  r.expected_order = mpz_class(j.at("expected_order").get<std::string>());
  r.known_group_order = mpz_class(j.at("known_group_order").get<std::string>());
  r.subgroup_ok = j.at("subgroup_ok").get<bool>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.millis = j.at("timing_ms").get<double>();
  r.detail = j.at("detail").get<std::string>();
  return r;
}

namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class pow2(int e) {
  mpz_class p = 1;
  p <<= e;
  return p;
}

}  // namespace

mpz_class expected_order(const RootSystem& system) {
  const int n = system.rank_param();
  switch (system.family()) {
    // W(A1) contains -Id, which is trivial on the single line
    case Family::A: return n == 1 ? mpz_class(1) : factorial(n + 1);
    // B2 is the uniform matroid U(2, 4)
    case Family::B: return n == 2 ? mpz_class(24) : pow2(n - 1) * factorial(n);
    case Family::D: return n == 4 ? mpz_class(576) : pow2(n - 1) * factorial(n);
    case Family::Dprime4: return 576;
    case Family::E6: return 51840;
    case Family::E7: return 1451520;
    case Family::E8: return 348364800;
    case Family::F4: return 1152;
    case Family::H3: return 120;
    case Family::H4: return 14400;
    case Family::I2: return factorial(n);
    case Family::DirectSum: {
      std::map<std::string, std::pair<int, mpz_class>> groups;
      for (const auto& c : system.components()) {
        auto& [count, order] = groups[c.id()];
        ++count;
        order = expected_order(c);
      }
      mpz_class total = 1;
      for (const auto& [id, entry] : groups) {
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), entry.second.get_mpz_t(), static_cast<unsigned long>(entry.first));
        total *= factorial(entry.first) * power;
      }
      return total;
    }
  }
  return 0;
}

IncidenceAutomorphisms incidence_automorphisms(int ground_size, const std::vector<Circuit>& sets,
                                               const Budget& budget) {
  ColoredGraph g = build_incidence(ground_size, sets);
  AutomorphismGroup search = automorphism_group(g, SearchOptions{budget.graph_nodes});
  std::vector<Perm> restricted;
  for (const auto& gen : search.generators) restricted.push_back(restrict_to_ground(gen, ground_size));
  return {PermGroup(ground_size, std::move(restricted)), std::move(search)};
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool preserves(const Perm& p, const std::set<Circuit>& family) {
  for (const auto& c : family) {
    Circuit image;
    for (int x : c) image.push_back(p[x]);
    std::sort(image.begin(), image.end());
    if (!family.count(image)) return false;
  }
  return true;
}

}  // namespace

VerificationReport verify_theorem(std::string_view system_id, const Budget& budget) {
  auto start = Clock::now();
  RootSystem sys = parse_system(system_id);
  if (sys.family() == Family::DirectSum) return verify_wreath(system_id, budget);

  VerificationReport r;
  r.check = "theorem";
  r.system_id = sys.id();
  r.num_lines = sys.num_lines();
  r.expected_order = expected_order(sys);
  try {
    LinearMatroid m = LinearMatroid::from_system(sys);
    std::vector<Circuit> c3 = circuits3(m);
    r.c3_count = static_cast<long>(c3.size());

    std::vector<Perm> known = known_group_generators(sys);
    std::set<Circuit> c3_set(c3.begin(), c3.end());
    bool known_preserves = std::all_of(known.begin(), known.end(),
                                       [&](const Perm& p) { return preserves(p, c3_set); });

    auto aut = incidence_automorphisms(sys.num_lines(), c3, budget);
    PermGroup k(sys.num_lines(), std::move(known));
    r.aut_order = aut.group.order();
    r.known_group_order = k.order();
    r.subgroup_ok = is_subgroup(k, aut.group);

    std::vector<std::string> problems;
    if (!known_preserves) problems.push_back("a known symmetry does not preserve C3");
    if (aut.search.order != aut.group.order()) {
      problems.push_back("search orbit product " + aut.search.order.get_str() + " differs from BSGS order");
    }
    if (!r.subgroup_ok) problems.push_back("K(R) is not contained in Aut(G(X,C3))");
    if (r.known_group_order != r.aut_order) problems.push_back("|K(R)| != |Aut(G(X,C3))|");
    if (r.aut_order != r.expected_order) problems.push_back("|Aut(G(X,C3))| differs from the closed form");
    r.status = problems.empty() ? Status::pass : Status::fail;
    for (const auto& p : problems) r.detail += (r.detail.empty() ? "" : "; ") + p;
  } catch (const BudgetExceeded& e) {
    r.status = Status::budget_exceeded;
    r.detail = e.what();
  }
  r.millis = elapsed_ms(start);
  return r;
}

std::vector<std::string> expand_families(std::string_view spec) {
  std::vector<std::string> ids;
  auto bad = [&](std::string_view token) {
    return std::invalid_argument("bad family token '" + std::string(token) + "'");
  };
  auto parse_int = [&](std::string_view s, std::string_view token) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw bad(token);
    return v;
  };
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto comma = spec.find(',', start);
    std::string_view token = spec.substr(start, comma - start);
    start = comma == std::string_view::npos ? spec.size() + 1 : comma + 1;
    if (token.empty()) continue;
    auto colon = token.find(':');
    if (colon == std::string_view::npos) {
      if (token == "E") {
        ids.insert(ids.end(), {"E6", "E7", "E8"});
      } else if (token == "F") {
        ids.push_back("F4");
      } else if (token == "H") {
        ids.insert(ids.end(), {"H3", "H4"});
      } else {
        ids.emplace_back(token);
      }
      continue;
    }
    std::string_view family = token.substr(0, colon);
    std::string_view range = token.substr(colon + 1);
    auto dots = range.find("..");
    int lo = parse_int(range.substr(0, dots), token);
    int hi = dots == std::string_view::npos ? lo : parse_int(range.substr(dots + 2), token);
    for (int n = lo; n <= hi; ++n) {
      if (family == "I2") {
        ids.push_back("I2_" + std::to_string(n));
      } else if (family == "A" || family == "B" || family == "D") {
        ids.push_back(std::string(family) + std::to_string(n));
      } else {
        throw bad(token);
      }
    }
  }
  return ids;
}

std::vector<VerificationReport> verify_table(std::string_view families, const Budget& budget) {
  std::vector<std::string> ids = expand_families(families);
  for (const auto& id : ids) parse_system(id);  // reject bad ids before any work
  std::vector<VerificationReport> reports;
  for (const auto& id : ids) reports.push_back(verify_theorem(id, budget));
  return reports;
}

VerificationReport verify_wreath(std::string_view sum_spec, const Budget& budget) {
  auto start = Clock::now();
  RootSystem sys = parse_system(sum_spec);
  VerificationReport r;
  r.check = "wreath";
  r.system_id = sys.id();
  r.num_lines = sys.num_lines();
  r.expected_order = expected_order(sys);
  try {
    LinearMatroid m = LinearMatroid::from_system(sys);
    r.c3_count = static_cast<long>(circuits3(m).size());
    std::vector<Circuit> all = all_circuits_upto(m, m.rank() + 1, budget.circuit_nodes);
    auto aut = incidence_automorphisms(sys.num_lines(), all, budget);
    PermGroup k(sys.num_lines(), known_group_generators(sys));
    r.aut_order = aut.group.order();
    r.known_group_order = k.order();
    r.subgroup_ok = is_subgroup(k, aut.group);
    bool ok = r.subgroup_ok && r.aut_order == r.known_group_order && r.aut_order == r.expected_order;
    r.status = ok ? Status::pass : Status::fail;
    r.detail = std::to_string(all.size()) + " circuits";
  } catch (const BudgetExceeded& e) {
    r.status = Status::budget_exceeded;
    r.detail = e.what();
  }
  r.millis = elapsed_ms(start);
  return r;
}

VerificationReport oracle_crosscheck(std::string_view system_id, const Budget& budget) {
  auto start = Clock::now();
  RootSystem sys = parse_system(system_id);
  VerificationReport r;
  r.check = "crosscheck";
  r.system_id = sys.id();
  r.num_lines = sys.num_lines();
  r.expected_order = expected_order(sys);
  try {
    LinearMatroid m = LinearMatroid::from_system(sys);
    std::vector<Circuit> c3 = circuits3(m);
    r.c3_count = static_cast<long>(c3.size());
    std::vector<Circuit> all = all_circuits_upto(m, m.rank() + 1, budget.circuit_nodes);
    auto from_c3 = incidence_automorphisms(sys.num_lines(), c3, budget);
    auto from_all = incidence_automorphisms(sys.num_lines(), all, budget);
    r.aut_order = from_c3.group.order();
    r.known_group_order = from_all.group.order();
    r.subgroup_ok = is_subgroup(from_all.group, from_c3.group);
    r.status = equal(from_c3.group, from_all.group) ? Status::pass : Status::fail;
    r.detail = std::to_string(all.size()) + " circuits of order <= " + std::to_string(m.rank() + 1);
  } catch (const BudgetExceeded& e) {
    r.status = Status::budget_exceeded;
    r.detail = e.what();
  }
  r.millis = elapsed_ms(start);
  return r;
}

}  // namespace rootmat
