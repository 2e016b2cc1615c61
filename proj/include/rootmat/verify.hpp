#ifndef ROOTMAT_VERIFY_HPP
#define ROOTMAT_VERIFY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "rootmat/graphauto.hpp"
#include "rootmat/linmatroid.hpp"
#include "rootmat/permgrp.hpp"
#include "rootmat/rootsystem.hpp"

namespace rootmat {

enum class Status { pass, fail, budget_exceeded };

std::string to_string(Status s);
Status status_from_string(std::string_view s);

struct Budget {
  std::size_t graph_nodes = 200'000;
  std::size_t circuit_nodes = 5'000'000;

  // Tier for E7 and E8.
  static Budget extended() { return {50'000'000, 500'000'000}; }
};

// One verified statement about one root system. `check` is "theorem",
// "wreath" or "crosscheck"; for crosscheck, known_group_order holds the
// order of the group obtained from all circuits.
struct VerificationReport {
  std::string check = "theorem";
  std::string system_id;
  int num_lines = 0;
  long c3_count = 0;
  mpz_class aut_order = 0;
  mpz_class expected_order = 0;
  mpz_class known_group_order = 0;
  bool subgroup_ok = false;
  Status status = Status::fail;
  double millis = 0;
  std::string detail;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

// Order of Aut(M(R)) as a permutation group on the lines: the closed forms
// of the classification, and the wreath-product formula for direct sums.
mpz_class expected_order(const RootSystem& system);

// Automorphism group of the incidence graph G(X, F), acting on X.
struct IncidenceAutomorphisms {
  PermGroup group;
  AutomorphismGroup search;
};
IncidenceAutomorphisms incidence_automorphisms(int ground_size, const std::vector<Circuit>& sets,
                                               const Budget& budget);

// Squeeze K(R) <= Aut(M(R)) <= Aut(G(X, C3)) with |K(R)| = |Aut(G(X, C3))|.
// Direct sums are delegated to verify_wreath.
VerificationReport verify_theorem(std::string_view system_id, const Budget& budget = {});

// "A:1..7,B:2..7,D:4..7,E,F,H,I2:5..12" -> list of system ids.
std::vector<std::string> expand_families(std::string_view spec);
std::vector<VerificationReport> verify_table(std::string_view families, const Budget& budget = {});

// Full automorphism group (all circuits) of a direct sum against the wreath
// product formula and the explicit wreath generators.
VerificationReport verify_wreath(std::string_view sum_spec, const Budget& budget = {});

// Group from C3 against group from all circuits of order <= rank + 1.
VerificationReport oracle_crosscheck(std::string_view system_id, const Budget& budget = {});

}  // namespace rootmat

#endif  // ROOTMAT_VERIFY_HPP
