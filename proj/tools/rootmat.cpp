// rootmat: automorphism groups of root system matroids.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rootmat/incidence.hpp"
#include "rootmat/verify.hpp"

using namespace rootmat;

namespace {

struct Common {
  std::size_t budget = 0;  // 0: tier default
  bool extended = false;
  std::string format = "text";
};

Budget budget_of(const Common& c) {
  Budget b = c.extended ? Budget::extended() : Budget{};
  if (c.budget > 0) b.graph_nodes = c.budget;
  return b;
}

void print_reports(const std::vector<VerificationReport>& reports, const std::string& format) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::cout << (reports.size() == 1 ? arr[0] : arr).dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    std::cout << "check,system,lines,c3,aut_order,expected_order,known_group_order,subgroup,status,ms\n";
    for (const auto& r : reports) {
      std::cout << r.check << ',' << r.system_id << ',' << r.num_lines << ',' << r.c3_count << ','
                << r.aut_order.get_str() << ',' << r.expected_order.get_str() << ','
                << r.known_group_order.get_str() << ',' << (r.subgroup_ok ? "yes" : "no") << ','
                << to_string(r.status) << ',' << std::fixed << std::setprecision(1) << r.millis << '\n';
    }
    return;
  }
  std::cout << std::left << std::setw(12) << "system" << std::right << std::setw(7) << "lines" << std::setw(8)
            << "|C3|" << std::setw(12) << "|Aut|" << std::setw(12) << "expected" << std::setw(12) << "|K|"
            << std::setw(17) << "status" << std::setw(11) << "ms" << '\n';
  for (const auto& r : reports) {
    std::cout << std::left << std::setw(12) << r.system_id << std::right << std::setw(7) << r.num_lines
              << std::setw(8) << r.c3_count << std::setw(12) << r.aut_order.get_str() << std::setw(12)
              << r.expected_order.get_str() << std::setw(12) << r.known_group_order.get_str() << std::setw(17)
              << to_string(r.status) << std::setw(11) << std::fixed << std::setprecision(1) << r.millis << '\n';
    if (!r.detail.empty() && r.status != Status::pass) std::cout << "    " << r.detail << '\n';
  }
}

int exit_code(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.status != Status::pass) return 1;
  }
  return 0;
}

void add_common(CLI::App* cmd, Common& c, bool with_format) {
  cmd->add_option("--budget", c.budget, "Node budget for the automorphism search");
  cmd->add_flag("--extended", c.extended, "Use the extended budget tier (needed for E7/E8)");
  if (with_format) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Automorphism groups of root system matroids.\n"
      "System ids: A<n>, B<n>, D<n>, E6, E7, E8, F4, H3, H4, I2_<m>, and sums such as A2+A2+B3.\n"
      "G2 has the same matroid as I2_6."};
  app.require_subcommand(1);

  Common common;
  std::string system;
  int exit = 0;

  auto* verify = app.add_subcommand("verify", "Certify one system by the squeeze K(R) <= Aut(M) <= Aut(G(X,C3))");
  verify->add_option("--system", system)->required();
  add_common(verify, common, true);
  verify->callback([&] {
    std::vector<VerificationReport> r{verify_theorem(system, budget_of(common))};
    print_reports(r, common.format);
    exit = exit_code(r);
  });

  std::string families = "A:1..7,B:2..7,D:4..7,E,F,H,I2:5..12";
  auto* table = app.add_subcommand("table", "Reproduce the classification table");
  table->add_option("--families", families, "Family ranges, e.g. A:1..7,B:2..7,D:4..7,E,F,H,I2:5..12");
  add_common(table, common, true);
  table->callback([&] {
    auto reports = verify_table(families, budget_of(common));
    print_reports(reports, common.format);
    exit = exit_code(reports);
  });

  int max_order = 3;
  auto* circuits = app.add_subcommand("circuits", "List circuits up to a given order");
  circuits->add_option("--system", system)->required();
  circuits->add_option("--max-order", max_order)->check(CLI::PositiveNumber);
  circuits->add_option("--format", common.format)->check(CLI::IsMember({"text", "json"}));
  circuits->callback([&] {
    RootSystem sys = parse_system(system);
    LinearMatroid m = LinearMatroid::from_system(sys);
    std::vector<Circuit> list = max_order == 3 ? circuits3(m) : all_circuits_upto(m, max_order);
    if (max_order < 3) {
      std::erase_if(list, [&](const Circuit& c) { return static_cast<int>(c.size()) > max_order; });
    }
    if (common.format == "json") {
      nlohmann::json j{{"system", sys.id()}, {"order", max_order}, {"circuits", list}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout << sys.id() << ": " << list.size() << " circuits of order <= " << max_order << '\n';
      for (const auto& c : list) {
        std::cout << std::setw(4) << c.size() << "  {";
        for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? ", " : "") << c[i];
        std::cout << "}\n";
      }
    }
  });

  bool emit_generators = false;
  std::string dimacs_path;
  auto* aut = app.add_subcommand("aut", "Automorphism group of the C3 incidence graph, acting on lines");
  aut->add_option("--system", system)->required();
  aut->add_flag("--emit-generators", emit_generators, "Print generators in cycle notation");
  aut->add_option("--dimacs", dimacs_path, "Also write the incidence graph in DIMACS form");
  add_common(aut, common, false);
  aut->callback([&] {
    RootSystem sys = parse_system(system);
    LinearMatroid m = LinearMatroid::from_system(sys);
    auto c3 = circuits3(m);
    if (!dimacs_path.empty()) {
      std::ofstream(dimacs_path) << to_dimacs(build_incidence(sys.num_lines(), c3));
    }
    auto result = incidence_automorphisms(sys.num_lines(), c3, budget_of(common));
    std::cout << sys.id() << ": |Aut| = " << result.group.order().get_str() << " (" << result.search.nodes
              << " search nodes)\n";
    if (emit_generators) {
      for (const auto& g : result.group.generators()) std::cout << g.cycles() << '\n';
    }
  });

  std::string sum_spec;
  auto* wreath = app.add_subcommand("wreath", "Check the wreath-product formula on a reducible system");
  wreath->add_option("--spec", sum_spec)->required();
  add_common(wreath, common, true);
  wreath->callback([&] {
    std::vector<VerificationReport> r{verify_wreath(sum_spec, budget_of(common))};
    print_reports(r, common.format);
    exit = exit_code(r);
  });

  auto* cross = app.add_subcommand("crosscheck", "Compare the C3 group with the group from all circuits");
  cross->add_option("--system", system)->required();
  add_common(cross, common, true);
  cross->callback([&] {
    std::vector<VerificationReport> r{oracle_crosscheck(system, budget_of(common))};
    print_reports(r, common.format);
    exit = exit_code(r);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "rootmat: " << e.what() << '\n';
    return 2;
  }
  return exit;
}
