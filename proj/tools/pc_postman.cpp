#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcp/arc_graph.hpp"
#include "pcp/errors.hpp"
#include "pcp/euler.hpp"
#include "pcp/generator.hpp"
#include "pcp/graph.hpp"
#include "pcp/io.hpp"
#include "pcp/oracle.hpp"
#include "pcp/solver.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pcp::InputError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_check(const std::string& file, const std::string& format) {
  pcp::ColoredMultiDigraph g = pcp::parse_instance(read_file(file));
  pcp::BalanceReport bal = pcp::is_color_balanced(g);
  pcp::FeasibilityReport feas = pcp::check_feasible(g);
  const pcp::ConnectivityReport& conn = feas.connectivity;

  if (format == "json") {
    nlohmann::json j;
    j["balanced"] = bal.balanced;
    j["trailConnected"] = conn.connected;
    j["feasible"] = feas.feasible;
    j["weight"] = pcp::format_rational(g.total_weight());
    if (conn.connected) {
      j["witness"] = nullptr;
    } else {
      j["witness"] = {conn.witness_from + 1, conn.witness_to + 1};
    }
    std::cout << j.dump() << "\n";
  } else {
    std::ostringstream line;
    line << "balanced: " << yes_no(bal.balanced);
    if (!bal.balanced) line << " (vertex " << bal.vertex + 1 << " color " << bal.color << ")";
    line << ", trail-connected: " << yes_no(conn.connected);
    if (!conn.connected) {
      line << " (witness arcs " << conn.witness_from + 1 << "→" << conn.witness_to + 1 << ")";
    }
    line << ", feasible: " << yes_no(feas.feasible);
    if (feas.feasible != conn.connected) line << " (single arc cannot close a walk)";
    std::cout << line.str() << "\n";
  }
  return feas.feasible ? 0 : 1;
}

void print_euler_diagnostic(const pcp::ColoredMultiDigraph& g) {
  if (g.arc_count() == 0) {
    std::cout << "no arcs to cover\n";
    return;
  }
  pcp::BalanceReport bal = pcp::is_color_balanced(g);
  if (!bal.balanced) {
    std::cout << "not color-balanced: vertex " << bal.vertex + 1 << " color " << bal.color << "\n";
    return;
  }
  pcp::ArcGraph ag(g);
  pcp::ConnectivityReport conn = pcp::is_pc_trail_connected(ag);
  if (!conn.connected) {
    std::cout << "not trail-connected: no properly colored trail from arc "
              << conn.witness_from + 1 << " to arc " << conn.witness_to + 1 << "\n";
    if (g.color_count() == 2) {
      pcp::CircuitDecomposition deco = pcp::decompose_into_circuits(g);
      for (const pcp::Circuit& c : deco.circuits) {
        if (auto component = pcp::is_bad_circuit(g, c)) {
          std::cout << "bad circuit: arcs";
          for (int f : c.arc_ids) std::cout << " " << f + 1;
          std::cout << " cannot be switched into twice from component arcs";
          for (int f : *component) std::cout << " " << f + 1;
          std::cout << "\n";
          return;
        }
      }
    }
    return;
  }
  std::cout << "color-balanced and trail-connected, yet no proper Euler trail exists"
            << " (possible with 3 or more colors)\n";
}

int run_euler(const std::string& file) {
  pcp::ColoredMultiDigraph g = pcp::parse_instance(read_file(file));
  std::optional<pcp::ClosedWalk> walk;
  if (g.color_count() == 2) {
    walk = pcp::pc_euler_trail(g);
  } else if (auto seq = pcp::oracle::euler_trail(g)) {
    walk = pcp::ClosedWalk{*seq, g.total_weight()};
  }
  if (walk) {
    std::cout << pcp::emit_walk(*walk);
    return 0;
  }
  std::cout << "INFEASIBLE\n";
  print_euler_diagnostic(g);
  return 1;
}

int run_solve(const std::string& file, int threads) {
  pcp::ColoredMultiDigraph g = pcp::parse_instance(read_file(file));
  std::optional<pcp::Solution> sol = pcp::solve(g, threads);
  if (sol) {
    std::cout << pcp::emit_solution(*sol);
    return 0;
  }
  std::cout << "INFEASIBLE\n";
  pcp::FeasibilityReport feas = pcp::check_feasible(g);
  if (!feas.connectivity.connected) {
    std::cout << "no properly colored trail from arc " << feas.connectivity.witness_from + 1
              << " to arc " << feas.connectivity.witness_to + 1 << "\n";
  } else {
    std::cout << "single arc cannot close a walk\n";
  }
  return 1;
}

int run_verify(const std::string& instance_file, const std::string& walk_file, bool cover,
               bool trail) {
  pcp::ColoredMultiDigraph g = pcp::parse_instance(read_file(instance_file));
  pcp::ClosedWalk walk = pcp::parse_walk(read_file(walk_file), g);
  pcp::WalkCheck check = pcp::verify_closed_pc_walk(g, walk, cover, trail);
  if (check.ok) {
    std::cout << "VALID\n";
    return 0;
  }
  std::cout << "INVALID: " << check.violation << "\n";
  return 1;
}

pcp::ColorSet parse_colors(const std::string& csv) {
  if (csv.empty()) return pcp::ColorSet::all();
  std::vector<int> colors;
  std::istringstream in(csv);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      colors.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw pcp::InputError("bad color list: " + csv);
    }
  }
  return pcp::ColorSet::of(colors);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"properly colored postman tours over arc-colored digraphs"};
  app.require_subcommand(1);

  std::string file, walk_file, format = "text", out_path, mode = "uniform";
  std::string start_colors_csv, end_colors_csv;
  int threads = 1;
  bool trail = false, no_cover = false;
  int fev_s = 0, fev_t = 0;
  pcp::GeneratorConfig gen_cfg;

  CLI::App* check = app.add_subcommand("check", "report balance / trail-connectivity / feasibility");
  check->add_option("file", file)->required();
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* euler = app.add_subcommand("euler", "emit a properly colored Euler trail");
  euler->add_option("file", file)->required();

  CLI::App* solve = app.add_subcommand("solve", "emit a minimum-weight covering walk");
  solve->add_option("file", file)->required();
  solve->add_option("--threads", threads)->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand("verify", "validate a walk file against an instance");
  verify->add_option("instance", file)->required();
  verify->add_option("walk", walk_file)->required();
  verify->add_flag("--trail", trail, "require arc-distinctness");
  verify->add_flag("--no-cover", no_cover, "do not require full coverage");

  CLI::App* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("--mode", mode)->check(CLI::IsMember({"uniform", "feasible", "figure-family"}));
  gen->add_option("-n,--vertices", gen_cfg.vertex_count);
  gen->add_option("-m,--arcs", gen_cfg.arc_target);
  gen->add_option("-c,--colors", gen_cfg.color_count);
  gen->add_option("--wmin", gen_cfg.weight_min);
  gen->add_option("--wmax", gen_cfg.weight_max);
  gen->add_option("--seed", gen_cfg.seed);
  gen->add_option("--petals", gen_cfg.petals);
  gen->add_option("--duplicates", gen_cfg.duplicates);
  gen->add_option("-o,--output", out_path);

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference solvers (small instances)");
  oracle->require_subcommand(1);
  CLI::App* ocpp = oracle->add_subcommand("solve", "minimum covering walk by state search");
  ocpp->add_option("file", file)->required();
  CLI::App* oeuler = oracle->add_subcommand("euler", "Euler trail by backtracking");
  oeuler->add_option("file", file)->required();
  CLI::App* ofev = oracle->add_subcommand("fev", "minimum trail between vertices by enumeration");
  ofev->add_option("file", file)->required();
  ofev->add_option("s", fev_s, "start vertex (1-based)")->required();
  ofev->add_option("t", fev_t, "end vertex (1-based)")->required();
  ofev->add_option("--start-colors", start_colors_csv, "comma-separated colors");
  ofev->add_option("--end-colors", end_colors_csv, "comma-separated colors");
  CLI::App* oconn = oracle->add_subcommand("connected", "trail-connectivity by enumeration");
  oconn->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(file, format);
    if (euler->parsed()) return run_euler(file);
    if (solve->parsed()) return run_solve(file, threads);
    if (verify->parsed()) return run_verify(file, walk_file, !no_cover, trail);
    if (gen->parsed()) {
      gen_cfg.mode = mode == "feasible"  ? pcp::GenMode::feasible
                     : mode == "uniform" ? pcp::GenMode::uniform
                                         : pcp::GenMode::figure_family;
      if (gen_cfg.mode == pcp::GenMode::figure_family && gen->count("--colors") == 0) {
        gen_cfg.color_count = 3;
      }
      std::string text = pcp::emit_instance(pcp::generate(gen_cfg));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw pcp::InputError("cannot write file: " + out_path);
        out << text;
      }
      return 0;
    }
    if (ocpp->parsed()) {
      pcp::ColoredMultiDigraph g = pcp::parse_instance(read_file(file));
      if (auto best = pcp::oracle::min_cover_walk(g)) {
        std::cout << "s weight " << pcp::format_rational(best->weight) << "\n"
                  << pcp::emit_walk(pcp::ClosedWalk{best->arc_ids, best->weight});
        return 0;
      }
      std::cout << "INFEASIBLE\n";
      return 1;
    }
    if (oeuler->parsed()) {
      pcp::ColoredMultiDigraph g = pcp::parse_instance(read_file(file));
      if (auto seq = pcp::oracle::euler_trail(g)) {
        std::cout << pcp::emit_walk(pcp::ClosedWalk{*seq, g.total_weight()});
        return 0;
      }
      std::cout << "INFEASIBLE\n";
      return 1;
    }
    if (ofev->parsed()) {
      pcp::ColoredMultiDigraph g = pcp::parse_instance(read_file(file));
      if (fev_s < 1 || fev_s > g.vertex_count() || fev_t < 1 || fev_t > g.vertex_count()) {
        throw pcp::InputError("vertex out of range");
      }
      auto best = pcp::oracle::min_fev_trail(g, fev_s - 1, fev_t - 1,
                                             parse_colors(start_colors_csv),
                                             parse_colors(end_colors_csv));
      if (best) {
        std::cout << pcp::emit_walk(pcp::ClosedWalk{best->arc_ids, best->weight});
        return 0;
      }
      std::cout << "INFEASIBLE\n";
      return 1;
    }
    if (oconn->parsed()) {
      pcp::ColoredMultiDigraph g = pcp::parse_instance(read_file(file));
      bool connected = pcp::oracle::trail_connected(g);
      std::cout << "trail-connected: " << yes_no(connected) << "\n";
      return connected ? 0 : 1;
    }
  } catch (const pcp::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pcp::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
