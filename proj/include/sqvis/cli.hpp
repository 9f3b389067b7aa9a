#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sqvis/generate.hpp"
#include "sqvis/io.hpp"
#include "sqvis/ranking.hpp"
#include "sqvis/svg.hpp"
#include "sqvis/verify.hpp"

namespace sqvis::cli {

// 0 success / all checks passed, 1 a check failed, 2 usage error,
// 3 input parse error.
enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_usage = 2,
  exit_input = 3,
};

namespace detail {

// Signals a well-formed input file that does not fit its companions
// (wrong n, mismatched graph); mapped to exit_input.
class InputMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputMismatch("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadParams("cannot write '" + path + "'");
  out << content;
  if (!out) throw BadParams("failed while writing '" + path + "'");
}

inline Rational rational_flag(const std::string& text, const std::string& flag) {
  auto r = parse_rational(text);
  if (!r) throw BadParams(flag + ": bad rational '" + text + "'");
  return *r;
}

inline Ranking ranking_for(const Instance& inst, const std::string& strategy,
                           const std::string& ranking_path, std::uint64_t seed,
                           std::size_t cap) {
  if (!ranking_path.empty()) {
    Ranking rk = parse_ranking(read_file(ranking_path));
    if (rk.size() != inst.size()) {
      throw InputMismatch("ranking has n=" + std::to_string(rk.size()) +
                          " but instance has n=" + std::to_string(inst.size()));
    }
    return rk;
  }
  if (strategy == "lex") return lex_ranking(inst);
  if (strategy == "input") return identity_ranking(inst.size());
  if (strategy == "random") return random_ranking(inst.size(), seed);
  if (strategy == "optimal") return optimal_ranking(inst, cap).ranking;
  throw BadParams("unknown strategy '" + strategy + "'");
}

}  // namespace detail

// Dispatches the sqvis subcommands. Reports and edge lists go to `out`
// when no output file is given; diagnostics go to `err`. Identical
// arguments and input files produce byte-identical outputs.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"exact visibility graphs of ranked unit squares"};
  app.name("sqvis");
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "write a generated instance");
  std::string gen_kind;
  std::size_t gen_n = 0;
  std::string gen_delta = "1/16";
  std::string gen_span = "6";
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  std::string gen_ranking_out;
  generate->add_option("--kind", gen_kind, "lowerbound|quadratic|random")
      ->required()
      ->check(CLI::IsMember({"lowerbound", "quadratic", "random"}));
  generate->add_option("--n", gen_n, "number of squares")->required();
  generate->add_option("--delta", gen_delta, "construction pitch (rational)");
  generate->add_option("--span", gen_span, "random-instance span (rational)");
  generate->add_option("--seed", gen_seed, "random-instance seed");
  generate->add_option("-o,--out", gen_out, "instance file to write")->required();
  generate->add_option("--ranking-out", gen_ranking_out,
                       "also write the stacked ranking (quadratic only)");

  // rank
  auto* rank = app.add_subcommand("rank", "write a ranking for an instance");
  std::string rank_strategy;
  std::uint64_t rank_seed = 0;
  std::size_t rank_cap = 9;
  std::string rank_in, rank_out;
  rank->add_option("--strategy", rank_strategy, "lex|input|random|optimal")
      ->required()
      ->check(CLI::IsMember({"lex", "input", "random", "optimal"}));
  rank->add_option("--seed", rank_seed, "seed for --strategy random");
  rank->add_option("--cap", rank_cap, "size cap for --strategy optimal");
  rank->add_option("-i,--in", rank_in, "instance file")->required();
  rank->add_option("-o,--out", rank_out, "ranking file to write")->required();

  // graph
  auto* graph = app.add_subcommand("graph", "compute a visibility graph");
  std::string graph_in, graph_ranking, graph_strategy, graph_out;
  bool graph_forced = false;
  graph->add_option("-i,--in", graph_in, "instance file")->required();
  graph->add_option("--ranking", graph_ranking, "ranking file");
  graph->add_option("--strategy", graph_strategy, "lex|input")
      ->check(CLI::IsMember({"lex", "input"}));
  graph->add_flag("--forced", graph_forced,
                  "ranking-independent edges instead of a ranked graph");
  graph->add_option("-o,--out", graph_out, "edge file (stdout if omitted)");

  // check
  auto* check = app.add_subcommand("check", "run verification reports");
  std::string check_in;
  bool check_planarity = false, check_bound = false, check_lower = false;
  std::size_t check_target = 0;
  bool check_target_set = false;
  std::size_t check_samples = 200, check_cap = 9;
  std::uint64_t check_seed = 0;
  check->add_option("-i,--in", check_in, "instance file")->required();
  check->add_flag("--planarity", check_planarity,
                  "lex-ranking embedding has no crossings");
  check->add_flag("--bound", check_bound, "lex-ranking edge count within bound");
  check->add_flag("--lowerbound", check_lower,
                  "every ranking stays at or above the target");
  check->add_option("--target", check_target, "edge target (default 3n-7)")
      ->each([&](const std::string&) { check_target_set = true; });
  check->add_option("--samples", check_samples, "random rankings for large n");
  check->add_option("--seed", check_seed, "sampling seed");
  check->add_option("--cap", check_cap, "exhaustive enumeration cap");

  // render
  auto* render = app.add_subcommand("render", "draw the stack as svg");
  std::string render_in, render_ranking, render_strategy = "lex", render_graph,
              render_out;
  render->add_option("-i,--in", render_in, "instance file")->required();
  render->add_option("--ranking", render_ranking, "ranking file");
  render->add_option("--strategy", render_strategy, "lex")
      ->check(CLI::IsMember({"lex"}));
  render->add_option("--graph", render_graph, "edge file overlay");
  render->add_option("-o,--out", render_out, "svg file to write")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n"
        << "usage: sqvis <generate|rank|graph|check|render> [options]\n";
    return exit_usage;
  }

  try {
    if (generate->parsed()) {
      const Rational delta = detail::rational_flag(gen_delta, "--delta");
      if (!gen_ranking_out.empty() && gen_kind != "quadratic") {
        throw BadParams("--ranking-out requires --kind quadratic");
      }
      if (gen_kind == "lowerbound") {
        detail::write_file(gen_out,
                           serialize_instance(lower_bound_instance(gen_n, delta)));
      } else if (gen_kind == "quadratic") {
        const QuadraticInstance q = quadratic_instance(gen_n, delta);
        detail::write_file(gen_out, serialize_instance(q.instance));
        if (!gen_ranking_out.empty()) {
          detail::write_file(gen_ranking_out, serialize_ranking(q.stacked_ranking));
        }
      } else {
        const Rational span = detail::rational_flag(gen_span, "--span");
        detail::write_file(gen_out,
                           serialize_instance(random_instance(gen_n, span, gen_seed)));
      }
      return exit_ok;
    }

    if (rank->parsed()) {
      const Instance inst = parse_instance(detail::read_file(rank_in));
      const Ranking rk =
          detail::ranking_for(inst, rank_strategy, "", rank_seed, rank_cap);
      detail::write_file(rank_out, serialize_ranking(rk));
      return exit_ok;
    }

    if (graph->parsed()) {
      const Instance inst = parse_instance(detail::read_file(graph_in));
      const int sources = int(graph_forced) + int(!graph_ranking.empty()) +
                          int(!graph_strategy.empty());
      if (sources != 1) {
        throw BadParams("give exactly one of --forced, --ranking, --strategy");
      }
      VisibilityGraph g;
      if (graph_forced) {
        g = VisibilityGraph{inst.size(), forced_edges(inst)};
      } else {
        const Ranking rk =
            detail::ranking_for(inst, graph_strategy, graph_ranking, 0, 9);
        g = visibility_graph(inst, rk);
      }
      const std::string text = serialize_graph(g);
      if (graph_out.empty()) {
        out << text;
      } else {
        detail::write_file(graph_out, text);
      }
      return exit_ok;
    }

    if (check->parsed()) {
      const Instance inst = parse_instance(detail::read_file(check_in));
      const std::size_t n = inst.size();
      if (!check_planarity && !check_bound && !check_lower) {
        check_planarity = check_bound = true;
      }
      bool all_pass = true;
      std::optional<VisibilityGraph> lex_graph;
      auto need_lex_graph = [&]() -> const VisibilityGraph& {
        if (!lex_graph) lex_graph = visibility_graph(inst, lex_ranking(inst));
        return *lex_graph;
      };
      if (check_planarity) {
        const CrossingReport report = is_plane_embedding(inst, need_lex_graph());
        const bool pass = report.plane();
        all_pass = all_pass && pass;
        out << "check planarity\nn " << n << "\ncrossings "
            << report.crossings.size() << "\ndegenerate "
            << report.degenerate.size() << "\nverdict " << (pass ? "pass" : "fail")
            << "\n";
        for (const auto& [e1, e2] : report.crossings) {
          out << "certificate crossing " << e1.first << " " << e1.second << " "
              << e2.first << " " << e2.second << "\n";
        }
        for (const auto& [e1, e2] : report.degenerate) {
          out << "certificate degenerate " << e1.first << " " << e1.second << " "
              << e2.first << " " << e2.second << "\n";
        }
        out << "\n";
      }
      if (check_bound) {
        const std::size_t edges = need_lex_graph().edges.size();
        const std::size_t bound = max_edges_bound(n);
        const bool pass = edges <= bound;
        all_pass = all_pass && pass;
        out << "check bound\nn " << n << "\nedges " << edges << "\nbound " << bound
            << "\nverdict " << (pass ? "pass" : "fail") << "\n";
        if (!pass) {
          for (const Edge& e : need_lex_graph().edges) {
            out << "certificate edge " << e.first << " " << e.second << "\n";
          }
        }
        out << "\n";
      }
      if (check_lower) {
        const std::size_t target =
            check_target_set ? check_target : max_edges_bound(n);
        const LowerBoundReport report =
            check_lower_bound(inst, target, check_samples, check_seed, check_cap);
        all_pass = all_pass && report.pass;
        out << "check lowerbound\n" << report.to_text() << "\n";
      }
      return all_pass ? exit_ok : exit_check_failed;
    }

    if (render->parsed()) {
      const Instance inst = parse_instance(detail::read_file(render_in));
      const Ranking rk =
          detail::ranking_for(inst, render_strategy, render_ranking, 0, 9);
      std::optional<VisibilityGraph> overlay;
      if (!render_graph.empty()) {
        overlay = parse_graph(detail::read_file(render_graph));
        if (overlay->n != inst.size()) {
          throw detail::InputMismatch(
              "graph has n=" + std::to_string(overlay->n) +
              " but instance has n=" + std::to_string(inst.size()));
        }
      }
      detail::write_file(render_out,
                         render_svg(inst, rk, overlay ? &*overlay : nullptr));
      return exit_ok;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const detail::InputMismatch& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const InvalidRanking& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const BadParams& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  err << "error: no subcommand\n";
  return exit_usage;
}

}  // namespace sqvis::cli
