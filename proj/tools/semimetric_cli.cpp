#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semimetric/error.hpp"
#include "semimetric/io.hpp"
#include "semimetric/order_digraph.hpp"
#include "semimetric/proximity.hpp"
#include "semimetric/realizers.hpp"
#include "semimetric/rigidity.hpp"
#include "semimetric/weak_similarity.hpp"

using namespace semimetric;

namespace {

enum class Format { Text, Record };

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    io::write_file(out_path, text);
  }
}

std::string record(const io::Json& j) { return j.dump(2) + "\n"; }

std::string graph_text(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "A: ";
  for (const auto& a : g.part_a) out << a << " ";
  out << "\nB: ";
  for (const auto& b : g.part_b) out << b << " ";
  out << "\nedges: " << g.edges.size() << "\n";
  for (const auto& [a, b] : g.edges) out << "  " << a << " -- " << b << "\n";
  return out.str();
}

std::string digraph_text(const SemimetricSpace& space, const HasseDigraph& d) {
  std::ostringstream out;
  const auto levels = distance_levels(space);
  out << "signature: " << level_signature(d).to_string() << "\n";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& first = levels[i].front();
    out << "level " << i + 1 << " (sq "
        << to_string(space.sq(space.index_of(first.first), space.index_of(first.second))) << "):";
    for (const auto& v : levels[i]) out << " " << v.name();
    out << "\n";
  }
  out << "arcs: " << d.arcs().size() << "\n";
  return out.str();
}

struct ScanOptions {
  std::size_t n = 5;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::string tie_bias = "1/2";
  std::string repro = "scan_repro.json";
  std::size_t cap = kBruteForceCap;
};

struct ScanTally {
  std::size_t spaces = 0, sr = 0, wr = 0, ubpp = 0;
};

// Returns the first violated property, if any. InconsistencyDetected thrown
// by the deciders is reported the same way.
std::optional<std::string> check_properties(const SemimetricSpace& s, std::size_t cap, ScanTally& tally) {
  try {
    const auto r = classify(s, s.size() <= cap ? Method::Both : Method::FourPoint, cap);
    tally.sr += r.sr;
    tally.wr += r.wr;
    tally.ubpp += r.ubpp;
    if (s.size() >= 2) {
      const auto sz = level_signature(distance_hasse(s)).sizes;
      const bool ones = std::all_of(sz.begin(), sz.end(), [](auto k) { return k == 1; });
      if (ones != r.sr) return "strong rigidity disagrees with the level signature";
    }
    if (s.size() <= cap && best_approx_equivalence_report(s, cap)[4] != r.wr) {
      return "best approximation statements disagree with weak rigidity";
    }
    if (s.size() <= 3 && small_space_equivalences(s)[0] != r.sr) {
      return "small-space statements disagree with strong rigidity";
    }
    if (r.ubpp && s.size() > 1) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != drop) keep.push_back(i);
        }
        if (!is_ubpp_fourpoint(subspace(s, keep)).holds) {
          return "UBPP lost on removing " + s.label(drop);
        }
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InconsistencyDetected) throw;
    return std::string(e.what());
  }
  return std::nullopt;
}

int run_scan(const ScanOptions& opt, Format format) {
  const Rational bias = parse_rational(opt.tie_bias);
  ScanTally tally;
  for (std::size_t k = 0; k < opt.count; ++k) {
    const auto s = random_space(opt.n, opt.seed + k, bias);
    ++tally.spaces;
    if (auto violation = check_properties(s, opt.cap, tally)) {
      io::write_file(opt.repro, io::space_to_json(s).dump(2) + "\n");
      std::cerr << "violation at seed " << opt.seed + k << ": " << *violation << "\n"
                << "space written to " << opt.repro << "\n"
                << io::space_to_json(s).dump() << "\n";
      return 3;
    }
  }
  if (format == Format::Record) {
    std::cout << record(io::Json{{"n", opt.n},
                                 {"seed", opt.seed},
                                 {"count", opt.count},
                                 {"tie_bias", to_string(bias)},
                                 {"sr", tally.sr},
                                 {"wr", tally.wr},
                                 {"ubpp", tally.ubpp},
                                 {"violations", 0}});
  } else {
    std::cout << "spaces: " << tally.spaces << " (n = " << opt.n << ", seeds " << opt.seed << ".."
              << opt.seed + opt.count - 1 << ", tie_bias " << to_string(bias) << ")\n"
              << "sr: " << tally.sr << "\nwr: " << tally.wr << "\nubpp: " << tally.ubpp
              << "\nviolations: 0\n";
  }
  return 0;
}

int report_error(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  if (e.kind() == ErrorKind::InconsistencyDetected) return 3;
  return is_input_error(e.kind()) ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on finite semimetric spaces"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all");

  std::map<std::string, Format> formats{{"text", Format::Text}, {"record", Format::Record}};
  Format format = Format::Text;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or record (JSON)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  std::string space_path, space_path2, graph_path, out_path;
  std::vector<std::string> part_a, part_b;
  bool dot = false;

  auto* validate = app.add_subcommand("validate", "Check a space file");
  validate->add_option("space", space_path)->required();
  add_format(validate);

  std::string method_name = "both";
  std::size_t cap = kBruteForceCap;
  auto* classify_cmd = app.add_subcommand("classify", "Decide SR, WR and UBPP");
  classify_cmd->add_option("space", space_path)->required();
  classify_cmd->add_option("--method", method_name, "oracle, fourpoint or both");
  classify_cmd->add_option("--cap", cap, "largest n for the brute-force decider");
  add_format(classify_cmd);

  auto* pgraph = app.add_subcommand("pgraph", "Proximinal graph of two disjoint subsets");
  pgraph->add_option("space", space_path)->required();
  pgraph->add_option("--part-a", part_a)->required()->delimiter(',');
  pgraph->add_option("--part-b", part_b)->required()->delimiter(',');
  pgraph->add_flag("--dot", dot, "DOT output");
  add_format(pgraph);

  auto* npgraph = app.add_subcommand("npgraph", "Nearest-point graph of a proper subset");
  npgraph->add_option("space", space_path)->required();
  npgraph->add_option("--part-a", part_a)->required()->delimiter(',');
  npgraph->add_flag("--dot", dot, "DOT output");
  add_format(npgraph);

  auto* digraph = app.add_subcommand("digraph", "Hasse digraph of the distance order");
  digraph->add_option("space", space_path)->required();
  digraph->add_flag("--dot", dot, "DOT output");
  digraph->add_option("-o,--output", out_path, "write to a file instead of stdout");

  auto* wsim = app.add_subcommand("wsim", "Similarity or weak similarity between two spaces");
  wsim->add_option("space1", space_path)->required();
  wsim->add_option("space2", space_path2)->required();
  add_format(wsim);

  std::string kind = "sr";
  auto* realize = app.add_subcommand("realize", "Build a metric with a prescribed proximinal graph");
  realize->add_option("graph", graph_path)->required();
  realize->add_option("--kind", kind, "sr, wr or ultra")
      ->check(CLI::IsMember({"sr", "wr", "ultra"}));
  realize->add_option("-o,--output", out_path, "write the space file here");
  add_format(realize);

  std::vector<std::size_t> scan_bounds;
  auto* conjecture = app.add_subcommand("conjecture", "Star/nearest-point conjecture explorer");
  auto* conj_graph = conjecture->add_option("graph", graph_path);
  auto* conj_scan = conjecture->add_option("--scan", scan_bounds, "max |A| and max |B|")->expected(2);
  conj_graph->excludes(conj_scan);
  add_format(conjecture);

  ScanOptions scan_opt;
  auto* scan = app.add_subcommand("scan", "Property sweep over random spaces");
  scan->add_option("--n", scan_opt.n, "points per space");
  scan->add_option("--seed", scan_opt.seed, "first seed");
  scan->add_option("--count", scan_opt.count, "number of spaces");
  scan->add_option("--tie-bias", scan_opt.tie_bias, "rational in [0,1]");
  scan->add_option("--repro", scan_opt.repro, "where to write a violating space");
  scan->add_option("--cap", scan_opt.cap, "largest n for the brute-force decider");
  add_format(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      const auto s = io::load_space(space_path);
      if (format == Format::Record) {
        auto j = io::space_to_json(s);
        j["metric"] = is_metric(s);
        j["ultrametric"] = is_ultrametric_space(s);
        std::cout << record(j);
      } else {
        std::cout << "valid: " << s.size() << " points, " << s.distinct_values() << " distinct distances\n"
                  << "squared distances:";
        for (const auto& d : distance_set(s).values) std::cout << " " << to_string(d.sq());
        std::cout << "\nmetric: " << (is_metric(s) ? "true" : "false")
                  << "\nultrametric: " << (is_ultrametric_space(s) ? "true" : "false") << "\n";
      }
      return 0;
    }
    if (*classify_cmd) {
      const auto report = classify(io::load_space(space_path), parse_method(method_name), cap);
      std::cout << (format == Format::Record ? record(io::to_json(report)) : io::to_text(report));
      return 0;
    }
    if (*pgraph || *npgraph) {
      const auto s = io::load_space(space_path);
      const auto g = *pgraph ? proximinal_graph(s, part_a, part_b) : nearest_point_graph(s, part_a);
      if (dot) {
        std::cout << export_dot(g);
      } else {
        std::cout << (format == Format::Record ? record(io::graph_to_json(g)) : graph_text(g));
      }
      return 0;
    }
    if (*digraph) {
      const auto s = io::load_space(space_path);
      const auto d = distance_hasse(s);
      emit(dot ? export_dot(d) : digraph_text(s, d), out_path);
      return 0;
    }
    if (*wsim) {
      const auto s1 = io::load_space(space_path);
      const auto s2 = io::load_space(space_path2);
      auto verdict = find_similarity(s1, s2);
      if (verdict.kind == SimilarityKind::None) verdict = find_weak_similarity(s1, s2);
      std::cout << (format == Format::Record ? record(io::to_json(verdict)) : io::to_text(verdict));
      return 0;
    }
    if (*realize) {
      const auto g = io::load_graph(graph_path);
      const auto res = kind == "sr"   ? realize_single_edge_sr(g)
                       : kind == "wr" ? realize_matching_wr(g)
                                      : realize_ultrametric(g);
      const auto space_json = io::space_to_json(res.space).dump(2) + "\n";
      if (!out_path.empty()) io::write_file(out_path, space_json);
      if (format == Format::Record) {
        io::Json j{{"kind", kind}, {"certificate", io::to_json(res.certificate)}};
        if (out_path.empty()) j["space"] = io::space_to_json(res.space);
        std::cout << record(j);
      } else {
        if (out_path.empty()) std::cout << space_json;
        std::cout << io::to_text(res.certificate);
      }
      return res.certificate.all_passed() ? 0 : 3;
    }
    if (*conjecture) {
      if (!scan_bounds.empty()) {
        const auto table = scan_conjecture(scan_bounds[0], scan_bounds[1]);
        std::cout << (format == Format::Record ? record(io::to_json(table)) : io::to_text(table));
        return 0;
      }
      if (graph_path.empty()) throw Error(ErrorKind::EmptyArgument, "conjecture needs a graph file or --scan");
      const auto verdict = explore_conjecture(io::load_graph(graph_path));
      std::cout << (format == Format::Record ? record(io::to_json(verdict)) : io::to_text(verdict));
      return 0;
    }
    if (*scan) return run_scan(scan_opt, format);
  } catch (const Error& e) {
    return report_error(e);
  }
  return 0;
}
