#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gog/errors.hpp"
#include "gog/graph_of_graphs.hpp"
#include "gog/io.hpp"
#include "gog/pullback.hpp"
#include "gog/reduction.hpp"
#include "gog/shnc.hpp"
#include "gog/stallings.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kVerdictFailure = 1;
constexpr int kInputError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw gog::ParseError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw gog::ParseError("cannot write " + path);
  out << text;
}

std::string first_token(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream t(line);
    std::string tok;
    if (t >> tok) return tok;
  }
  return "";
}

// An instance file is built; a gog file is read as is.
gog::GraphOfGraphs load_space(const std::string& text) {
  if (first_token(text) == "gog") return gog::gog_from_text(text);
  return gog::build_representing(gog::parse_instance(text));
}

std::vector<std::string> group_names(const std::string& text) {
  std::vector<std::string> names;
  if (first_token(text) == "gog") return names;
  for (const gog::EdgeGroupSpec& m : gog::parse_instance(text).edge_groups) names.push_back(m.name);
  return names;
}

std::string summary(const gog::LabeledGraph& g) {
  std::ostringstream out;
  out << "vertices=" << g.vertex_count() << " edges=" << g.edge_count() << " rank=" << gog::subgroup_rank(g)
      << " chi=" << g.euler_characteristic() << "\n";
  out << "basis=" << gog::to_string(gog::fundamental_group_basis(g)) << "\n";
  return out.str();
}

gog::LabeledGraph graph_of(const std::string& words, int rank) {
  return gog::graph_from_words(gog::parse_word_list(words), rank);
}

struct Options {
  int rank = 2;
  std::uint64_t seed = 1;
  int trials = 30;
  int max_len = 6;
  std::string trace;
  std::string output;
  bool strip = false;
  bool audit = false;
  std::string first;
  std::string second;
  std::string input;
};

int run_reduce(const Options& o, bool identity) {
  std::string text = read_input(o.input);
  gog::GraphOfGraphs x = load_space(text);
  gog::ReductionOptions ro;
  ro.strip_tree_mids = o.strip;
  ro.audit = o.audit;
  ro.group_names = group_names(text);
  gog::ReductionResult r = gog::reduce_to_valence_three(x, ro);
  if (!o.trace.empty()) write_output(o.trace, gog::trace_to_string(r.trace));
  if (!identity) {
    write_output(o.output, gog::gog_to_text(r.space));
    std::cerr << "complexity=" << gog::complexity(r.space).to_string() << " steps=" << r.trace.size()
              << " reduced=" << (gog::is_reduced(r.space) ? "yes" : "no");
    if (o.audit) std::cerr << " audited=" << r.audited_moves << " audit_failures=" << r.audit_failures.size();
    std::cerr << "\n";
    for (const std::string& f : r.audit_failures) std::cerr << "audit: " << f << "\n";
    return r.audit_failures.empty() ? kPass : kVerdictFailure;
  }
  gog::DeltaStatistics stats = gog::delta_statistics(r.space);
  gog::IdentityCheck c = gog::identity_check(stats, r.space);
  std::ostringstream out;
  out << "sigma1=" << stats.sigma1 << " sigma2=" << stats.sigma2 << " mu=" << stats.mu << "\n";
  out << "lhs=4chi(H1)chi(H2)+4chi(M)=" << c.lhs << "\n";
  out << "rhs=|S1||S2|-2mu=" << c.rhs << "\n";
  out << "census=" << (c.census_consistent ? "ok" : "bad") << "\n";
  out << "verdict=" << (c.equal ? "equal" : "DIFFERENT") << "\n";
  write_output(o.output, out.str());
  return c.equal && c.census_consistent ? kPass : kVerdictFailure;
}

int run_dot(const Options& o) {
  if (!o.first.empty()) {
    write_output(o.output, gog::to_dot(graph_of(o.first, o.rank)));
    return kPass;
  }
  std::string text = read_input(o.input);
  if (first_token(text) == "graph") {
    write_output(o.output, gog::to_dot(gog::graph_from_text(text)));
  } else {
    write_output(o.output, gog::gog_to_dot(load_space(text)));
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroups of free groups, graphs of graphs and their reduction"};
  app.require_subcommand(1);
  Options o;

  auto* fold = app.add_subcommand("fold", "Folded core graph of a subgroup");
  fold->add_option("words", o.first, "Generators, e.g. \"aa,ab,B\"")->required();
  fold->add_option("--rank", o.rank, "Ambient rank");
  fold->add_option("-o,--output", o.output, "Write the graph in text form here");

  auto* intersect = app.add_subcommand("intersect", "Based intersection of two subgroups");
  intersect->add_option("first", o.first)->required();
  intersect->add_option("second", o.second)->required();
  intersect->add_option("--rank", o.rank, "Ambient rank");
  intersect->add_option("-o,--output", o.output, "Write the graph in text form here");

  auto* join = app.add_subcommand("join", "Subgroup generated by two subgroups");
  join->add_option("first", o.first)->required();
  join->add_option("second", o.second)->required();
  join->add_option("--rank", o.rank, "Ambient rank");
  join->add_option("-o,--output", o.output, "Write the graph in text form here");

  auto* build = app.add_subcommand("build", "Graph of graphs representing an instance file");
  build->add_option("input", o.input, "Instance file, '-' for stdin")->required();
  build->add_option("-o,--output", o.output);

  auto* reduce = app.add_subcommand("reduce", "Reduce to valence three");
  reduce->add_option("input", o.input, "Instance or gog file, '-' for stdin")->required();
  reduce->add_option("-o,--output", o.output, "Terminal graph of graphs");
  reduce->add_option("--trace", o.trace, "Write the move trace here");
  reduce->add_flag("--strip-tree-mids", o.strip, "Drop tree components of the mid-graph instead of failing");
  reduce->add_flag("--audit", o.audit, "Check invariants after every move");

  auto* check = app.add_subcommand("check-identity", "Reduce and evaluate both sides of the Euler identity");
  check->add_option("input", o.input, "Instance or gog file")->required();
  check->add_option("-o,--output", o.output);
  check->add_option("--trace", o.trace);
  check->add_flag("--strip-tree-mids", o.strip);

  auto* cs = app.add_subcommand("experiment-cs", "Rank of intersections of rank-2 subgroups with rank-3 join");
  cs->add_option("--trials", o.trials);
  cs->add_option("--seed", o.seed);
  cs->add_option("--max-len", o.max_len);
  cs->add_option("-o,--output", o.output);

  auto* sh = app.add_subcommand("experiment-shnc", "Euler identity and inequality on random reduced instances");
  sh->add_option("--trials", o.trials, "Number of instances meeting every hypothesis");
  sh->add_option("--seed", o.seed);
  sh->add_option("--max-len", o.max_len);
  sh->add_option("-o,--output", o.output);

  auto* dot = app.add_subcommand("export-dot", "DOT for a graph, a gog file or an instance");
  dot->add_option("input", o.input, "File, '-' for stdin");
  dot->add_option("--words", o.first, "Draw the folded graph of these words instead");
  dot->add_option("--rank", o.rank);
  dot->add_option("-o,--output", o.output);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fold) {
      gog::LabeledGraph g = graph_of(o.first, o.rank);
      std::cout << summary(g);
      if (!o.output.empty()) write_output(o.output, gog::to_text(g));
    } else if (*intersect) {
      gog::LabeledGraph g = gog::intersection_subgroup(graph_of(o.first, o.rank), graph_of(o.second, o.rank));
      std::cout << summary(g);
      if (!o.output.empty()) write_output(o.output, gog::to_text(g));
    } else if (*join) {
      gog::LabeledGraph g = gog::join(graph_of(o.first, o.rank), graph_of(o.second, o.rank));
      std::cout << summary(g);
      if (!o.output.empty()) write_output(o.output, gog::to_text(g));
    } else if (*build) {
      write_output(o.output, gog::gog_to_text(gog::build_representing(gog::parse_instance(read_input(o.input)))));
    } else if (*reduce) {
      return run_reduce(o, false);
    } else if (*check) {
      return run_reduce(o, true);
    } else if (*cs) {
      gog::CsReport r = gog::culler_shalen_experiment(o.trials, o.seed, o.max_len);
      write_output(o.output, r.to_string());
      return r.passed() ? kPass : kVerdictFailure;
    } else if (*sh) {
      gog::ShncReport r = gog::shnc_experiment(o.trials, o.seed, o.max_len);
      write_output(o.output, r.to_string());
      return r.passed() ? kPass : kVerdictFailure;
    } else if (*dot) {
      if (o.input.empty() && o.first.empty()) throw gog::ParseError("export-dot needs a file or --words");
      return run_dot(o);
    }
  } catch (const gog::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerdictFailure;
  } catch (const gog::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kPass;
}
