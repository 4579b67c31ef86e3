#include "gog/io.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "gog/errors.hpp"

namespace gog {

namespace {

std::string strip_comment(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int to_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'", line);
  }
}

void expect(const std::vector<std::string>& t, std::size_t i, const std::string& keyword, int line) {
  if (i >= t.size() || t[i] != keyword) throw ParseError("expected '" + keyword + "'", line);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  Instance inst;
  bool have_rank = false;
  std::map<std::string, int> index;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip_comment(raw);
    if (s.empty()) continue;
    std::string head = s.substr(0, s.find(':'));
    std::vector<std::string> t = tokens(head);
    std::string body = s.find(':') == std::string::npos ? "" : s.substr(s.find(':') + 1);
    auto parse_words = [&]() {
      if (!have_rank) throw ParseError("'rank' must come first", line);
      std::vector<Word> ws;
      try {
        ws = parse_word_list(body);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
      }
      for (const Word& w : ws) {
        if (w.max_generator() >= inst.rank) {
          throw ParseError("word " + w.to_string() + " leaves the rank-" + std::to_string(inst.rank) + " alphabet", line);
        }
      }
      return ws;
    };
    if (t.empty()) throw ParseError("empty directive", line);
    if (t[0] == "rank") {
      if (t.size() != 2 || s.find(':') != std::string::npos) throw ParseError("expected 'rank N'", line);
      inst.rank = to_int(t[1], line);
      if (inst.rank < 1) throw ParseError("rank must be positive", line);
      have_rank = true;
    } else if (t[0] == "subgroup") {
      if (t.size() != 2 || s.find(':') == std::string::npos) throw ParseError("expected 'subgroup NAME: words'", line);
      if (index.count(t[1])) throw ParseError("subgroup " + t[1] + " defined twice", line);
      index[t[1]] = static_cast<int>(inst.vertex_groups.size());
      inst.vertex_groups.push_back({parse_words(), t[1]});
    } else if (t[0] == "edge") {
      if (t.size() != 3 || s.find(':') == std::string::npos) throw ParseError("expected 'edge NAME NAME: words'", line);
      for (int k = 1; k <= 2; ++k) {
        if (!index.count(t[k])) throw ParseError("unknown subgroup " + t[k], line);
      }
      std::string name = "M" + std::to_string(inst.edge_groups.size() + 1);
      inst.edge_groups.push_back({index[t[1]], index[t[2]], parse_words(), name});
    } else {
      throw ParseError("unknown directive '" + t[0] + "'", line);
    }
  }
  if (!have_rank) throw ParseError("missing 'rank' line");
  return inst;
}

std::string instance_to_text(const Instance& instance) {
  std::ostringstream out;
  out << "rank " << instance.rank << "\n";
  for (const VertexGroupSpec& h : instance.vertex_groups) {
    out << "subgroup " << h.name << ": " << to_string(std::span<const Word>(h.generators)) << "\n";
  }
  for (const EdgeGroupSpec& m : instance.edge_groups) {
    out << "edge " << instance.vertex_groups[m.first].name << " " << instance.vertex_groups[m.second].name << ": "
        << to_string(std::span<const Word>(m.generators)) << "\n";
  }
  return out.str();
}

std::string gog_to_text(const GraphOfGraphs& x) {
  std::ostringstream out;
  out << "gog\n";
  for (int i = 0; i < x.vertex_count(); ++i) {
    const VertexSpace& vs = x.vertex_spaces[i];
    out << "vspace " << i << " vertices " << vs.graph.vertex_count() << "\n";
    out << "side";
    for (int s : vs.side) out << " " << s;
    out << "\n";
    for (int e = 0; e < vs.graph.edge_count(); ++e) {
      out << "vedge " << vs.graph.edge(e).source << " " << vs.graph.edge(e).target << " group " << vs.group[e] << "\n";
    }
  }
  for (int j = 0; j < x.edge_count(); ++j) {
    const EdgeSpace& es = x.edge_spaces[j];
    out << "espace " << j << " from " << es.from << " to " << es.to << " label " << es.label << " vertices "
        << es.graph.vertex_count() << "\n";
    out << "iota-v";
    for (int v : es.iota.vertex_image) out << " " << v;
    out << "\ntau-v";
    for (int v : es.tau.vertex_image) out << " " << v;
    out << "\n";
    for (int f = 0; f < es.graph.edge_count(); ++f) {
      out << "eedge " << es.graph.edge(f).source << " " << es.graph.edge(f).target << " iota " << es.iota.edge_image[f]
          << " " << (es.iota.edge_reversed[f] ? '-' : '+') << " tau " << es.tau.edge_image[f] << " "
          << (es.tau.edge_reversed[f] ? '-' : '+') << "\n";
    }
  }
  out << "end\n";
  return out.str();
}

GraphOfGraphs gog_from_text(const std::string& text) {
  GraphOfGraphs x;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool started = false, finished = false;
  enum class Section { None, Vertex, Edge } section = Section::None;
  auto sign = [&](const std::string& s) {
    if (s == "+") return static_cast<char>(0);
    if (s == "-") return static_cast<char>(1);
    throw ParseError("expected '+' or '-', got '" + s + "'", line);
  };
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip_comment(raw);
    if (s.empty()) continue;
    std::vector<std::string> t = tokens(s);
    if (finished) throw ParseError("text after 'end'", line);
    if (!started) {
      if (t.size() != 1 || t[0] != "gog") throw ParseError("expected 'gog'", line);
      started = true;
      continue;
    }
    if (t[0] == "end") {
      finished = true;
    } else if (t[0] == "vspace") {
      if (t.size() != 4) throw ParseError("expected 'vspace ID vertices N'", line);
      if (to_int(t[1], line) != x.vertex_count()) throw ParseError("vertex spaces must be numbered in order", line);
      expect(t, 2, "vertices", line);
      VertexSpace vs;
      vs.graph = LabeledGraph(to_int(t[3], line));
      x.vertex_spaces.push_back(std::move(vs));
      section = Section::Vertex;
    } else if (t[0] == "side") {
      if (section != Section::Vertex) throw ParseError("'side' outside a vertex space", line);
      VertexSpace& vs = x.vertex_spaces.back();
      if (static_cast<int>(t.size()) - 1 != vs.graph.vertex_count()) throw ParseError("one side tag per vertex", line);
      vs.side.clear();
      for (std::size_t k = 1; k < t.size(); ++k) vs.side.push_back(to_int(t[k], line));
    } else if (t[0] == "vedge") {
      if (section != Section::Vertex) throw ParseError("'vedge' outside a vertex space", line);
      if (t.size() != 5) throw ParseError("expected 'vedge S T group G'", line);
      expect(t, 3, "group", line);
      VertexSpace& vs = x.vertex_spaces.back();
      try {
        vs.graph.add_edge(to_int(t[1], line), to_int(t[2], line), 0);
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), line);
      }
      vs.group.push_back(to_int(t[4], line));
    } else if (t[0] == "espace") {
      if (t.size() != 10) throw ParseError("expected 'espace ID from U to V label L vertices N'", line);
      if (to_int(t[1], line) != x.edge_count()) throw ParseError("edge spaces must be numbered in order", line);
      expect(t, 2, "from", line);
      expect(t, 4, "to", line);
      expect(t, 6, "label", line);
      expect(t, 8, "vertices", line);
      EdgeSpace es;
      es.from = to_int(t[3], line);
      es.to = to_int(t[5], line);
      es.label = to_int(t[7], line);
      es.graph = LabeledGraph(to_int(t[9], line));
      x.edge_spaces.push_back(std::move(es));
      section = Section::Edge;
    } else if (t[0] == "iota-v" || t[0] == "tau-v") {
      if (section != Section::Edge) throw ParseError("'" + t[0] + "' outside an edge space", line);
      EdgeSpace& es = x.edge_spaces.back();
      if (static_cast<int>(t.size()) - 1 != es.graph.vertex_count()) throw ParseError("one image per vertex", line);
      SpaceMap& m = t[0] == "iota-v" ? es.iota : es.tau;
      m.vertex_image.clear();
      for (std::size_t k = 1; k < t.size(); ++k) m.vertex_image.push_back(to_int(t[k], line));
    } else if (t[0] == "eedge") {
      if (section != Section::Edge) throw ParseError("'eedge' outside an edge space", line);
      if (t.size() != 9) throw ParseError("expected 'eedge S T iota E +|- tau E +|-'", line);
      expect(t, 3, "iota", line);
      expect(t, 6, "tau", line);
      EdgeSpace& es = x.edge_spaces.back();
      try {
        es.graph.add_edge(to_int(t[1], line), to_int(t[2], line), 0);
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), line);
      }
      es.iota.edge_image.push_back(to_int(t[4], line));
      es.iota.edge_reversed.push_back(sign(t[5]));
      es.tau.edge_image.push_back(to_int(t[7], line));
      es.tau.edge_reversed.push_back(sign(t[8]));
    } else {
      throw ParseError("unknown directive '" + t[0] + "'", line);
    }
  }
  if (!started) throw ParseError("empty input");
  if (!finished) throw ParseError("missing 'end'", line);
  for (VertexSpace& vs : x.vertex_spaces) {
    if (vs.side.empty()) vs.side.assign(vs.graph.vertex_count(), -1);
  }
  try {
    validate(x);
  } catch (const InternalError& e) {
    throw ParseError(std::string("invalid graph of graphs: ") + e.what());
  }
  return x;
}

std::string gog_to_dot(const GraphOfGraphs& x, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int i = 0; i < x.vertex_count(); ++i) {
    const VertexSpace& vs = x.vertex_spaces[i];
    out << "  subgraph cluster_u" << i << " {\n    label=\"u" << i << "\";\n";
    for (int v = 0; v < vs.graph.vertex_count(); ++v) {
      out << "    u" << i << "_v" << v << " [label=\"" << v;
      if (vs.side[v] >= 0) out << ":H" << vs.side[v] + 1;
      out << "\"];\n";
    }
    for (const Edge& e : vs.graph.edges()) {
      out << "    u" << i << "_v" << e.source << " -- u" << i << "_v" << e.target << ";\n";
    }
    out << "  }\n";
  }
  for (int j = 0; j < x.edge_count(); ++j) {
    const EdgeSpace& es = x.edge_spaces[j];
    std::string label = es.label >= 0 ? generator_name(es.label) : "e" + std::to_string(j);
    for (int w = 0; w < es.graph.vertex_count(); ++w) {
      out << "  u" << es.from << "_v" << es.iota.vertex_image[w] << " -- u" << es.to << "_v" << es.tau.vertex_image[w]
          << " [style=dashed, label=\"" << label << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace gog
