#include "tutte/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tutte {

WeightFunction GraphFile::weights_with_default(const Rational& gamma) const {
  WeightFunction w(graph, gamma);
  for (const auto& [id, r] : explicit_weights) w.set(id, r);
  return w;
}

GraphFile parse_graph(std::istream& in) {
  GraphFile out;
  bool have_vertices = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "vertices") {
      int n;
      if (!(ls >> n) || n < 0)
        throw std::invalid_argument("graph file line " + std::to_string(lineno) + ": bad vertex count");
      out.graph = Multigraph(n);
      have_vertices = true;
    } else if (keyword == "edge") {
      if (!have_vertices)
        throw std::invalid_argument("graph file: 'edge' before 'vertices'");
      int u, v;
      if (!(ls >> u >> v))
        throw std::invalid_argument("graph file line " + std::to_string(lineno) + ": bad edge");
      EdgeId id = out.graph.add_edge(u, v);
      std::string wtext;
      if (ls >> wtext) out.explicit_weights.emplace(id, Rational::parse(wtext));
    } else if (keyword == "terminal") {
      std::string which;
      int v;
      if (!(ls >> which >> v) || (which != "s" && which != "t"))
        throw std::invalid_argument("graph file line " + std::to_string(lineno) + ": bad terminal");
      (which == "s" ? out.terminal_s : out.terminal_t) = v;
    } else {
      throw std::invalid_argument("graph file line " + std::to_string(lineno) +
                                  ": unknown keyword '" + keyword + "'");
    }
  }
  if (!have_vertices) throw std::invalid_argument("graph file: missing 'vertices' line");
  return out;
}

GraphFile parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

GraphFile load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Multigraph& g, const WeightFunction* weights,
                 std::optional<int> s, std::optional<int> t) {
  out << "vertices " << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) {
    out << "edge " << e.u << " " << e.v;
    if (weights) out << " " << weights->at(e.id).str();
    out << "\n";
  }
  if (s) out << "terminal s " << *s << "\n";
  if (t) out << "terminal t " << *t << "\n";
}

std::string graph_to_string(const Multigraph& g, const WeightFunction* weights,
                            std::optional<int> s, std::optional<int> t) {
  std::ostringstream os;
  write_graph(os, g, weights, s, t);
  return os.str();
}

}  // namespace tutte
