#ifndef TUTTE_GRAPH_IO_HPP
#define TUTTE_GRAPH_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "tutte/graph.hpp"

namespace tutte {

/// Parsed graph file: the graph, per-edge weights where the file gave one,
/// and optional two-terminal markers (gadget files).
struct GraphFile {
  Multigraph graph;
  std::unordered_map<EdgeId, Rational> explicit_weights;
  std::optional<int> terminal_s;
  std::optional<int> terminal_t;

  /// Weight function where every edge missing an explicit weight gets
  /// the supplied uniform gamma.
  WeightFunction weights_with_default(const Rational& gamma) const;
};

/// Text format:
///   line 1:  "vertices <n>"
///   then:    "edge <u> <v> [<rational>]"
///   gadgets: "terminal s <v>" / "terminal t <v>"
///   '#' begins a comment; blank lines ignored.
GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_string(const std::string& text);
GraphFile load_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Multigraph& g,
                 const WeightFunction* weights = nullptr,
                 std::optional<int> s = std::nullopt,
                 std::optional<int> t = std::nullopt);
std::string graph_to_string(const Multigraph& g,
                            const WeightFunction* weights = nullptr,
                            std::optional<int> s = std::nullopt,
                            std::optional<int> t = std::nullopt);

}  // namespace tutte

#endif
