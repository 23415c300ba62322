#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonsep/digraph.hpp"

namespace nonsep {

struct GraphDocument {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::string> labels;  // empty or one per vertex
    bool directed = true;
};

// {"n": int, "arcs": [[u,v],...], "labels": [..]?, "directed": bool?}
GraphDocument parse_json_graph(const std::string& text);
std::string emit_json_graph(const GraphDocument& doc);

// Strict DOT subset: `digraph [id] { stmt; ... }` where a statement is an
// integer node id or a chain `a -> b -> c`. `graph` with `--` gives an
// undirected document. `//` and `#` start line comments.
GraphDocument parse_dot_graph(const std::string& text);
std::string emit_dot_graph(const GraphDocument& doc);

// Picks the format from the first non-blank character ('{' means JSON).
GraphDocument parse_graph(const std::string& text);
// Reads a file ("-" for stdin); I/O failures throw std::runtime_error.
GraphDocument load_graph(const std::string& path);
std::string read_text(const std::string& path);

Digraph to_digraph(const GraphDocument& doc);
UndirectedGraph to_undirected(const GraphDocument& doc);
GraphDocument document_of(const Digraph& d, std::vector<std::string> labels = {});
GraphDocument document_of(const UndirectedGraph& g);

}  // namespace nonsep
