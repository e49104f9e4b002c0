#pragma once

#include "gmi/graph.hpp"
#include "gmi/markov.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gmi {

/// Parsed graph document. `levels`, when present, is aligned with the
/// canonical vertex order of `graph`.
struct GraphDocument {
    MixedGraph graph;
    std::optional<std::vector<unsigned>> levels;
};

/// Parses a graph document (YAML mapping with keys `vertices`, `directed`,
/// `bidirected`, `undirected`, `levels`). Throws ParseError with position.
GraphDocument parse_graph_document(std::string_view text);
GraphDocument load_graph_document(const std::string& path);

/// Parses one `{A} _||_ {B} | {C}` line against the graph's labels.
CIStatement parse_statement(std::string_view line, const MixedGraph& g, std::size_t line_number = 0);

/// One statement per line; blank lines and `#` comments are skipped.
std::vector<CIStatement> parse_statements(std::string_view text, const MixedGraph& g);
std::vector<CIStatement> load_statements(const std::string& path, const MixedGraph& g);

std::string read_file(const std::string& path);

}  // namespace gmi
