#ifndef SSNC_FORMATS_HPP
#define SSNC_FORMATS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "ssnc/digraph.hpp"

namespace ssnc {

enum class GraphFormat { Edgelist, Digraph6 };

std::string_view to_string(GraphFormat f);
std::optional<GraphFormat> graph_format_from_string(std::string_view s);

struct GraphDocument {
  GraphFormat format = GraphFormat::Edgelist;
  Digraph graph;
  std::string text;
};

/**
 * First non-comment line holds n, every later one "u v" for an arc u -> v.
 * '#' starts a comment, blank lines are skipped. Throws ParseError with the
 * offending line; SelfLoop/TwoCycle/OutOfRange are re-thrown as ParseError
 * too, keeping their kind and naming the line of the arc.
 */
Digraph parse_edgelist(std::string_view text);
/// "n\n" then one "u v\n" per arc in lexicographic order.
std::string emit_edgelist(const Digraph& d);

/// Largest order with a one-byte size field.
inline constexpr std::size_t kDigraph6MaxOrder = 62;

/// Trailing whitespace is ignored. Throws ParseError (bad header, wrong
/// payload length, byte out of range, non-zero padding) or Unsupported (n > 62).
Digraph parse_digraph6(std::string_view text);
/// Throws Unsupported for n > 62.
std::string emit_digraph6(const Digraph& d);

/// Picks digraph6 when the text starts with '&' unless `format` is given.
GraphDocument parse_graph(std::string_view text, std::optional<GraphFormat> format = {});
std::string emit_graph(const Digraph& d, GraphFormat format);

/// digraph6 when it fits, otherwise the edge list.
std::string compact_encoding(const Digraph& d);

}  // namespace ssnc

#endif  // SSNC_FORMATS_HPP
