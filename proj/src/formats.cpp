#include "ssnc/formats.hpp"

#include <charconv>
#include <set>
#include <string>
#include <vector>

#include "ssnc/errors.hpp"

namespace ssnc {

std::string_view to_string(GraphFormat f) {
  return f == GraphFormat::Edgelist ? "edgelist" : "digraph6";
}

std::optional<GraphFormat> graph_format_from_string(std::string_view s) {
  if (s == "edgelist") return GraphFormat::Edgelist;
  if (s == "digraph6") return GraphFormat::Digraph6;
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Digraph parse_edgelist(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Arc> arcs;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto tok = fields(line);
    if (!n) {
      if (tok.size() != 1) throw ParseError(line_no, "expected the vertex count alone");
      n = parse_count(tok[0], line_no);
      if (*n > kMaxVertices)
        throw ParseError(line_no, "vertex count " + std::to_string(*n) + " exceeds cap " +
                                      std::to_string(kMaxVertices),
                         ErrorKind::Unsupported);
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "expected 'u v'");
    const Vertex u = parse_count(tok[0], line_no);
    const Vertex v = parse_count(tok[1], line_no);
    if (u >= *n || v >= *n)
      throw ParseError(line_no,
                       "arc (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an endpoint outside 0.." + std::to_string(*n - 1),
                       ErrorKind::OutOfRange);
    if (u == v)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u), ErrorKind::SelfLoop);
    if (seen.contains({v, u}))
      throw ParseError(line_no,
                       "arcs (" + std::to_string(u) + "," + std::to_string(v) + ") and (" +
                           std::to_string(v) + "," + std::to_string(u) + ") form a 2-cycle",
                       ErrorKind::TwoCycle);
    seen.insert({u, v});
    arcs.push_back({u, v});
  }
  if (!n) throw ParseError(line_no, "missing vertex count");
  return Digraph::build(*n, arcs);
}

std::string emit_edgelist(const Digraph& d) {
  std::string out = std::to_string(d.order()) + "\n";
  for (const Arc& a : d.arcs()) out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
  return out;
}

Digraph parse_digraph6(std::string_view text) {
  text = trim(text);
  if (text.empty() || text[0] != '&') throw ParseError(1, "digraph6 must start with '&'");
  if (text.size() < 2) throw ParseError(1, "missing size byte");
  const auto size_byte = static_cast<unsigned char>(text[1]);
  if (size_byte == 126)
    throw ParseError(1, "multi-byte digraph6 sizes (n > 62) are not supported",
                     ErrorKind::Unsupported);
  if (size_byte < 63 || size_byte > 126) throw ParseError(1, "size byte out of range");
  const std::size_t n = size_byte - 63;
  const std::size_t bits = n * n;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - 2 != groups)
    throw ParseError(1, "expected " + std::to_string(groups) + " payload bytes, got " +
                            std::to_string(text.size() - 2));

  std::vector<Arc> arcs;
  for (std::size_t g = 0; g < groups; ++g) {
    const auto c = static_cast<unsigned char>(text[2 + g]);
    if (c < 63 || c > 126) throw ParseError(1, "payload byte out of range at offset " +
                                                   std::to_string(2 + g));
    const unsigned value = c - 63;
    for (std::size_t b = 0; b < 6; ++b) {
      if (!((value >> (5 - b)) & 1U)) continue;
      const std::size_t idx = g * 6 + b;
      if (idx >= bits) throw ParseError(1, "non-zero padding bits");
      arcs.push_back({idx / n, idx % n});
    }
  }
  try {
    return Digraph::build(n, arcs);
  } catch (const Error& e) {
    throw ParseError(1, e.what(), e.kind());
  }
}

std::string emit_digraph6(const Digraph& d) {
  const std::size_t n = d.order();
  if (n > kDigraph6MaxOrder)
    throw Error(ErrorKind::Unsupported, "digraph6 output limited to n <= 62");
  std::string out = "&";
  out += static_cast<char>(n + 63);
  const std::size_t bits = n * n;
  unsigned group = 0;
  std::size_t filled = 0;
  for (std::size_t idx = 0; idx < bits; ++idx) {
    group = (group << 1) | (d.has_arc(idx / n, idx % n) ? 1U : 0U);
    if (++filled == 6) {
      out += static_cast<char>(group + 63);
      group = 0;
      filled = 0;
    }
  }
  if (filled) out += static_cast<char>((group << (6 - filled)) + 63);
  return out;
}

GraphDocument parse_graph(std::string_view text, std::optional<GraphFormat> format) {
  GraphDocument doc;
  doc.text = std::string(text);
  doc.format = format.value_or(trim(text).starts_with('&') ? GraphFormat::Digraph6
                                                           : GraphFormat::Edgelist);
  doc.graph = doc.format == GraphFormat::Digraph6 ? parse_digraph6(text) : parse_edgelist(text);
  return doc;
}

std::string emit_graph(const Digraph& d, GraphFormat format) {
  return format == GraphFormat::Digraph6 ? emit_digraph6(d) + "\n" : emit_edgelist(d);
}

std::string compact_encoding(const Digraph& d) {
  return d.order() <= kDigraph6MaxOrder ? emit_digraph6(d) : emit_edgelist(d);
}

}  // namespace ssnc
