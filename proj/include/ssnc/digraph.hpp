#ifndef SSNC_DIGRAPH_HPP
#define SSNC_DIGRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ssnc/vertex_set.hpp"

namespace ssnc {

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Directed path v0 -> v1 -> ... -> vl. Length counts arcs.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  friend bool operator==(const Path&, const Path&) = default;
};

/**
 * Immutable oriented graph on vertices 0..n-1.
 *
 * Out- and in-neighbourhoods are stored as bit rows. Construction rejects
 * self-loops and 2-cycles; repeated arcs are merged. All queries are const
 * and safe to call concurrently.
 */
class Digraph {
 public:
  Digraph() = default;

  /// Throws Error{SelfLoop | TwoCycle | OutOfRange | BadParam}.
  static Digraph build(std::size_t n, std::span<const Arc> arcs);
  static Digraph build(std::size_t n, std::initializer_list<Arc> arcs) {
    return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return m_; }

  bool has_arc(Vertex u, Vertex v) const noexcept {
    return u < n_ && out_[u].contains(v);
  }
  bool adjacent(Vertex u, Vertex v) const noexcept {
    return has_arc(u, v) || has_arc(v, u);
  }

  const VertexSet& out_nbrs(Vertex v) const;
  const VertexSet& in_nbrs(Vertex v) const;
  /// Vertices at directed distance exactly 2 from v.
  VertexSet second_out_nbrs(Vertex v) const;

  std::size_t out_deg(Vertex v) const { return out_nbrs(v).size(); }
  std::size_t in_deg(Vertex v) const { return in_nbrs(v).size(); }
  std::size_t second_out_deg(Vertex v) const { return second_out_nbrs(v).size(); }
  /// |N+(v) ∩ s|
  std::size_t restricted_out_deg(Vertex v, const VertexSet& s) const {
    return out_nbrs(v).intersection_size(s);
  }

  /// Minimum out-degree vertex, smallest index on ties. Throws EmptyGraph.
  std::pair<Vertex, std::size_t> min_out_deg_vertex() const;
  std::size_t min_out_deg() const { return min_out_deg_vertex().second; }
  std::size_t min_in_deg() const;

  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) noexcept {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.out_ == b.out_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

struct InducedSubgraph {
  Digraph graph;
  /// new index -> original vertex
  std::vector<Vertex> to_original;
  /// original vertex -> new index, nullopt outside the subset
  std::vector<std::optional<Vertex>> to_induced;
};

InducedSubgraph induced(const Digraph& d, const VertexSet& s);

/// BFS distance from u to v; nullopt when v is unreachable. dist(v, v) = 0.
std::optional<std::size_t> distance(const Digraph& d, Vertex u, Vertex v);

/// BFS distances from `source` to every vertex (nullopt = unreachable).
std::vector<std::optional<std::size_t>> distances_from(const Digraph& d, Vertex source);
/// BFS distances from every vertex to `target` (reverse BFS).
std::vector<std::optional<std::size_t>> distances_to(const Digraph& d, Vertex target);

/// Opt-in all-pairs BFS table.
class DistanceTable {
 public:
  explicit DistanceTable(const Digraph& d);

  std::optional<std::size_t> operator()(Vertex u, Vertex v) const {
    const auto x = table_[u * n_ + v];
    if (x == kUnreachable) return std::nullopt;
    return x;
  }

 private:
  static constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);
  std::size_t n_;
  std::vector<std::size_t> table_;
};

/// True when the path has distinct vertices and every step is an arc of d.
bool is_valid_path(const Digraph& d, const Path& p);

}  // namespace ssnc

#endif  // SSNC_DIGRAPH_HPP
