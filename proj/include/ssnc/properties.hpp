#ifndef SSNC_PROPERTIES_HPP
#define SSNC_PROPERTIES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "ssnc/digraph.hpp"

namespace ssnc {

// Class recognizers. "Path" always means a simple directed path.

/// Shortest directed cycle length; nullopt when acyclic.
std::optional<std::size_t> girth(const Digraph& d);

/// No directed cycle of length <= m. Acyclic digraphs are m-free for every m.
/// Throws BadParam when m < 1.
bool is_m_free(const Digraph& d, std::size_t m);

/**
 * Exact-length simple path search.
 *
 * Depth-bounded DFS with on-path marking, pruned by BFS distance to the
 * target. Reverse-BFS tables are cached per target, so one searcher should be
 * reused across many queries on the same digraph. Not thread safe; use one
 * instance per thread.
 */
class PathSearch {
 public:
  explicit PathSearch(const Digraph& d);

  /// Some u -> v path with exactly k arcs, or nullopt. Requires u != v, k >= 1.
  std::optional<Path> find(Vertex u, Vertex v, std::size_t k);

 private:
  using DistRow = std::vector<std::optional<std::size_t>>;
  const DistRow& dist_to(Vertex target);
  bool extend(Vertex x, Vertex target, std::size_t remaining, const DistRow& dist);

  const Digraph& d_;
  std::vector<std::optional<DistRow>> cache_;
  VertexSet on_path_;
  std::vector<Vertex> stack_;
};

/// One-shot convenience wrapper. Throws BadParam on u == v or k == 0.
std::optional<Path> path_of_length(const Digraph& d, Vertex u, Vertex v, std::size_t k);

/// A pair (u, v) together with a length-k u -> v path. For anti-transitivity
/// the arc u -> v is present (a C(k,1)); for (quasi-)transitivity the
/// required arc is missing.
struct PathWitness {
  Vertex u = 0;
  Vertex v = 0;
  Path path;
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// First violating arc in lexicographic order, nullopt when k-anti-transitive.
/// Throws BadParam when k < 2.
std::optional<PathWitness> anti_transitivity_witness(const Digraph& d, std::size_t k);
bool is_k_anti_transitive(const Digraph& d, std::size_t k);

std::optional<PathWitness> transitivity_witness(const Digraph& d, std::size_t k);
bool is_k_transitive(const Digraph& d, std::size_t k);

std::optional<PathWitness> quasi_transitivity_witness(const Digraph& d, std::size_t k);
bool is_k_quasi_transitive(const Digraph& d, std::size_t k);

/// (x, y, z) with x -> y -> z and x -> z.
std::optional<std::array<Vertex, 3>> find_transitive_triangle(const Digraph& d);

struct KVerdict {
  std::size_t k = 0;
  std::optional<PathWitness> anti_transitive_violation;
  std::optional<PathWitness> transitive_violation;
  std::optional<PathWitness> quasi_transitive_violation;

  bool anti_transitive() const { return !anti_transitive_violation; }
  bool transitive() const { return !transitive_violation; }
  bool quasi_transitive() const { return !quasi_transitive_violation; }
};

struct ClassProfile {
  bool oriented = true;
  std::optional<std::size_t> girth;       // nullopt: acyclic
  std::optional<std::size_t> max_m_free;  // nullopt: m-free for every m
  std::vector<KVerdict> by_k;
  bool transitive_triangle_free = true;
  std::optional<std::array<Vertex, 3>> transitive_triangle;
};

/// Throws BadParam on an empty range or any k < 2.
ClassProfile profile(const Digraph& d, const std::vector<std::size_t>& k_range);

}  // namespace ssnc

#endif  // SSNC_PROPERTIES_HPP
