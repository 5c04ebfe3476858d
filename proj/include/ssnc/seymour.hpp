#ifndef SSNC_SEYMOUR_HPP
#define SSNC_SEYMOUR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ssnc/digraph.hpp"

namespace ssnc {

/// Non-negative rational, always reduced.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
};

/// d+(v) <= d++(v)
bool is_seymour_vertex(const Digraph& d, Vertex v);

struct VertexRecord {
  Vertex v = 0;
  std::size_t out_deg = 0;
  std::size_t second_out_deg = 0;
  bool is_seymour = false;
};

struct SeymourReport {
  std::vector<VertexRecord> records;  // ordered by vertex
  VertexSet seymour_vertices;
  std::optional<Ratio> max_ratio;  // over vertices with d+ > 0
  std::int64_t min_slack = 0;      // min over v of d++ - d+
};

/// Throws EmptyGraph.
SeymourReport seymour_report(const Digraph& d);

/**
 * The real root in (0,1) of 2x^3 + x^2 - 1, held as an exact dyadic
 * enclosure lo/2^40 < root < hi/2^40 obtained by bisection with exact
 * integer sign evaluation.
 */
struct LambdaConstant {
  static constexpr int kScaleBits = 40;
  std::int64_t lo_num = 0;
  std::int64_t hi_num = 0;
  double value = 0.0;

  static const LambdaConstant& get();
};

struct LambdaCheck {
  std::optional<Ratio> max_ratio;
  /// Some vertex has d++ >= lambda_hi * d+ (conservative).
  bool passes = false;
  /// No vertex passes conservatively but one lies inside the enclosure.
  bool marginal = false;
  std::optional<Vertex> witness;
};

/// Throws EmptyGraph.
LambdaCheck lambda_ratio_check(const Digraph& d);

struct SinkResult {
  std::optional<Vertex> sink;  // vertex of N+(v) with no out-neighbour in N+(v)
  bool v_is_seymour = false;
};

/// Sink criterion at a minimum out-degree vertex. Throws HypothesisViolated
/// when d+(v) != min out-degree. Empty N+(v) yields no sink.
SinkResult check_sink_lemma(const Digraph& d, Vertex v);

struct LongestPath {
  std::size_t length = 0;
  Path path;
};

/**
 * Longest simple path in D[s], lexicographically smallest vertex sequence
 * among those of maximum length, in original labels. Exhaustive DFS; stops
 * early once a Hamiltonian path of D[s] or a path of length `cap` is found.
 * An empty s yields length 0 and an empty path.
 */
LongestPath longest_path_in(const Digraph& d, const VertexSet& s,
                            std::optional<std::size_t> cap = std::nullopt);

LongestPath longest_path_in_out_nbhd(const Digraph& d, Vertex v);

/// Every out-neighbourhood induces only paths of length <= k-2. Throws
/// HypothesisViolated unless d is k-anti-transitive (k >= 2).
bool check_path_bound_lemma(const Digraph& d, std::size_t k);

/// Common out-neighbours of vs lying outside r. vs holds 2 or 3 distinct
/// members of r, otherwise BadParam.
VertexSet common_out_nbrs_outside(const Digraph& d, const VertexSet& r,
                                  const std::vector<Vertex>& vs);

struct Lemma3Violation {
  std::vector<Vertex> vs;
  std::size_t common = 0;
  std::int64_t bound = 0;
};

struct Lemma3Report {
  Vertex v = 0;
  std::size_t delta = 0;
  std::size_t second_out_deg = 0;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::vector<Lemma3Violation> violations;

  bool holds() const { return violations.empty(); }
};

/// Checks both common-out-neighbourhood bounds over all pairs and triples of
/// R = N+(v). Throws HypothesisViolated unless d+(v) = delta and d++(v) <= delta-1.
Lemma3Report check_lemma3(const Digraph& d, Vertex v);

/// Lower bound delta + (|vs| - 1) - sum d+_R(r) on |common_out_nbrs_outside|.
std::int64_t lemma3_bound(const Digraph& d, const VertexSet& r, std::size_t delta,
                          const std::vector<Vertex>& vs);

}  // namespace ssnc

#endif  // SSNC_SEYMOUR_HPP
