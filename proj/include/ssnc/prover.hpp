#ifndef SSNC_PROVER_HPP
#define SSNC_PROVER_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ssnc/digraph.hpp"
#include "ssnc/properties.hpp"

namespace ssnc {

enum class Branch {
  SmallDelta,  // min out-degree <= 6, or k = 6: brute-force search
  LargeM,      // m >= delta - 1: brute-force search
  Sink,        // D[R] has a sink, v is Seymour
  VSeymour,    // d++(v) >= delta
  Case1,       // longest path in D[R] has length m
  Case2a,      // length m+1, r_{m+1} -> r_0
  Case2b,      // length m+1, r_{m+1} -/-> r_0
  Case3a,      // length m+2, r_{m+2} -> r_0
  Case3b,      // length m+2, r_{m+2} -/-> r_0
};

std::string_view to_string(Branch b);
std::optional<Branch> branch_from_string(std::string_view s);
inline constexpr std::array<Branch, 9> kAllBranches = {
    Branch::SmallDelta, Branch::LargeM, Branch::Sink,   Branch::VSeymour, Branch::Case1,
    Branch::Case2a,     Branch::Case2b, Branch::Case3a, Branch::Case3b};

struct Assertion {
  std::string text;
  bool holds = false;
};

/**
 * Record of one run of the constructive Seymour-vertex finder.
 *
 * `subpath` is the longest path r_0..r_l of D[R] after any relabelling;
 * `step` names the terminal sub-branch (e.g. "case2b/z3-sink") for coverage
 * accounting. `named` lists every vertex that received a role, in the order
 * roles were assigned.
 */
struct ProofTrace {
  std::size_t k = 0;
  std::size_t m = 0;
  Vertex v = 0;
  std::size_t delta = 0;
  VertexSet R;
  Branch branch = Branch::SmallDelta;
  std::string step;
  Path subpath;
  VertexSet B;
  std::optional<VertexSet> X;
  std::vector<Vertex> z_chain;
  std::vector<std::pair<std::string, Vertex>> named;
  std::vector<std::string> notes;
  std::vector<Assertion> assertions;
  Vertex result = 0;
};

enum class TraceErrorKind { PreconditionViolated, ProofDivergence, FallbackExhausted };
std::string_view to_string(TraceErrorKind k);

struct TraceError {
  TraceErrorKind kind = TraceErrorKind::PreconditionViolated;
  std::string message;            // failing assertion or violated precondition
  std::vector<Vertex> involved;   // vertices named by the message
  std::optional<PathWitness> witness;  // C(k,1) found by the precheck
  ProofTrace partial;             // trace state at the point of failure
};

struct ProverOptions {
  /// Skip the k-anti-transitivity and (k-4)-freeness recognizers.
  bool skip_precheck = false;
  /// Use brute force for the small-delta, k = 6 and large-m branches. With
  /// this off the case analysis runs regardless; useful for exercising it on
  /// small instances, where steps that need delta >= 7 may then diverge.
  bool external_fallbacks = true;
};

using ProofOutcome = std::variant<ProofTrace, TraceError>;

/// Seymour vertex of a k-anti-transitive (k-4)-free oriented graph, found by
/// following the case analysis. The returned vertex is always re-verified.
ProofOutcome find_seymour_constructive(const Digraph& d, std::size_t k,
                                       const ProverOptions& options = {});

inline const ProofTrace* trace_of(const ProofOutcome& o) { return std::get_if<ProofTrace>(&o); }
inline const TraceError* error_of(const ProofOutcome& o) { return std::get_if<TraceError>(&o); }

/// Smallest-index Seymour vertex, nullopt for a counterexample. Throws EmptyGraph.
std::optional<Vertex> brute_force_seymour(const Digraph& d);

/// Some x -> y -> z -> x.
std::optional<std::array<Vertex, 3>> find_directed_triangle(const Digraph& d);

struct CaccettaVerdict {
  bool hypothesis_met = false;  // 3 * min in-degree >= n and 3 * min out-degree >= n
  std::optional<std::array<Vertex, 3>> triangle;
  bool has_seymour_vertex = false;
  /// False only for a degree-hypothesis digraph with a Seymour vertex and no
  /// directed triangle.
  bool consistent = true;
};

CaccettaVerdict check_caccetta_instance(const Digraph& d);

}  // namespace ssnc

#endif  // SSNC_PROVER_HPP
