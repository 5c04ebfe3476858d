#ifndef SSNC_GENERATORS_HPP
#define SSNC_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssnc/digraph.hpp"

namespace ssnc {

// --- single-instance generators ---------------------------------------------

/// Each pair i < j, in lexicographic order: an arc with probability p_arc, then
/// a fair coin for its direction (i -> j on 0). Throws BadParam unless p in [0,1].
Digraph random_oriented(std::size_t n, double p_arc, std::uint64_t seed);

Digraph random_tournament(std::size_t n, std::uint64_t seed);

/// Arcs i -> i+s mod n for s in S. Throws BadParam if S holds 0, a value >= n,
/// both s and n-s, or n/2.
Digraph circulant(std::size_t n, const std::vector<std::size_t>& S);

// --- exhaustive labelled enumeration ----------------------------------------

/**
 * All labelled oriented graphs on n <= 6 vertices. Index i is read as a
 * base-3 odometer over pairs in lexicographic order, the first pair (0,1)
 * being the fastest digit; digit 0 = no arc, 1 = i -> j, 2 = j -> i.
 */
class LabeledEnumeration {
 public:
  /// Throws BadParam for n > 6.
  explicit LabeledEnumeration(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }
  /// Throws OutOfRange for index >= size().
  Digraph at(std::uint64_t index) const;

 private:
  std::size_t n_;
  std::uint64_t size_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

// --- layered construction ---------------------------------------------------

/**
 * Cyclic layers L_0 .. L_{P-1}, every arc going from L_i to L_{i+1 mod P}
 * except for arcs of the gadgets placed inside L_1 and L_2. L_0 has width
 * delta and contains vertex 0; L_1 carries `gadget` (delta vertices); L_2
 * carries `second_gadget` (width = its order, normally delta - 1); the
 * remaining layers have width delta. Consecutive layers are completely
 * joined except L_1 -> L_2, which uses `l1_to_l2` when given.
 *
 * With P > k, a gadget girth above k-4 and longest gadget paths summing to
 * at most k-2 the result is k-anti-transitive and (k-4)-free, its minimum
 * out-degree vertex is 0 and N+(0) = L_1.
 */
struct LayeredSpec {
  std::size_t k = 7;
  std::size_t delta = 7;
  std::size_t period = 0;  // 0 means k + 1
  Digraph gadget;
  Digraph second_gadget;
  /// Row x lists the L_2 out-neighbours (local indices) of gadget vertex x.
  std::optional<std::vector<std::vector<Vertex>>> l1_to_l2;
};

/// Throws BadParam on inconsistent widths.
Digraph layered_blowup(const LayeredSpec& spec);

/// First vertex of each layer; layer i is [offsets[i], offsets[i+1]).
std::vector<Vertex> layer_offsets(const LayeredSpec& spec);

/**
 * Random LayeredSpec for the given k >= 6 and delta >= 3. The L_1 gadget has
 * no sink, girth > k-4 and longest path in [k-4, k-2]; the L_2 gadget and the
 * L_1 -> L_2 arcs are random subject to the degree and path-length budget.
 * Returns nullopt when no gadget was found within the attempt budget.
 */
std::optional<LayeredSpec> random_layered_spec(std::size_t k, std::size_t delta,
                                               std::uint64_t seed);

// --- planted non-Seymour vertex ---------------------------------------------

/**
 * Random oriented graph on n vertices whose minimum out-degree is exactly
 * delta and which has a minimum out-degree vertex v with d++(v) <= delta - 1,
 * i.e. a non-Seymour vertex of minimum out-degree. Built around v, R = N+(v)
 * and a set S >= N++(v) of size <= delta - 1; remaining pairs get an arc with
 * probability p_arc, then out-degrees below delta are topped up. Labels are
 * shuffled at the end. Needs delta >= 3 and n >= 2 delta + 2 (BadParam);
 * returns nullopt when the top-up got stuck on every attempt.
 */
std::optional<Digraph> planted_non_seymour(std::size_t n, std::size_t delta, double p_arc,
                                           std::uint64_t seed);

// --- filtered streams -------------------------------------------------------

enum class GenKind { Exhaustive, RandomOriented, Tournament, Circulant, Layered, Planted };

std::string_view to_string(GenKind k);
std::optional<GenKind> gen_kind_from_string(std::string_view s);

struct Filter {
  enum class Kind { KAntiTransitive, MFree, MinOutDeg };
  Kind kind;
  std::size_t value;

  static Filter k_anti_transitive(std::size_t k) { return {Kind::KAntiTransitive, k}; }
  static Filter m_free(std::size_t m) { return {Kind::MFree, m}; }
  static Filter min_out_deg(std::size_t d) { return {Kind::MinOutDeg, d}; }

  bool accepts(const Digraph& d) const;
  std::string describe() const;
};

struct GenSpec {
  GenKind kind = GenKind::RandomOriented;
  std::size_t n = 0;
  /// Random kinds draw n uniformly from [n, n_max] per instance when n_max > n.
  std::size_t n_max = 0;
  double p_arc = 0.5;
  /// Random kinds draw p uniformly from [p_arc, p_arc_max) when p_arc_max > p_arc.
  double p_arc_max = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> connection_set;  // Circulant
  std::size_t layered_k = 7;                // Layered
  std::size_t delta = 7;                    // Layered, Planted
  std::size_t delta_max = 0;                // Layered, Planted; drawn like n_max
  std::vector<Filter> filters;
  /// Stop after this many accepted instances (0 = no limit).
  std::uint64_t limit = 0;
  /// Stop after this many scanned instances (0 = whole source for exhaustive
  /// and circulant kinds, 100 * limit for random kinds).
  std::uint64_t max_scanned = 0;

  /// Throws BadParam when inconsistent.
  void validate() const;
  /// Total candidates the stream will scan.
  std::uint64_t scan_budget() const;
  /// Candidate number `index` before filtering; nullopt when the layered
  /// gadget search gave up for this index. Pure function of (spec, index).
  std::optional<Digraph> candidate(std::uint64_t index) const;
  bool accepts(const Digraph& d) const;
};

class FilteredStream {
 public:
  /// Throws BadParam via GenSpec::validate.
  explicit FilteredStream(GenSpec spec);

  std::optional<Digraph> next();
  /// Index of the candidate most recently returned by next().
  std::uint64_t last_index() const noexcept { return last_index_; }

  std::uint64_t scanned() const noexcept { return scanned_; }
  std::uint64_t accepted() const noexcept { return accepted_; }
  double acceptance_rate() const noexcept {
    return scanned_ ? static_cast<double>(accepted_) / static_cast<double>(scanned_) : 0.0;
  }

 private:
  GenSpec spec_;
  std::uint64_t budget_;
  std::uint64_t cursor_ = 0;
  std::uint64_t last_index_ = 0;
  std::uint64_t scanned_ = 0;
  std::uint64_t accepted_ = 0;
};

// --- counterexample hunt ----------------------------------------------------

enum class HuntTarget { SSNC, Caccetta, Lemma3, Prover };

std::string_view to_string(HuntTarget t);
std::optional<HuntTarget> hunt_target_from_string(std::string_view s);

struct Counterexample {
  std::uint64_t index = 0;
  std::string encoding;  // digraph6 when n <= 62, else edge list
  std::string detail;
};

struct HuntReport {
  HuntTarget target = HuntTarget::SSNC;
  std::uint64_t scanned = 0;
  std::uint64_t accepted = 0;
  /// Accepted instances to which the target statement applies (all of them
  /// for SSNC and Prover).
  std::uint64_t hypothesis_met = 0;
  std::uint64_t counterexamples = 0;
  /// Per instance meeting the hypothesis (every accepted one for SSNC):
  /// min and max over v of d++(v) - d+(v). A negative max is a counterexample.
  std::map<std::int64_t, std::uint64_t> min_slack_histogram;
  std::map<std::int64_t, std::uint64_t> best_slack_histogram;
  /// Prover target only: terminal branch and step counts.
  std::map<std::string, std::uint64_t> branch_counts;
  std::map<std::string, std::uint64_t> step_counts;
  std::vector<Counterexample> examples;  // at most kMaxExamples

  static constexpr std::size_t kMaxExamples = 16;

  /// Associative; `other` is taken to cover later indices.
  void merge(const HuntReport& other);
  double acceptance_rate() const noexcept {
    return scanned ? static_cast<double>(accepted) / static_cast<double>(scanned) : 0.0;
  }
};

struct HuntOptions {
  std::size_t threads = 0;  // 0 = hardware concurrency
  std::size_t k = 7;        // Prover target
  /// Called from the calling thread after each block with the running report.
  std::function<void(const HuntReport&)> progress;
};

/// Scans the filtered stream for violations. Results do not depend on the
/// thread count.
HuntReport hunt_counterexamples(const GenSpec& spec, HuntTarget target,
                                const HuntOptions& options = {});

}  // namespace ssnc

#endif  // SSNC_GENERATORS_HPP
