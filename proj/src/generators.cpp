#include "ssnc/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "ssnc/errors.hpp"
#include "ssnc/formats.hpp"
#include "ssnc/prng.hpp"
#include "ssnc/properties.hpp"
#include "ssnc/prover.hpp"
#include "ssnc/seymour.hpp"

namespace ssnc {

Digraph random_oriented(std::size_t n, double p_arc, std::uint64_t seed) {
  if (!(p_arc >= 0.0 && p_arc <= 1.0))
    throw Error(ErrorKind::BadParam, "arc probability must lie in [0,1]");
  SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      if (!(rng.uniform() < p_arc)) continue;
      if (rng.coin())
        arcs.push_back({j, i});
      else
        arcs.push_back({i, j});
    }
  return Digraph::build(n, arcs);
}

Digraph random_tournament(std::size_t n, std::uint64_t seed) {
  return random_oriented(n, 1.0, seed);
}

Digraph circulant(std::size_t n, const std::vector<std::size_t>& S) {
  std::vector<bool> in_s(n, false);
  for (std::size_t s : S) {
    if (s == 0 || s >= n)
      throw Error(ErrorKind::BadParam, "connection " + std::to_string(s) + " outside 1..n-1");
    in_s[s] = true;
  }
  for (std::size_t s : S) {
    if (2 * s == n) throw Error(ErrorKind::BadParam, "connection n/2 gives 2-cycles");
    if (in_s[n - s])
      throw Error(ErrorKind::BadParam, "connections " + std::to_string(s) + " and " +
                                           std::to_string(n - s) + " give 2-cycles");
  }
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i)
    for (std::size_t s : S) arcs.push_back({i, (i + s) % n});
  return Digraph::build(n, arcs);
}

LabeledEnumeration::LabeledEnumeration(std::size_t n) : n_(n), size_(1) {
  if (n > 6) throw Error(ErrorKind::BadParam, "exhaustive enumeration needs n <= 6");
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      pairs_.emplace_back(i, j);
      size_ *= 3;
    }
}

Digraph LabeledEnumeration::at(std::uint64_t index) const {
  if (index >= size_) throw Error(ErrorKind::OutOfRange, "enumeration index out of range");
  std::vector<Arc> arcs;
  for (const auto& [i, j] : pairs_) {
    const auto digit = index % 3;
    index /= 3;
    if (digit == 1) arcs.push_back({i, j});
    if (digit == 2) arcs.push_back({j, i});
  }
  return Digraph::build(n_, arcs);
}

// --- layered ----------------------------------------------------------------

std::vector<Vertex> layer_offsets(const LayeredSpec& spec) {
  const std::size_t period = spec.period ? spec.period : spec.k + 1;
  std::vector<Vertex> off{0};
  for (std::size_t i = 0; i < period; ++i) {
    std::size_t width = spec.delta;
    if (i == 2) width = spec.second_gadget.order();
    off.push_back(off.back() + width);
  }
  return off;
}

Digraph layered_blowup(const LayeredSpec& spec) {
  const std::size_t period = spec.period ? spec.period : spec.k + 1;
  if (period < 4) throw Error(ErrorKind::BadParam, "layered construction needs period >= 4");
  if (spec.gadget.order() != spec.delta)
    throw Error(ErrorKind::BadParam, "gadget order must equal delta");
  if (spec.second_gadget.order() == 0)
    throw Error(ErrorKind::BadParam, "second layer must be non-empty");
  if (spec.l1_to_l2 && spec.l1_to_l2->size() != spec.delta)
    throw Error(ErrorKind::BadParam, "l1_to_l2 needs one row per gadget vertex");

  const auto off = layer_offsets(spec);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < period; ++i) {
    const std::size_t j = (i + 1) % period;
    if (i == 1 && spec.l1_to_l2) {
      for (Vertex x = 0; x < spec.delta; ++x)
        for (Vertex y : (*spec.l1_to_l2)[x]) {
          if (y >= spec.second_gadget.order())
            throw Error(ErrorKind::BadParam, "l1_to_l2 entry outside the second layer");
          arcs.push_back({off[1] + x, off[2] + y});
        }
      continue;
    }
    for (Vertex a = off[i]; a < off[i + 1]; ++a)
      for (Vertex b = off[j]; b < off[j + 1]; ++b) arcs.push_back({a, b});
  }
  for (const Arc& a : spec.gadget.arcs()) arcs.push_back({off[1] + a.from, off[1] + a.to});
  for (const Arc& a : spec.second_gadget.arcs()) arcs.push_back({off[2] + a.from, off[2] + a.to});
  return Digraph::build(off.back(), arcs);
}

namespace {

// Random arcs added one at a time while girth stays above `m` and the longest
// path stays within `cap`; stops early at random once no vertex is a sink.
Digraph grow_gadget(std::size_t order, std::size_t m, std::size_t cap, bool need_no_sink,
                    double stop_prob, SplitMix64& rng, std::vector<Arc> arcs = {}) {
  std::vector<Arc> pairs;
  for (Vertex i = 0; i < order; ++i)
    for (Vertex j = 0; j < order; ++j)
      if (i != j) pairs.push_back({i, j});
  portable_shuffle(pairs, rng);

  Digraph g = Digraph::build(order, arcs);
  const VertexSet all = g.vertices();
  for (const Arc& a : pairs) {
    if (g.adjacent(a.from, a.to)) continue;
    // the new arc closes a cycle of length dist(to, from) + 1
    if (const auto back = distance(g, a.to, a.from); back && *back + 1 <= m) continue;
    arcs.push_back(a);
    Digraph next = Digraph::build(order, arcs);
    if (longest_path_in(next, all, cap + 1).length > cap) {
      arcs.pop_back();
      continue;
    }
    g = std::move(next);
    if (need_no_sink && g.min_out_deg() >= 1 && rng.uniform() < stop_prob) break;
  }
  return g;
}

}  // namespace

std::optional<LayeredSpec> random_layered_spec(std::size_t k, std::size_t delta,
                                               std::uint64_t seed) {
  if (k < 6) throw Error(ErrorKind::BadParam, "layered construction needs k >= 6");
  if (delta < 3) throw Error(ErrorKind::BadParam, "layered construction needs delta >= 3");
  const std::size_t m = k - 4;
  SplitMix64 rng(seed);

  for (int attempt = 0; attempt < 64; ++attempt) {
    LayeredSpec spec;
    spec.k = k;
    spec.delta = delta;
    const std::size_t cap = m + rng.below(3);
    const double stop = 0.1 + 0.5 * rng.uniform();
    // Planted directed cycles of length cap + 1 on random vertices; taking
    // all of them at once allows the whole gadget to be a union of cycles.
    std::vector<Arc> planted;
    if (rng.coin()) {
      std::vector<Vertex> perm(delta);
      std::iota(perm.begin(), perm.end(), Vertex{0});
      portable_shuffle(perm, rng);
      const std::size_t c = cap + 1;
      const std::size_t cycles = rng.coin() ? delta / c : std::min<std::size_t>(1, delta / c);
      for (std::size_t q = 0; q < cycles; ++q)
        for (std::size_t i = 0; i < c; ++i)
          planted.push_back({perm[q * c + i], perm[q * c + (i + 1) % c]});
    }
    spec.gadget = grow_gadget(delta, m, cap, true, stop, rng, std::move(planted));
    if (spec.gadget.min_out_deg() == 0) continue;
    const std::size_t l1 = longest_path_in(spec.gadget, spec.gadget.vertices()).length;
    if (l1 < m || l1 > m + 2) continue;

    // Widths below delta - 1 need every gadget vertex to make up the rest.
    std::size_t gadget_min = spec.gadget.min_out_deg();
    std::size_t width = delta - 1;
    if (gadget_min >= 2 && rng.coin()) width = delta - 1 - rng.below(std::min(gadget_min - 1, delta - 2));
    const std::size_t budget = k - 2 - l1;
    spec.second_gadget = budget == 0 ? Digraph::build(width, {})
                                     : grow_gadget(width, m, std::min<std::size_t>(budget, 2),
                                                   false, 0.0, rng);
    if (budget > 0 && rng.coin()) {
      // thin the second gadget so low d+_X values occur too
      std::vector<Arc> kept;
      for (const Arc& a : spec.second_gadget.arcs())
        if (rng.coin()) kept.push_back(a);
      spec.second_gadget = Digraph::build(width, kept);
    }

    if (rng.coin()) {
      std::vector<std::vector<Vertex>> rows(delta);
      for (Vertex x = 0; x < delta; ++x) {
        std::vector<Vertex> targets(width);
        std::iota(targets.begin(), targets.end(), Vertex{0});
        portable_shuffle(targets, rng);
        const std::size_t need = delta - std::min(delta, spec.gadget.out_deg(x));
        const std::size_t keep = need + rng.below(width - std::min(width, need) + 1);
        targets.resize(std::min(width, std::max(need, keep)));
        std::sort(targets.begin(), targets.end());
        rows[x] = std::move(targets);
      }
      spec.l1_to_l2 = std::move(rows);
    } else if (width + gadget_min < delta) {
      continue;
    }
    return spec;
  }
  return std::nullopt;
}

// --- planted non-Seymour vertex ---------------------------------------------

std::optional<Digraph> planted_non_seymour(std::size_t n, std::size_t delta, double p_arc,
                                           std::uint64_t seed) {
  if (delta < 3) throw Error(ErrorKind::BadParam, "planted construction needs delta >= 3");
  if (n < 2 * delta + 2) throw Error(ErrorKind::BadParam, "planted construction needs n >= 2 delta + 2");
  if (n > kMaxVertices) throw Error(ErrorKind::Unsupported, "vertex count exceeds cap");
  if (!(p_arc >= 0.0 && p_arc <= 1.0))
    throw Error(ErrorKind::BadParam, "arc probability must lie in [0,1]");

  enum Role { V, InR, InS, InW };
  SplitMix64 rng(seed);
  // Each r in R needs delta out-neighbours inside R u S, which forces |S| >= (delta+1)/2.
  const std::size_t s_lo = (delta + 2) / 2;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const std::size_t s = s_lo + rng.below(delta - s_lo);
    std::vector<Role> role(n, InW);
    role[0] = V;
    for (Vertex x = 1; x <= delta; ++x) role[x] = InR;
    for (Vertex x = delta + 1; x <= delta + s; ++x) role[x] = InS;

    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    auto adjacent = [&](Vertex x, Vertex y) { return a[x][y] || a[y][x]; };
    // v's out-set is fixed and R may not leave R u S
    auto allowed = [&](Vertex x, Vertex y) { return role[x] != V && !(role[x] == InR && role[y] == InW); };
    std::vector<std::size_t> out(n, 0);
    auto add = [&](Vertex x, Vertex y) {
      a[x][y] = true;
      ++out[x];
    };

    for (Vertex r = 1; r <= delta; ++r) add(0, r);
    std::vector<std::size_t> in_r(n, 0);
    for (Vertex x = 1; x <= delta; ++x)
      for (Vertex y = x + 1; y <= delta; ++y) {
        const Vertex from = rng.coin() ? y : x;
        add(from, from == x ? y : x);
        ++in_r[from];
      }
    bool ok = true;
    for (Vertex r = 1; r <= delta; ++r) ok = ok && in_r[r] + s >= delta;
    if (!ok) continue;

    std::vector<Vertex> S;
    for (Vertex x = delta + 1; x <= delta + s; ++x) S.push_back(x);
    for (Vertex r = 1; r <= delta; ++r) {
      const std::size_t need = delta - std::min(delta, in_r[r]);
      const std::size_t count = need + rng.below(s - need + 1);
      portable_shuffle(S, rng);
      for (std::size_t i = 0; i < count; ++i) add(r, S[i]);
    }

    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) {
        if (adjacent(x, y) || !(rng.uniform() < p_arc)) continue;
        const bool fwd = allowed(x, y), back = allowed(y, x);
        if (fwd && back) {
          if (rng.coin()) add(y, x);
          else add(x, y);
        } else if (fwd) {
          add(x, y);
        } else if (back) {
          add(y, x);
        }
      }

    for (Vertex x = 1; x < n && ok; ++x) {
      if (out[x] >= delta) continue;
      std::vector<Vertex> targets;
      for (Vertex y = 0; y < n; ++y)
        if (y != x && !adjacent(x, y) && allowed(x, y)) targets.push_back(y);
      portable_shuffle(targets, rng);
      for (std::size_t i = 0; i < targets.size() && out[x] < delta; ++i) add(x, targets[i]);
      // still short: take over arcs from in-neighbours with out-degree to spare
      for (Vertex y = 1; y < n && out[x] < delta; ++y) {
        if (!a[y][x] || out[y] <= delta || !allowed(x, y)) continue;
        a[y][x] = false;
        --out[y];
        add(x, y);
      }
      ok = out[x] >= delta;
    }
    if (!ok) continue;

    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), Vertex{0});
    portable_shuffle(label, rng);
    std::vector<Arc> arcs;
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y)
        if (a[x][y]) arcs.push_back({label[x], label[y]});
    return Digraph::build(n, arcs);
  }
  return std::nullopt;
}

// --- streams ----------------------------------------------------------------

std::string_view to_string(GenKind k) {
  switch (k) {
    case GenKind::Exhaustive: return "exhaustive";
    case GenKind::RandomOriented: return "random";
    case GenKind::Tournament: return "tournament";
    case GenKind::Circulant: return "circulant";
    case GenKind::Layered: return "layered";
    case GenKind::Planted: return "planted";
  }
  return "?";
}

std::optional<GenKind> gen_kind_from_string(std::string_view s) {
  for (GenKind k : {GenKind::Exhaustive, GenKind::RandomOriented, GenKind::Tournament,
                    GenKind::Circulant, GenKind::Layered, GenKind::Planted})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

bool Filter::accepts(const Digraph& d) const {
  switch (kind) {
    case Kind::KAntiTransitive: return is_k_anti_transitive(d, value);
    case Kind::MFree: return is_m_free(d, value);
    case Kind::MinOutDeg: return d.order() == 0 ? value == 0 : d.min_out_deg() >= value;
  }
  return false;
}

std::string Filter::describe() const {
  switch (kind) {
    case Kind::KAntiTransitive: return "k_anti_transitive(" + std::to_string(value) + ")";
    case Kind::MFree: return "m_free(" + std::to_string(value) + ")";
    case Kind::MinOutDeg: return "min_out_deg(" + std::to_string(value) + ")";
  }
  return "?";
}

namespace {

bool random_kind(GenKind k) {
  return k == GenKind::RandomOriented || k == GenKind::Tournament || k == GenKind::Layered ||
         k == GenKind::Planted;
}

// A min out-degree filter no oriented graph on n vertices can meet.
bool impossible_filter(const GenSpec& spec) {
  if (spec.kind == GenKind::Layered) return false;
  const std::size_t n_hi = std::max(spec.n, spec.n_max);
  for (const Filter& f : spec.filters)
    if (f.kind == Filter::Kind::MinOutDeg && f.value > 0 && 2 * f.value > n_hi - std::min<std::size_t>(n_hi, 1))
      return true;
  return false;
}

}  // namespace

void GenSpec::validate() const {
  if (!(p_arc >= 0.0 && p_arc <= 1.0) || !(p_arc_max >= 0.0 && p_arc_max <= 1.0))
    throw Error(ErrorKind::BadParam, "arc probability must lie in [0,1]");
  for (const Filter& f : filters) {
    if (f.kind == Filter::Kind::KAntiTransitive && f.value < 2)
      throw Error(ErrorKind::BadParam, "k-anti-transitivity filter needs k >= 2");
    if (f.kind == Filter::Kind::MFree && f.value < 1)
      throw Error(ErrorKind::BadParam, "m-free filter needs m >= 1");
  }
  switch (kind) {
    case GenKind::Exhaustive:
      if (n > 6) throw Error(ErrorKind::BadParam, "exhaustive enumeration needs n <= 6");
      break;
    case GenKind::Circulant:
      (void)circulant(n, connection_set);
      break;
    case GenKind::Layered:
      if (layered_k < 6) throw Error(ErrorKind::BadParam, "layered construction needs k >= 6");
      if (delta < 3) throw Error(ErrorKind::BadParam, "layered construction needs delta >= 3");
      break;
    case GenKind::Planted:
      if (delta < 3) throw Error(ErrorKind::BadParam, "planted construction needs delta >= 3");
      if (n < 2 * std::max(delta, delta_max) + 2)
        throw Error(ErrorKind::BadParam, "planted construction needs n >= 2 delta + 2");
      if (std::max(n, n_max) > kMaxVertices)
        throw Error(ErrorKind::Unsupported, "vertex count exceeds cap");
      break;
    default:
      if (std::max(n, n_max) > kMaxVertices)
        throw Error(ErrorKind::Unsupported, "vertex count exceeds cap");
      break;
  }
  if (random_kind(kind) && limit == 0 && max_scanned == 0)
    throw Error(ErrorKind::BadParam, "random streams need a limit or a scan budget");
}

std::uint64_t GenSpec::scan_budget() const {
  if (impossible_filter(*this)) return 0;
  std::uint64_t source = 0;
  if (kind == GenKind::Exhaustive)
    source = LabeledEnumeration(n).size();
  else if (kind == GenKind::Circulant)
    source = 1;
  else
    source = max_scanned ? max_scanned : 100 * limit;
  return max_scanned ? std::min(source, max_scanned) : source;
}

std::optional<Digraph> GenSpec::candidate(std::uint64_t index) const {
  switch (kind) {
    case GenKind::Exhaustive: return LabeledEnumeration(n).at(index);
    case GenKind::Circulant: return circulant(n, connection_set);
    default: break;
  }
  SplitMix64 rng(SplitMix64::nth(seed, index));
  if (kind == GenKind::Layered) {
    std::size_t d = delta;
    if (delta_max > delta) d += rng.below(delta_max - delta + 1);
    auto spec = random_layered_spec(layered_k, d, rng());
    if (!spec) return std::nullopt;
    return layered_blowup(*spec);
  }
  std::size_t order = n;
  if (n_max > n) order += rng.below(n_max - n + 1);
  double p = kind == GenKind::Tournament ? 1.0 : p_arc;
  if (kind != GenKind::Tournament && p_arc_max > p_arc) p += (p_arc_max - p_arc) * rng.uniform();
  if (kind == GenKind::Planted) {
    std::size_t d = delta;
    if (delta_max > delta) d += rng.below(delta_max - delta + 1);
    return planted_non_seymour(order, d, p, rng());
  }
  return random_oriented(order, p, rng());
}

bool GenSpec::accepts(const Digraph& d) const {
  return std::all_of(filters.begin(), filters.end(), [&](const Filter& f) { return f.accepts(d); });
}

FilteredStream::FilteredStream(GenSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  budget_ = spec_.scan_budget();
}

std::optional<Digraph> FilteredStream::next() {
  while (cursor_ < budget_ && (spec_.limit == 0 || accepted_ < spec_.limit)) {
    const std::uint64_t index = cursor_++;
    ++scanned_;
    auto d = spec_.candidate(index);
    if (!d || !spec_.accepts(*d)) continue;
    ++accepted_;
    last_index_ = index;
    return d;
  }
  return std::nullopt;
}

// --- hunt -------------------------------------------------------------------

std::string_view to_string(HuntTarget t) {
  switch (t) {
    case HuntTarget::SSNC: return "ssnc";
    case HuntTarget::Caccetta: return "caccetta";
    case HuntTarget::Lemma3: return "lemma3";
    case HuntTarget::Prover: return "prover";
  }
  return "?";
}

std::optional<HuntTarget> hunt_target_from_string(std::string_view s) {
  for (HuntTarget t : {HuntTarget::SSNC, HuntTarget::Caccetta, HuntTarget::Lemma3, HuntTarget::Prover})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

void HuntReport::merge(const HuntReport& other) {
  scanned += other.scanned;
  accepted += other.accepted;
  hypothesis_met += other.hypothesis_met;
  counterexamples += other.counterexamples;
  for (const auto& [k, v] : other.min_slack_histogram) min_slack_histogram[k] += v;
  for (const auto& [k, v] : other.best_slack_histogram) best_slack_histogram[k] += v;
  for (const auto& [k, v] : other.branch_counts) branch_counts[k] += v;
  for (const auto& [k, v] : other.step_counts) step_counts[k] += v;
  for (const auto& ex : other.examples) {
    if (examples.size() >= kMaxExamples) break;
    examples.push_back(ex);
  }
}

namespace {

struct Outcome {
  bool accepted = false;
  bool hypothesis = false;
  bool violation = false;
  std::int64_t min_slack = 0;
  std::int64_t best_slack = 0;
  bool has_seymour = true;
  std::string branch;
  std::string step;
  std::string detail;
  std::optional<Digraph> graph;  // kept only for violations
};

Outcome evaluate(const GenSpec& spec, HuntTarget target, std::size_t k, std::uint64_t index) {
  Outcome out;
  auto d = spec.candidate(index);
  if (!d || !spec.accepts(*d)) return out;
  out.accepted = true;
  if (d->order() == 0) return out;
  const SeymourReport rep = seymour_report(*d);
  out.min_slack = rep.min_slack;
  out.has_seymour = !rep.seymour_vertices.empty();
  out.best_slack = std::numeric_limits<std::int64_t>::min();
  for (const VertexRecord& r : rep.records)
    out.best_slack = std::max(out.best_slack, static_cast<std::int64_t>(r.second_out_deg) -
                                                  static_cast<std::int64_t>(r.out_deg));

  switch (target) {
    case HuntTarget::SSNC:
      out.hypothesis = true;
      out.violation = !out.has_seymour;
      if (out.violation) out.detail = "no Seymour vertex";
      break;
    case HuntTarget::Caccetta: {
      const CaccettaVerdict v = check_caccetta_instance(*d);
      out.hypothesis = v.hypothesis_met;
      out.violation = v.hypothesis_met && !v.triangle;
      if (out.violation)
        out.detail = v.has_seymour_vertex ? "degree hypothesis met, Seymour vertex, no triangle"
                                          : "degree hypothesis met, no triangle";
      break;
    }
    case HuntTarget::Lemma3: {
      const std::size_t delta = d->min_out_deg();
      for (Vertex v = 0; v < d->order(); ++v) {
        if (d->out_deg(v) != delta || delta == 0 || d->second_out_deg(v) + 1 > delta) continue;
        out.hypothesis = true;
        const Lemma3Report rep = check_lemma3(*d, v);
        if (!rep.holds()) {
          out.violation = true;
          out.detail = "bound fails at v = " + std::to_string(v);
          break;
        }
      }
      break;
    }
    case HuntTarget::Prover: {
      const ProofOutcome res = find_seymour_constructive(*d, k);
      if (const TraceError* e = error_of(res)) {
        out.hypothesis = e->kind != TraceErrorKind::PreconditionViolated;
        out.violation = out.hypothesis;
        out.detail = std::string(to_string(e->kind)) + ": " + e->message;
        if (out.hypothesis) out.branch = to_string(e->partial.branch);
      } else {
        const ProofTrace& t = *trace_of(res);
        out.hypothesis = true;
        out.branch = to_string(t.branch);
        out.step = t.step;
      }
      break;
    }
  }
  if (out.violation) out.graph = std::move(d);
  return out;
}

}  // namespace

HuntReport hunt_counterexamples(const GenSpec& spec, HuntTarget target, const HuntOptions& options) {
  spec.validate();
  HuntReport report;
  report.target = target;
  const std::uint64_t budget = spec.scan_budget();
  std::size_t threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max<std::size_t>(threads, 1);
  const std::uint64_t block = 64 * threads;

  std::vector<Outcome> outcomes;
  for (std::uint64_t start = 0; start < budget; start += block) {
    if (spec.limit && report.accepted >= spec.limit) break;
    const std::uint64_t end = std::min(budget, start + block);
    outcomes.assign(end - start, Outcome{});
    auto work = [&](std::size_t t) {
      for (std::uint64_t i = start + t; i < end; i += threads)
        outcomes[i - start] = evaluate(spec, target, options.k, i);
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    for (std::uint64_t i = start; i < end; ++i) {
      if (spec.limit && report.accepted >= spec.limit) break;
      Outcome& o = outcomes[i - start];
      ++report.scanned;
      if (!o.accepted) continue;
      ++report.accepted;
      if (o.hypothesis || target == HuntTarget::SSNC) {
        ++report.min_slack_histogram[o.min_slack];
        ++report.best_slack_histogram[o.best_slack];
      }
      if (o.hypothesis) ++report.hypothesis_met;
      if (!o.branch.empty()) ++report.branch_counts[o.branch];
      if (!o.step.empty()) ++report.step_counts[o.step];
      if (o.violation) {
        ++report.counterexamples;
        if (report.examples.size() < HuntReport::kMaxExamples)
          report.examples.push_back({i, compact_encoding(*o.graph), o.detail});
      }
    }
    if (options.progress) options.progress(report);
  }
  return report;
}

}  // namespace ssnc
