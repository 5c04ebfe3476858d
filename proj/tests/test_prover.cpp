#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "ssnc/errors.hpp"
#include "ssnc/generators.hpp"
#include "ssnc/properties.hpp"
#include "ssnc/prover.hpp"
#include "ssnc/seymour.hpp"

using namespace ssnc;

namespace {

// Checks every documented property of a successful trace.
void check_trace(const Digraph& d, const ProofTrace& t) {
  CHECK(is_seymour_vertex(d, t.result));
  for (const Assertion& a : t.assertions) {
    INFO(a.text);
    CHECK(a.holds);
  }
  CHECK(t.m + 4 == t.k);
  if (t.branch == Branch::SmallDelta || t.branch == Branch::LargeM) return;
  CHECK(t.delta == d.min_out_deg());
  CHECK(d.out_deg(t.v) == t.delta);
  CHECK(t.R == d.out_nbrs(t.v));
  if (t.branch == Branch::Sink || t.branch == Branch::VSeymour) {
    CHECK(t.result == t.v);
    return;
  }
  CHECK(is_valid_path(d, t.subpath));
  for (Vertex x : t.subpath.vertices) CHECK(t.R.contains(x));
  const std::size_t l = t.subpath.length();
  CHECK(l >= t.m);
  CHECK(l <= t.m + 2);
  switch (t.branch) {
    case Branch::Case1: CHECK(l == t.m); break;
    case Branch::Case2a:
    case Branch::Case2b: CHECK(l == t.m + 1); break;
    case Branch::Case3a:
    case Branch::Case3b: CHECK(l == t.m + 2); break;
    default: break;
  }
  CHECK(t.B.is_subset_of(t.R));
  CHECK(!t.step.empty());
}

}  // namespace

TEST_CASE("small examples take the fallback branch") {
  const auto c5 = find_seymour_constructive(fx::c5(), 7);
  REQUIRE(trace_of(c5));
  CHECK(trace_of(c5)->branch == Branch::SmallDelta);
  CHECK(trace_of(c5)->result == 0);

  const auto tt3 = find_seymour_constructive(fx::tt3(), 7);
  REQUIRE(trace_of(tt3));
  CHECK(trace_of(tt3)->branch == Branch::SmallDelta);
  CHECK(trace_of(tt3)->result == 2);

  // two disjoint directed 9-cycles
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < 9; ++i) {
    arcs.push_back({i, (i + 1) % 9});
    arcs.push_back({9 + i, 9 + (i + 1) % 9});
  }
  const Digraph two = Digraph::build(18, arcs);
  const auto r = find_seymour_constructive(two, 7);
  REQUIRE(trace_of(r));
  CHECK(trace_of(r)->branch == Branch::SmallDelta);
  check_trace(two, *trace_of(r));
}

TEST_CASE("precondition failures") {
  // P7 plus the chord 0 -> 7 is a C(7,1)
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < 7; ++i) arcs.push_back({i, i + 1});
  arcs.push_back({0, 7});
  const auto r = find_seymour_constructive(Digraph::build(8, arcs), 7);
  REQUIRE(error_of(r));
  CHECK(error_of(r)->kind == TraceErrorKind::PreconditionViolated);
  REQUIRE(error_of(r)->witness);
  CHECK(error_of(r)->witness->u == 0);
  CHECK(error_of(r)->witness->v == 7);
  CHECK(error_of(r)->witness->path.length() == 7);

  const auto circ = find_seymour_constructive(circulant(19, {1, 2, 3, 4, 5, 6, 7}), 7);
  REQUIRE(error_of(circ));
  CHECK(error_of(circ)->kind == TraceErrorKind::PreconditionViolated);

  // girth 3 with k = 8 needs 4-free
  const auto short_cycle = find_seymour_constructive(fx::c3(), 8);
  REQUIRE(error_of(short_cycle));
  CHECK(error_of(short_cycle)->kind == TraceErrorKind::PreconditionViolated);

  CHECK(error_of(find_seymour_constructive(fx::c5(), 5))->kind == TraceErrorKind::PreconditionViolated);
  CHECK(error_of(find_seymour_constructive(Digraph(), 7))->kind == TraceErrorKind::PreconditionViolated);

  // skipping the precheck goes straight to the ladder
  const auto skipped = find_seymour_constructive(fx::c3(), 8, {.skip_precheck = true});
  REQUIRE(trace_of(skipped));
  CHECK(is_seymour_vertex(fx::c3(), trace_of(skipped)->result));
}

TEST_CASE("exhaustive n <= 5 with the precheck skipped") {
  for (std::size_t n = 1; n <= 5; ++n) {
    LabeledEnumeration all(n);
    for (std::uint64_t i = 0; i < all.size(); ++i) {
      const Digraph d = all.at(i);
      const auto r = find_seymour_constructive(d, 7, {.skip_precheck = true});
      REQUIRE(trace_of(r));
      CHECK(trace_of(r)->branch == Branch::SmallDelta);
      CHECK(is_seymour_vertex(d, trace_of(r)->result));
      CHECK(brute_force_seymour(d).has_value());
    }
  }
}

TEST_CASE("case analysis on layered instances") {
  std::map<Branch, int> seen;
  std::set<std::string> steps;
  int runs = 0;
  auto all_seen = [&] {
    for (Branch b : {Branch::Case1, Branch::Case2a, Branch::Case2b, Branch::Case3a, Branch::Case3b})
      if (seen[b] == 0) return false;
    return true;
  };
  GenSpec spec;
  spec.kind = GenKind::Layered;
  spec.delta = 7;
  spec.delta_max = 10;
  for (std::uint64_t index = 0; index < 3000 && (index < 400 || !all_seen()); ++index) {
    const std::size_t k = index < 400 && index % 2 ? 8 : 7;
    spec.layered_k = k;
    const auto candidate = spec.candidate(index);
    if (!candidate) continue;
    const Digraph& d = *candidate;
    REQUIRE(is_k_anti_transitive(d, k));
    REQUIRE(is_m_free(d, k - 4));
    REQUIRE(d.min_out_deg() >= 7);
    const auto r = find_seymour_constructive(d, k);
    if (const TraceError* e = error_of(r)) FAIL_CHECK(e->message);
    REQUIRE(trace_of(r));
    const ProofTrace& t = *trace_of(r);
    check_trace(d, t);
    ++seen[t.branch];
    steps.insert(t.step);
    ++runs;
    // identical input, identical trace
    const auto again = find_seymour_constructive(d, k);
    CHECK(trace_of(again)->step == t.step);
    CHECK(trace_of(again)->result == t.result);
    CHECK(trace_of(again)->named == t.named);
  }
  CHECK(runs > 150);
  for (Branch b : {Branch::Case1, Branch::Case2a, Branch::Case2b, Branch::Case3a, Branch::Case3b}) {
    INFO(to_string(b));
    CHECK(seen[b] > 0);
  }
  MESSAGE("distinct steps reached: " << steps.size());
}

TEST_CASE("case analysis without fallbacks never returns a wrong vertex") {
  int traces = 0, divergences = 0;
  LabeledEnumeration all(5);
  for (std::uint64_t i = 0; i < all.size(); i += 7) {
    const Digraph d = all.at(i);
    const auto r = find_seymour_constructive(d, 7, {.skip_precheck = true, .external_fallbacks = false});
    if (const ProofTrace* t = trace_of(r)) {
      ++traces;
      CHECK(is_seymour_vertex(d, t->result));
    } else {
      CHECK(error_of(r)->kind == TraceErrorKind::ProofDivergence);
      ++divergences;
    }
  }
  CHECK(traces > 0);
  MESSAGE(traces << " traces, " << divergences << " divergences off-hypothesis");
}

TEST_CASE("brute force, triangles and the degree corollary") {
  CHECK(brute_force_seymour(fx::tt3()) == 2);
  CHECK(brute_force_seymour(fx::c3()) == 0);
  CHECK_THROWS_AS(brute_force_seymour(Digraph()), Error);

  CHECK(find_directed_triangle(fx::c3()) == std::array<Vertex, 3>{0, 1, 2});
  CHECK(!find_directed_triangle(fx::tt3()));
  CHECK(!find_directed_triangle(fx::c5()));

  const CaccettaVerdict c3 = check_caccetta_instance(fx::c3());
  CHECK(c3.hypothesis_met);
  CHECK(c3.triangle);
  CHECK(c3.consistent);
  const CaccettaVerdict c5 = check_caccetta_instance(fx::c5());
  CHECK(!c5.hypothesis_met);
  CHECK(c5.consistent);

  for (std::size_t n = 3; n <= 4; ++n) {
    LabeledEnumeration all(n);
    for (std::uint64_t i = 0; i < all.size(); ++i) {
      const Digraph d = all.at(i);
      const CaccettaVerdict v = check_caccetta_instance(d);
      CHECK(v.triangle.has_value() == oracle::has_directed_triangle(oracle::from(d)));
      if (v.hypothesis_met) CHECK(v.triangle);
    }
  }
}

TEST_CASE("branch names round-trip") {
  for (Branch b : kAllBranches) CHECK(branch_from_string(to_string(b)) == b);
  CHECK(!branch_from_string("Case4"));
}
