// Acceptance suite. One PASS/FAIL line per criterion; exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "ssnc/commands.hpp"
#include "ssnc/errors.hpp"
#include "ssnc/formats.hpp"
#include "ssnc/generators.hpp"
#include "ssnc/prng.hpp"
#include "ssnc/properties.hpp"
#include "ssnc/prover.hpp"
#include "ssnc/seymour.hpp"

using namespace ssnc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void verdict(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << std::endl;
  if (!ok) ++failures;
}

template <typename F>
void each_exhaustive(std::size_t n_lo, std::size_t n_hi, F&& f) {
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const LabeledEnumeration e(n);
    for (std::uint64_t i = 0; i < e.size(); ++i) f(e.at(i));
  }
}

// Random oriented graph with n in [2, n_max] and a uniform density.
Digraph random_instance(SplitMix64& rng, std::size_t n_max) {
  const std::size_t n = 2 + rng.below(n_max - 1);
  return random_oriented(n, rng.uniform(), rng());
}

// Planted non-Seymour minimum vertex, n <= n_max.
std::optional<Digraph> planted_instance(SplitMix64& rng, std::size_t n_max) {
  const std::size_t delta = 3 + rng.below((n_max - 2) / 2 - 2);
  const std::size_t n = 2 * delta + 2 + rng.below(n_max - 2 * delta - 1);
  return planted_non_seymour(n, delta, rng.uniform(), rng());
}

// ---------------------------------------------------------------------------

void exhaustive_ssnc() {
  const auto t0 = Clock::now();
  std::uint64_t scanned = 0, bad = 0;
  each_exhaustive(2, 5, [&](const Digraph& d) {
    ++scanned;
    if (seymour_report(d).seymour_vertices.empty()) ++bad;
  });
  const double secs = seconds_since(t0);
  std::ostringstream s;
  s << scanned << " graphs on 2..5 vertices, " << bad << " without a Seymour vertex, " << secs
    << " s single-threaded";
  verdict(1, "every oriented graph with n <= 5 has a Seymour vertex",
          scanned == 3 + 27 + 729 + 59049 && bad == 0 && secs < 10.0, s.str());
}

void lambda_bound() {
  std::uint64_t checked = 0, bad = 0, marginal = 0;
  auto run = [&](const Digraph& d) {
    ++checked;
    const LambdaCheck c = lambda_ratio_check(d);
    if (!c.passes) ++bad;
    if (c.marginal) ++marginal;
  };
  each_exhaustive(1, 5, run);
  SplitMix64 rng(0x1a3bda);
  std::uint64_t random = 0;
  while (random < 100000) {
    // two in three plain random, one in three with a non-Seymour minimum vertex
    if (random % 3 == 2) {
      if (auto d = planted_instance(rng, 14)) {
        run(*d);
        ++random;
      }
    } else {
      run(random_instance(rng, 14));
      ++random;
    }
  }
  std::ostringstream s;
  s << checked << " graphs (exhaustive n <= 5 plus " << random << " random, n <= 14), " << bad
    << " failures, " << marginal << " inside the enclosure";
  verdict(2, "some vertex has d++ >= lambda d+", bad == 0 && random == 100000, s.str());
}

void lemma_suite() {
  // sink criterion at minimum out-degree vertices
  SplitMix64 rng(0x51c4);
  std::uint64_t trials = 0, fired = 0, sink_bad = 0;
  for (; trials < 100000; ++trials) {
    std::optional<Digraph> d;
    if (trials % 4 == 3) d = planted_instance(rng, 14);
    if (!d) d = random_instance(rng, 14);
    const std::size_t delta = d->min_out_deg();
    for (Vertex v = 0; v < d->order(); ++v) {
      if (d->out_deg(v) != delta) continue;
      const SinkResult r = check_sink_lemma(*d, v);
      if (!r.sink || delta == 0) continue;
      ++fired;
      if (!r.v_is_seymour || !is_seymour_vertex(*d, v)) ++sink_bad;
    }
  }

  // longest path inside out-neighbourhoods of k-anti-transitive graphs
  std::map<std::size_t, std::pair<std::uint64_t, std::size_t>> per_k;  // k -> (instances, max length)
  std::uint64_t path_bad = 0;
  for (std::size_t k = 3; k <= 8; ++k) {
    auto& [count, longest] = per_k[k];
    while (count < 1000) {
      const std::size_t n = 4 + rng.below(9);
      const Digraph d = random_oriented(n, 0.1 + 0.5 * rng.uniform(), rng());
      if (!is_k_anti_transitive(d, k)) continue;
      ++count;
      if (!check_path_bound_lemma(d, k)) ++path_bad;
      for (Vertex v = 0; v < n; ++v) {
        const std::size_t l = longest_path_in_out_nbhd(d, v).length;
        longest = std::max(longest, l);
        if (l + 2 > k) ++path_bad;
      }
    }
  }

  // common out-neighbour bounds for pairs and triples
  std::uint64_t l3_instances = 0, pairs = 0, triples = 0, l3_bad = 0;
  GenSpec layered;
  layered.kind = GenKind::Layered;
  layered.layered_k = 7;
  layered.delta = 4;
  layered.delta_max = 9;
  std::uint64_t layered_index = 0;
  while (l3_instances < 10000) {
    std::optional<Digraph> d;
    if (l3_instances % 10 == 9) {
      d = layered.candidate(layered_index++);
    } else {
      d = planted_instance(rng, 14);
    }
    if (!d) continue;
    const std::size_t delta = d->min_out_deg();
    bool met = false;
    for (Vertex v = 0; v < d->order(); ++v) {
      if (d->out_deg(v) != delta || d->second_out_deg(v) + 1 > delta) continue;
      met = true;
      const Lemma3Report rep = check_lemma3(*d, v);
      pairs += rep.pairs_checked;
      triples += rep.triples_checked;
      l3_bad += rep.violations.size();
    }
    if (met) ++l3_instances;
  }

  std::ostringstream s;
  s << "sink: " << trials << " trials, fired " << fired << " times, " << sink_bad << " failures; paths:";
  for (const auto& [k, v] : per_k) s << " k=" << k << " " << v.first << " graphs max " << v.second;
  s << ", " << path_bad << " violations; common out-neighbours: " << l3_instances << " instances, "
    << pairs << " pairs, " << triples << " triples, " << l3_bad << " violations";
  verdict(3, "sink criterion, out-neighbourhood path bound, common out-neighbour bounds",
          sink_bad == 0 && fired > 0 && path_bad == 0 && l3_bad == 0, s.str());
}

void prover_soundness() {
  std::map<std::string, std::uint64_t> by_source;
  std::map<Branch, std::uint64_t> branches;
  std::set<std::string> steps;
  std::uint64_t runs = 0, divergence = 0, exhausted = 0, precondition = 0, wrong = 0;
  std::uint64_t assertions = 0;
  auto run = [&](const Digraph& d, std::size_t k, const char* source) {
    ++runs;
    ++by_source[source];
    const ProofOutcome r = find_seymour_constructive(d, k);
    if (const TraceError* e = error_of(r)) {
      switch (e->kind) {
        case TraceErrorKind::ProofDivergence: ++divergence; break;
        case TraceErrorKind::FallbackExhausted: ++exhausted; break;
        case TraceErrorKind::PreconditionViolated: ++precondition; break;
      }
      std::cerr << source << " k=" << k << " " << compact_encoding(d) << ": " << e->message << "\n";
      return;
    }
    const ProofTrace& t = *trace_of(r);
    ++branches[t.branch];
    steps.insert(t.step);
    assertions += t.assertions.size();
    bool ok = is_seymour_vertex(d, t.result);
    for (const Assertion& a : t.assertions) ok = ok && a.holds;
    if (!ok) ++wrong;
  };
  auto passes = [](const Digraph& d, std::size_t k) {
    return is_k_anti_transitive(d, k) && is_m_free(d, k - 4);
  };

  SplitMix64 rng(0x7e0);
  const std::array<std::size_t, 3> ks{6, 7, 8};
  // sparse random graphs
  for (std::uint64_t i = 0; by_source["random"] < 3000; ++i) {
    const std::size_t k = ks[i % 3];
    const std::size_t n = 6 + rng.below(15);
    const Digraph d = random_oriented(n, 0.05 + 0.25 * rng.uniform(), rng());
    if (passes(d, k)) run(d, k, "random");
  }
  // circulants
  for (std::uint64_t i = 0; by_source["circulant"] < 1000; ++i) {
    const std::size_t k = ks[i % 3];
    const std::size_t n = 5 + rng.below(40);
    std::vector<std::size_t> conn;
    const std::size_t size = 1 + rng.below(4);
    for (std::size_t j = 0; j < size; ++j) {
      const std::size_t s = 1 + rng.below((n - 1) / 2);
      if (std::find(conn.begin(), conn.end(), s) == conn.end()) conn.push_back(s);
    }
    const Digraph d = circulant(n, conn);
    if (passes(d, k)) run(d, k, "circulant");
  }
  // layered blow-ups, small and large minimum out-degree
  GenSpec layered;
  layered.kind = GenKind::Layered;
  for (std::uint64_t i = 0; by_source["layered"] < 6000; ++i) {
    const std::size_t k = i % 5 == 0 ? 6 : ks[1 + i % 2];
    layered.layered_k = k;
    layered.delta = i % 4 == 0 ? 3 : 7;
    layered.delta_max = i % 4 == 0 ? 6 : 10;
    const auto d = layered.candidate(i);
    if (d && passes(*d, k)) run(*d, k, "layered");
  }

  std::ostringstream s;
  s << runs << " runs (";
  for (const auto& [src, c] : by_source) s << src << " " << c << ", ";
  s << "k in {6,7,8}); ProofDivergence " << divergence << ", FallbackExhausted " << exhausted
    << ", PreconditionViolated " << precondition << ", unverified " << wrong << "; " << assertions
    << " assertions; branches:";
  for (Branch b : kAllBranches) s << " " << to_string(b) << "=" << branches[b];
  s << "; " << steps.size() << " distinct steps";
  verdict(4, "constructive finder returns a verified Seymour vertex",
          runs >= 10000 && divergence == 0 && exhausted == 0 && precondition == 0 && wrong == 0, s.str());
}

void caccetta() {
  std::uint64_t scanned = 0, met = 0, bad = 0, oracle_mismatch = 0;
  each_exhaustive(1, 5, [&](const Digraph& d) {
    ++scanned;
    const CaccettaVerdict v = check_caccetta_instance(d);
    if (v.triangle.has_value() != oracle::has_directed_triangle(oracle::from(d))) ++oracle_mismatch;
    if (!v.hypothesis_met) return;
    ++met;
    if (!v.triangle || !v.consistent) ++bad;
  });
  std::ostringstream s;
  s << scanned << " graphs, " << met << " meet the degree hypothesis, " << bad << " without a triangle, "
    << oracle_mismatch << " triangle-finder disagreements";
  verdict(5, "min in- and out-degree >= n/3 forces a directed triangle, n <= 5",
          met > 0 && bad == 0 && oracle_mismatch == 0, s.str());
}

void oracle_equivalence() {
  std::uint64_t graphs = 0, path_queries = 0, mismatches = 0;
  auto compare = [&](const Digraph& d) {
    ++graphs;
    const std::size_t n = d.order();
    const oracle::Mat g = oracle::from(d);
    if (girth(d) != oracle::girth(g)) ++mismatches;
    for (Vertex u = 0; u < n; ++u) {
      const auto second = oracle::second_out(g, u);
      if (d.second_out_nbrs(u).to_vector() != std::vector<Vertex>(second.begin(), second.end())) ++mismatches;
      // every (end, length) pair realised by a simple path from u
      std::set<std::pair<std::size_t, std::size_t>> realised;
      oracle::each_simple_path_from(g, u, [&](const std::vector<std::size_t>& p) {
        realised.insert({p.back(), p.size() - 1});
      });
      PathSearch search(d);
      for (Vertex v = 0; v < n; ++v) {
        if (v == u) continue;
        for (std::size_t k = 1; k <= n; ++k) {
          ++path_queries;
          const auto p = search.find(u, v, k);
          const bool expect = realised.count({v, k}) > 0;
          if (p.has_value() != expect) ++mismatches;
          if (p && (p->length() != k || !is_valid_path(d, *p) || p->vertices.front() != u ||
                    p->vertices.back() != v))
            ++mismatches;
        }
      }
    }
  };
  each_exhaustive(1, 4, compare);
  SplitMix64 rng(0x0c1e);
  for (int i = 0; i < 1000; ++i) compare(random_oriented(1 + rng.below(7), rng.uniform(), rng()));
  std::ostringstream s;
  s << graphs << " graphs (exhaustive n <= 4 plus 1000 random n <= 7), " << path_queries
    << " path queries, " << mismatches << " disagreements";
  verdict(6, "path search, girth and second out-neighbourhoods match brute force", mismatches == 0, s.str());
}

void format_fidelity() {
  SplitMix64 rng(0xf0);
  std::uint64_t corpus = 0, bad = 0, mutated = 0, mutated_parsed = 0;
  for (int i = 0; i < 1000; ++i) {
    const Digraph d = random_oriented(rng.below(kDigraph6MaxOrder + 1), rng.uniform(), rng());
    const std::string code = emit_digraph6(d);
    ++corpus;
    if (parse_digraph6(code) != d || emit_digraph6(parse_digraph6(code)) != code) ++bad;
    const std::string edges = emit_edgelist(d);
    if (parse_edgelist(edges) != d || emit_edgelist(parse_edgelist(edges)) != edges) ++bad;
    // one corrupted byte: rejected cleanly or still an exact round trip
    std::string m = code;
    m[rng.below(m.size())] = static_cast<char>(33 + rng.below(100));
    ++mutated;
    try {
      const Digraph e = parse_digraph6(m);
      ++mutated_parsed;
      if (emit_digraph6(e) != m) ++bad;
    } catch (const Error&) {
    }
  }

  std::uint64_t golden = 0, golden_bad = 0;
  std::ifstream in(std::string(SSNC_TEST_DATA_DIR) + "/digraph6_golden.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string name, arcs, code;
    std::size_t n = 0;
    row >> name >> n >> arcs >> code;
    std::vector<Arc> list;
    if (arcs != "-") {
      std::istringstream as(arcs);
      std::string item;
      while (std::getline(as, item, ',')) {
        const auto dash = item.find('-');
        list.push_back({Vertex(std::stoul(item.substr(0, dash))), Vertex(std::stoul(item.substr(dash + 1)))});
      }
    }
    ++golden;
    const Digraph d = Digraph::build(n, list);
    if (emit_digraph6(d) != code || parse_digraph6(code) != d) ++golden_bad;
  }
  std::ostringstream s;
  s << corpus << " round trips in each format, " << mutated << " corrupted strings (" << mutated_parsed
    << " still valid), " << bad << " failures; golden " << golden - golden_bad << "/" << golden
    << " byte-exact";
  verdict(7, "digraph6 and edge-list fidelity", bad == 0 && golden >= 40 && golden_bad == 0, s.str());
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(SSNC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  status = pclose(p);
  return out;
}

void determinism() {
  // in-process
  std::uint64_t compared = 0, differ = 0;
  auto same = [&](const std::function<Json()>& f) {
    ++compared;
    if (dump_report(without_timing(f())) != dump_report(without_timing(f()))) ++differ;
  };
  GenSpec random;
  random.kind = GenKind::RandomOriented;
  random.n = 10;
  random.n_max = 16;
  random.p_arc = 0.2;
  random.p_arc_max = 0.7;
  random.seed = 42;
  random.limit = 2000;
  same([&] { return cmd_hunt(random, HuntTarget::SSNC, {}).report; });
  GenSpec layered;
  layered.kind = GenKind::Layered;
  layered.delta = 7;
  layered.delta_max = 9;
  layered.seed = 9;
  layered.limit = 50;
  HuntOptions opts;
  opts.k = 7;
  same([&] { return cmd_hunt(layered, HuntTarget::Prover, opts).report; });
  same([&] { return cmd_enumerate(4, {}, HuntTarget::Caccetta, {}).report; });
  const Digraph big = layered_blowup(*random_layered_spec(7, 8, 3));
  const InputRef in{"memory", {GraphFormat::Edgelist, big, emit_edgelist(big)}};
  same([&] { return cmd_trace(in, 7, false).report; });
  same([&] { return cmd_check(in, {}).report; });

  // two separate processes
  const std::vector<std::string> invocations = {
      "hunt --kind random --n 12 --p 0.3 --seed 7 --limit 3000 --quiet",
      "hunt --kind planted --n 10 --n-max 14 --delta 3 --delta-max 4 --seed 5 --limit 500 --target lemma3 --quiet",
      "hunt --kind layered --k 7 --delta 7 --seed 1 --limit 30 --target prover --quiet",
      "enumerate --n 4 --quiet",
  };
  std::uint64_t cli_differ = 0;
  for (const std::string& args : invocations) {
    int s1 = 0, s2 = 0;
    const std::string a = run_cli(args, s1), b = run_cli(args, s2);
    ++compared;
    try {
      const Json ja = without_timing(Json::parse(a)), jb = without_timing(Json::parse(b));
      if (dump_report(ja) != dump_report(jb) || s1 != s2 || s1 != 0) ++cli_differ;
    } catch (const std::exception&) {
      ++cli_differ;
    }
  }
  std::ostringstream s;
  s << compared << " report pairs (" << invocations.size() << " from separate CLI processes), "
    << differ + cli_differ << " differ outside the timing field";
  verdict(8, "identical inputs give byte-identical reports", differ == 0 && cli_differ == 0, s.str());
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {
      exhaustive_ssnc, lambda_bound,       lemma_suite,     prover_soundness,
      caccetta,        oracle_equivalence, format_fidelity, determinism};
  int id = 0;
  for (const auto& c : criteria) {
    ++id;
    try {
      c();
    } catch (const std::exception& e) {
      verdict(id, "criterion raised an exception", false, e.what());
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
