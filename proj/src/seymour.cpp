#include "ssnc/seymour.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ssnc/errors.hpp"
#include "ssnc/properties.hpp"

namespace ssnc {

Ratio Ratio::of(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw Error(ErrorKind::BadParam, "ratio must be non-negative");
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

bool is_seymour_vertex(const Digraph& d, Vertex v) {
  return d.out_deg(v) <= d.second_out_deg(v);
}

SeymourReport seymour_report(const Digraph& d) {
  if (d.order() == 0) throw Error(ErrorKind::EmptyGraph, "digraph has no vertices");
  SeymourReport rep;
  rep.seymour_vertices = d.empty_set();
  rep.records.reserve(d.order());
  bool first = true;
  for (Vertex v = 0; v < d.order(); ++v) {
    VertexRecord rec{v, d.out_deg(v), d.second_out_deg(v), false};
    rec.is_seymour = rec.out_deg <= rec.second_out_deg;
    if (rec.is_seymour) rep.seymour_vertices.insert(v);
    const auto slack = static_cast<std::int64_t>(rec.second_out_deg) -
                       static_cast<std::int64_t>(rec.out_deg);
    if (first || slack < rep.min_slack) rep.min_slack = slack;
    first = false;
    if (rec.out_deg > 0) {
      const Ratio r = Ratio::of(static_cast<std::int64_t>(rec.second_out_deg),
                                static_cast<std::int64_t>(rec.out_deg));
      if (!rep.max_ratio || *rep.max_ratio < r) rep.max_ratio = r;
    }
    rep.records.push_back(rec);
  }
  return rep;
}

namespace {

__extension__ using i128 = __int128;

// sign of 2a^3 + a^2 * 2^s - 2^(3s), i.e. of f(a / 2^s) scaled by 2^(3s)
int lambda_poly_sign(std::int64_t a) {
  constexpr int s = LambdaConstant::kScaleBits;
  const i128 x = a;
  const i128 value = 2 * x * x * x + ((x * x) << s) - (static_cast<i128>(1) << (3 * s));
  return (value > 0) - (value < 0);
}

LambdaConstant compute_lambda() {
  LambdaConstant c;
  std::int64_t lo = 0;
  std::int64_t hi = std::int64_t{1} << LambdaConstant::kScaleBits;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (lambda_poly_sign(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  c.lo_num = lo;
  c.hi_num = hi;
  c.value = (static_cast<double>(lo) + static_cast<double>(hi)) / 2.0 /
            static_cast<double>(std::int64_t{1} << LambdaConstant::kScaleBits);
  return c;
}

}  // namespace

const LambdaConstant& LambdaConstant::get() {
  static const LambdaConstant c = compute_lambda();
  return c;
}

LambdaCheck lambda_ratio_check(const Digraph& d) {
  if (d.order() == 0) throw Error(ErrorKind::EmptyGraph, "digraph has no vertices");
  const LambdaConstant& lambda = LambdaConstant::get();
  LambdaCheck out;
  bool inside_enclosure = false;
  for (Vertex v = 0; v < d.order(); ++v) {
    const auto dp = static_cast<std::int64_t>(d.out_deg(v));
    const auto dpp = static_cast<std::int64_t>(d.second_out_deg(v));
    if (dp > 0) {
      const Ratio r = Ratio::of(dpp, dp);
      if (!out.max_ratio || *out.max_ratio < r) out.max_ratio = r;
    }
    const std::int64_t scaled = dpp << LambdaConstant::kScaleBits;
    if (scaled >= lambda.hi_num * dp) {
      if (!out.passes) out.witness = v;
      out.passes = true;
    } else if (scaled >= lambda.lo_num * dp) {
      inside_enclosure = true;
    }
  }
  out.marginal = !out.passes && inside_enclosure;
  return out;
}

SinkResult check_sink_lemma(const Digraph& d, Vertex v) {
  const std::size_t delta = d.min_out_deg();
  if (d.out_deg(v) != delta)
    throw Error(ErrorKind::HypothesisViolated,
                "vertex " + std::to_string(v) + " does not have minimum out-degree");
  SinkResult out;
  const VertexSet& r = d.out_nbrs(v);
  for (Vertex x : r)
    if (!d.out_nbrs(x).intersects(r)) {
      out.sink = x;
      break;
    }
  out.v_is_seymour = is_seymour_vertex(d, v);
  return out;
}

namespace {

struct LongestPathDfs {
  const Digraph& d;
  const VertexSet& s;
  std::size_t target;  // stop once a path of this length is found
  VertexSet on_path;
  std::vector<Vertex> stack;
  LongestPath best;
  bool done = false;

  void visit(Vertex x) {
    stack.push_back(x);
    on_path.insert(x);
    if (stack.size() - 1 > best.length || best.path.vertices.empty()) {
      best.length = stack.size() - 1;
      best.path.vertices = stack;
      if (best.length >= target) done = true;
    }
    if (!done)
      for (Vertex y : (d.out_nbrs(x) & s) - on_path) {
        visit(y);
        if (done) break;
      }
    on_path.erase(x);
    stack.pop_back();
  }
};

}  // namespace

LongestPath longest_path_in(const Digraph& d, const VertexSet& s,
                            std::optional<std::size_t> cap) {
  if (s.empty()) return {};
  std::size_t target = s.size() - 1;
  if (cap) target = std::min(target, *cap);
  LongestPathDfs dfs{d, s, target, d.empty_set(), {}, {}, false};
  for (Vertex x : s) {
    dfs.visit(x);
    if (dfs.done) break;
  }
  return dfs.best;
}

LongestPath longest_path_in_out_nbhd(const Digraph& d, Vertex v) {
  return longest_path_in(d, d.out_nbrs(v));
}

bool check_path_bound_lemma(const Digraph& d, std::size_t k) {
  if (k < 2) throw Error(ErrorKind::BadParam, "k must be >= 2");
  if (!is_k_anti_transitive(d, k))
    throw Error(ErrorKind::HypothesisViolated,
                "digraph is not " + std::to_string(k) + "-anti-transitive");
  for (Vertex v = 0; v < d.order(); ++v)
    if (longest_path_in(d, d.out_nbrs(v), k - 1).length > k - 2) return false;
  return true;
}

VertexSet common_out_nbrs_outside(const Digraph& d, const VertexSet& r,
                                  const std::vector<Vertex>& vs) {
  if (vs.size() != 2 && vs.size() != 3)
    throw Error(ErrorKind::BadParam, "expected 2 or 3 vertices");
  VertexSet common = r.complement();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!r.contains(vs[i]))
      throw Error(ErrorKind::BadParam, "vertex " + std::to_string(vs[i]) + " is not in R");
    for (std::size_t j = 0; j < i; ++j)
      if (vs[i] == vs[j]) throw Error(ErrorKind::BadParam, "vertices must be distinct");
    common &= d.out_nbrs(vs[i]);
  }
  return common;
}

std::int64_t lemma3_bound(const Digraph& d, const VertexSet& r, std::size_t delta,
                          const std::vector<Vertex>& vs) {
  auto bound = static_cast<std::int64_t>(delta + vs.size() - 1);
  for (Vertex x : vs) bound -= static_cast<std::int64_t>(d.restricted_out_deg(x, r));
  return bound;
}

Lemma3Report check_lemma3(const Digraph& d, Vertex v) {
  Lemma3Report rep;
  rep.v = v;
  rep.delta = d.min_out_deg();
  rep.second_out_deg = d.second_out_deg(v);
  if (d.out_deg(v) != rep.delta)
    throw Error(ErrorKind::HypothesisViolated,
                "vertex " + std::to_string(v) + " does not have minimum out-degree");
  if (rep.delta == 0 || rep.second_out_deg > rep.delta - 1)
    throw Error(ErrorKind::HypothesisViolated,
                "second out-degree of " + std::to_string(v) + " is not below the minimum out-degree");

  const VertexSet& r = d.out_nbrs(v);
  const std::vector<Vertex> members = r.to_vector();
  auto check = [&](std::vector<Vertex> vs) {
    const std::size_t common = common_out_nbrs_outside(d, r, vs).size();
    const std::int64_t bound = lemma3_bound(d, r, rep.delta, vs);
    if (static_cast<std::int64_t>(common) < bound)
      rep.violations.push_back({std::move(vs), common, bound});
  };
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      check({members[i], members[j]});
      ++rep.pairs_checked;
      for (std::size_t l = j + 1; l < members.size(); ++l) {
        check({members[i], members[j], members[l]});
        ++rep.triples_checked;
      }
    }
  return rep;
}

}  // namespace ssnc
