#include "ssnc/properties.hpp"

#include <string>

#include "ssnc/errors.hpp"

namespace ssnc {

std::optional<std::size_t> girth(const Digraph& d) {
  std::optional<std::size_t> best;
  for (Vertex s = 0; s < d.order(); ++s) {
    if (d.in_nbrs(s).empty() || d.out_nbrs(s).empty()) continue;
    const auto dist = distances_from(d, s);
    for (Vertex x : d.in_nbrs(s)) {
      if (!dist[x]) continue;
      const std::size_t len = *dist[x] + 1;
      if (!best || len < *best) best = len;
    }
    if (best && *best == 3) break;  // oriented graphs have no shorter cycle
  }
  return best;
}

bool is_m_free(const Digraph& d, std::size_t m) {
  if (m < 1) throw Error(ErrorKind::BadParam, "m-freeness needs m >= 1");
  const auto g = girth(d);
  return !g || *g > m;
}

PathSearch::PathSearch(const Digraph& d)
    : d_(d), cache_(d.order()), on_path_(d.order()) {}

const PathSearch::DistRow& PathSearch::dist_to(Vertex target) {
  if (!cache_[target]) cache_[target] = distances_to(d_, target);
  return *cache_[target];
}

std::optional<Path> PathSearch::find(Vertex u, Vertex v, std::size_t k) {
  if (u >= d_.order() || v >= d_.order())
    throw Error(ErrorKind::OutOfRange, "path endpoint outside the vertex range");
  if (u == v) throw Error(ErrorKind::BadParam, "path endpoints must differ");
  if (k == 0) throw Error(ErrorKind::BadParam, "path length must be >= 1");
  if (k >= d_.order()) return std::nullopt;

  const DistRow& dist = dist_to(v);
  if (!dist[u] || *dist[u] > k) return std::nullopt;

  stack_.assign(1, u);
  on_path_ = VertexSet(d_.order());
  on_path_.insert(u);
  if (!extend(u, v, k, dist)) return std::nullopt;
  return Path{stack_};
}

bool PathSearch::extend(Vertex x, Vertex target, std::size_t remaining, const DistRow& dist) {
  if (remaining == 1) {
    if (!d_.has_arc(x, target)) return false;
    stack_.push_back(target);
    return true;
  }
  // Interior vertices still needed (excluding the target) must be available.
  if (remaining - 1 > d_.order() - stack_.size() - 1) return false;
  for (Vertex y : d_.out_nbrs(x) - on_path_) {
    if (y == target) continue;
    if (!dist[y] || *dist[y] > remaining - 1) continue;
    stack_.push_back(y);
    on_path_.insert(y);
    if (extend(y, target, remaining - 1, dist)) return true;
    on_path_.erase(y);
    stack_.pop_back();
  }
  return false;
}

std::optional<Path> path_of_length(const Digraph& d, Vertex u, Vertex v, std::size_t k) {
  PathSearch search(d);
  return search.find(u, v, k);
}

namespace {

void require_k(std::size_t k) {
  if (k < 2) throw Error(ErrorKind::BadParam, "k must be >= 2, got " + std::to_string(k));
}

}  // namespace

std::optional<PathWitness> anti_transitivity_witness(const Digraph& d, std::size_t k) {
  require_k(k);
  if (k >= d.order()) return std::nullopt;
  PathSearch search(d);
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex v : d.out_nbrs(u))
      if (auto p = search.find(u, v, k)) return PathWitness{u, v, std::move(*p)};
  return std::nullopt;
}

bool is_k_anti_transitive(const Digraph& d, std::size_t k) {
  return !anti_transitivity_witness(d, k);
}

std::optional<PathWitness> transitivity_witness(const Digraph& d, std::size_t k) {
  require_k(k);
  if (k >= d.order()) return std::nullopt;
  PathSearch search(d);
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex v = 0; v < d.order(); ++v) {
      if (u == v || d.has_arc(u, v)) continue;
      if (auto p = search.find(u, v, k)) return PathWitness{u, v, std::move(*p)};
    }
  return std::nullopt;
}

bool is_k_transitive(const Digraph& d, std::size_t k) { return !transitivity_witness(d, k); }

std::optional<PathWitness> quasi_transitivity_witness(const Digraph& d, std::size_t k) {
  require_k(k);
  if (k >= d.order()) return std::nullopt;
  PathSearch search(d);
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex v = 0; v < d.order(); ++v) {
      if (u == v || d.adjacent(u, v)) continue;
      if (auto p = search.find(u, v, k)) return PathWitness{u, v, std::move(*p)};
    }
  return std::nullopt;
}

bool is_k_quasi_transitive(const Digraph& d, std::size_t k) {
  return !quasi_transitivity_witness(d, k);
}

std::optional<std::array<Vertex, 3>> find_transitive_triangle(const Digraph& d) {
  for (Vertex x = 0; x < d.order(); ++x)
    for (Vertex y : d.out_nbrs(x)) {
      const VertexSet z = d.out_nbrs(y) & d.out_nbrs(x);
      if (auto first = z.first()) return std::array<Vertex, 3>{x, y, *first};
    }
  return std::nullopt;
}

ClassProfile profile(const Digraph& d, const std::vector<std::size_t>& k_range) {
  if (k_range.empty()) throw Error(ErrorKind::BadParam, "empty k range");
  for (std::size_t k : k_range) require_k(k);

  ClassProfile p;
  p.girth = girth(d);
  if (p.girth) p.max_m_free = *p.girth - 1;
  for (std::size_t k : k_range) {
    KVerdict verdict;
    verdict.k = k;
    verdict.anti_transitive_violation = anti_transitivity_witness(d, k);
    verdict.transitive_violation = transitivity_witness(d, k);
    verdict.quasi_transitive_violation = quasi_transitivity_witness(d, k);
    p.by_k.push_back(std::move(verdict));
  }
  p.transitive_triangle = find_transitive_triangle(d);
  p.transitive_triangle_free = !p.transitive_triangle;
  return p;
}

}  // namespace ssnc
