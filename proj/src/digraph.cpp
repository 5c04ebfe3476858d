#include "ssnc/digraph.hpp"

#include <deque>
#include <limits>
#include <string>

#include "ssnc/errors.hpp"

namespace ssnc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::TwoCycle: return "TwoCycle";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Digraph Digraph::build(std::size_t n, std::span<const Arc> arcs) {
  if (n > kMaxVertices)
    throw Error(ErrorKind::Unsupported, "vertex count " + std::to_string(n) +
                                            " exceeds cap " + std::to_string(kMaxVertices));
  Digraph d;
  d.n_ = n;
  d.out_.assign(n, VertexSet(n));
  d.in_.assign(n, VertexSet(n));
  for (const Arc& a : arcs) {
    if (a.from >= n || a.to >= n)
      throw Error(ErrorKind::OutOfRange, "arc (" + std::to_string(a.from) + "," +
                                             std::to_string(a.to) + ") has an endpoint outside 0.." +
                                             std::to_string(n));
    if (a.from == a.to)
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a.from));
    if (d.out_[a.to].contains(a.from))
      throw Error(ErrorKind::TwoCycle, "arcs (" + std::to_string(a.from) + "," +
                                           std::to_string(a.to) + ") and (" +
                                           std::to_string(a.to) + "," +
                                           std::to_string(a.from) + ") form a 2-cycle");
    if (d.out_[a.from].contains(a.to)) continue;
    d.out_[a.from].insert(a.to);
    d.in_[a.to].insert(a.from);
    ++d.m_;
  }
  return d;
}

void Digraph::check_vertex(Vertex v) const {
  if (v >= n_)
    throw Error(ErrorKind::OutOfRange,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_));
}

const VertexSet& Digraph::out_nbrs(Vertex v) const {
  check_vertex(v);
  return out_[v];
}

const VertexSet& Digraph::in_nbrs(Vertex v) const {
  check_vertex(v);
  return in_[v];
}

VertexSet Digraph::second_out_nbrs(Vertex v) const {
  check_vertex(v);
  VertexSet reach(n_);
  for (Vertex u : out_[v]) reach |= out_[u];
  reach -= out_[v];
  reach.erase(v);
  return reach;
}

std::pair<Vertex, std::size_t> Digraph::min_out_deg_vertex() const {
  if (n_ == 0) throw Error(ErrorKind::EmptyGraph, "digraph has no vertices");
  Vertex best = 0;
  std::size_t best_deg = out_[0].size();
  for (Vertex v = 1; v < n_; ++v) {
    const std::size_t d = out_[v].size();
    if (d < best_deg) {
      best = v;
      best_deg = d;
    }
  }
  return {best, best_deg};
}

std::size_t Digraph::min_in_deg() const {
  if (n_ == 0) throw Error(ErrorKind::EmptyGraph, "digraph has no vertices");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, in_[v].size());
  return best;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : out_[u]) out.push_back({u, v});
  return out;
}

InducedSubgraph induced(const Digraph& d, const VertexSet& s) {
  InducedSubgraph result;
  result.to_induced.assign(d.order(), std::nullopt);
  for (Vertex v : s) {
    result.to_induced[v] = result.to_original.size();
    result.to_original.push_back(v);
  }
  std::vector<Arc> arcs;
  for (Vertex u : s)
    for (Vertex v : d.out_nbrs(u) & s) arcs.push_back({*result.to_induced[u], *result.to_induced[v]});
  result.graph = Digraph::build(result.to_original.size(), arcs);
  return result;
}

namespace {

std::vector<std::optional<std::size_t>> bfs(const Digraph& d, Vertex source, bool reverse) {
  std::vector<std::optional<std::size_t>> dist(d.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : reverse ? d.in_nbrs(u) : d.out_nbrs(u)) {
      if (dist[w]) continue;
      dist[w] = *dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

std::vector<std::optional<std::size_t>> distances_from(const Digraph& d, Vertex source) {
  d.out_nbrs(source);  // range check
  return bfs(d, source, false);
}

std::vector<std::optional<std::size_t>> distances_to(const Digraph& d, Vertex target) {
  d.in_nbrs(target);
  return bfs(d, target, true);
}

std::optional<std::size_t> distance(const Digraph& d, Vertex u, Vertex v) {
  d.out_nbrs(v);
  return distances_from(d, u)[v];
}

DistanceTable::DistanceTable(const Digraph& d)
    : n_(d.order()), table_(d.order() * d.order(), kUnreachable) {
  for (Vertex u = 0; u < n_; ++u) {
    const auto row = bfs(d, u, false);
    for (Vertex v = 0; v < n_; ++v)
      if (row[v]) table_[u * n_ + v] = *row[v];
  }
}

bool is_valid_path(const Digraph& d, const Path& p) {
  if (p.vertices.empty()) return false;
  VertexSet seen(d.order());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex v = p.vertices[i];
    if (v >= d.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !d.has_arc(p.vertices[i - 1], v)) return false;
  }
  return true;
}

}  // namespace ssnc
