#include "ssnc/vertex_set.hpp"

#include <string>

#include "ssnc/errors.hpp"

namespace ssnc {

VertexSet::VertexSet(std::size_t universe) : n_(universe) {
  if (universe > kMaxVertices)
    throw Error(ErrorKind::Unsupported,
                "vertex count " + std::to_string(universe) + " exceeds cap " +
                    std::to_string(kMaxVertices));
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  const std::size_t words = s.active_words();
  for (std::size_t w = 0; w < words; ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0) s.words_[words - 1] = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

VertexSet VertexSet::from(std::size_t universe, const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= n_)
    throw Error(ErrorKind::OutOfRange,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_));
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < n_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::optional<Vertex> VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < active_words(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return std::nullopt;
}

std::optional<Vertex> VertexSet::next_after(Vertex v) const noexcept {
  std::size_t pos = v + 1;
  if (pos >= n_) return std::nullopt;
  std::size_t w = pos >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (pos & 63));
  while (true) {
    if (word != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
    if (++w >= active_words()) return std::nullopt;
    word = words_[w];
  }
}

VertexSet VertexSet::complement() const { return full(n_) - *this; }

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

}  // namespace ssnc
