#ifndef SSNC_VERTEX_SET_HPP
#define SSNC_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

#ifndef SSNC_MAX_VERTICES
#define SSNC_MAX_VERTICES 1024
#endif

namespace ssnc {

using Vertex = std::size_t;

inline constexpr std::size_t kMaxVertices = SSNC_MAX_VERTICES;
static_assert(kMaxVertices % 64 == 0, "vertex cap must be a multiple of 64");

/**
 * Subset of {0, ..., n-1} stored as a fixed-stride bit mask.
 *
 * Only the first words_for(n) words are ever touched, so small universes pay
 * for one or two words regardless of the compile-time cap. Bits at positions
 * >= n are never set. Binary operators require equal universes.
 */
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from(std::size_t universe, const std::vector<Vertex>& members);

  std::size_t universe() const noexcept { return n_; }

  bool contains(Vertex v) const noexcept {
    return v < n_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (std::size_t w = 0; w < active_words(); ++w) c += std::popcount(words_[w]);
    return c;
  }
  bool empty() const noexcept {
    for (std::size_t w = 0; w < active_words(); ++w)
      if (words_[w] != 0) return false;
    return true;
  }

  /// Smallest member, if any.
  std::optional<Vertex> first() const noexcept;
  /// Smallest member strictly greater than v.
  std::optional<Vertex> next_after(Vertex v) const noexcept;

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < active_words(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < active_words(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < active_words(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

  /// Complement relative to the universe.
  VertexSet complement() const;

  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t w = 0; w < active_words(); ++w)
      if ((words_[w] & o.words_[w]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t w = 0; w < active_words(); ++w)
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    return true;
  }
  std::size_t intersection_size(const VertexSet& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t w = 0; w < active_words(); ++w) c += std::popcount(words_[w] & o.words_[w]);
    return c;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (std::size_t w = 0; w < a.active_words(); ++w)
      if (a.words_[w] != b.words_[w]) return false;
    return true;
  }

  std::vector<Vertex> to_vector() const;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    Vertex operator*() const noexcept { return pos_; }
    const_iterator& operator++() noexcept;
    const_iterator operator++(int) noexcept {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) noexcept {
      return a.pos_ == b.pos_;
    }

   private:
    friend class VertexSet;
    const_iterator(const VertexSet* set, Vertex pos) : set_(set), pos_(pos) {}
    const VertexSet* set_ = nullptr;
    Vertex pos_ = 0;
  };

  const_iterator begin() const noexcept { return {this, first().value_or(n_)}; }
  const_iterator end() const noexcept { return {this, n_}; }

 private:
  std::size_t active_words() const noexcept { return (n_ + 63) >> 6; }

  std::array<std::uint64_t, kWords> words_{};
  std::size_t n_ = 0;
};

inline VertexSet::const_iterator& VertexSet::const_iterator::operator++() noexcept {
  pos_ = set_->next_after(pos_).value_or(set_->n_);
  return *this;
}

}  // namespace ssnc

#endif  // SSNC_VERTEX_SET_HPP
