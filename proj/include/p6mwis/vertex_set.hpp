#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace p6mwis {

using Vertex = int;

/// Largest number of vertices a graph may have.
inline constexpr int kMaxVertices = 256;

/// Fixed-width bitset over vertex ids 0..kMaxVertices-1.
///
/// Equality, hashing and ordering depend only on the members.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static VertexSet single(Vertex v) {
    VertexSet s;
    s.insert(v);
    return s;
  }
  /// The set {0, ..., n-1}.
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~0ULL : ((1ULL << n) - 1);
    return s;
  }
  template <class It>
  static VertexSet from(It first, It last) {
    VertexSet s;
    for (; first != last; ++first) s.insert(*first);
    return s;
  }
  static VertexSet from(const std::vector<Vertex>& vs) { return from(vs.begin(), vs.end()); }

  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1ULL; }
  void insert(Vertex v) { words_[v >> 6] |= 1ULL << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  /// Lowest member, or -1 when empty.
  Vertex front() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }
  /// Lowest member greater than v, or -1.
  Vertex next(Vertex v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    int w = v >> 6;
    std::uint64_t cur = words_[w] & (~0ULL << (v & 63));
    while (true) {
      if (cur) return w * 64 + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = words_[w];
    }
  }

  bool subset_of(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.words_ == b.words_; }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

  /// Canonical order: compares ascending member lists lexicographically,
  /// with a proper prefix ordered first.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t d = a.words_[w] ^ b.words_[w];
      if (!d) continue;
      std::uint64_t low = d & (~d + 1);
      // The set owning the lowest differing bit has the smaller element there,
      // unless the other set has no more members at or beyond that point.
      bool a_has = a.words_[w] & low;
      const VertexSet& other = a_has ? b : a;
      bool other_rest = (other.words_[w] & ~(low - 1) & ~low) != 0;
      for (int x = w + 1; x < kWords && !other_rest; ++x) other_rest = other.words_[x] != 0;
      if (!other_rest) return !a_has;
      return a_has;
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (Vertex v : *this) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const VertexSet* s, Vertex v) : s_(s), v_(v) {}
    Vertex operator*() const { return v_; }
    iterator& operator++() {
      v_ = s_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator& o) const { return v_ == o.v_; }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }

   private:
    const VertexSet* s_ = nullptr;
    Vertex v_ = -1;
  };
  iterator begin() const { return iterator(this, front()); }
  iterator end() const { return iterator(this, -1); }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Calls f(subset) for every subset of `base` with at most `k` members,
/// including the empty set. Subsets are produced in a fixed order.
template <class F>
void for_each_subset_up_to(const VertexSet& base, int k, F&& f) {
  std::vector<Vertex> elems = base.to_vector();
  VertexSet cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    f(static_cast<const VertexSet&>(cur));
    if (left == 0) return;
    for (std::size_t i = start; i < elems.size(); ++i) {
      cur.insert(elems[i]);
      rec(i + 1, left - 1);
      cur.erase(elems[i]);
    }
  };
  rec(0, k);
}

}  // namespace p6mwis

template <>
struct std::hash<p6mwis::VertexSet> {
  std::size_t operator()(const p6mwis::VertexSet& s) const { return s.hash(); }
};
