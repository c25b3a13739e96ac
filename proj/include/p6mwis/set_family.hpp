#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace p6mwis {

using SetHash = std::unordered_set<VertexSet, VertexSetHash>;

/// Deduplicated collection of vertex sets in insertion order. Each member
/// remembers the tag of its first producer.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::initializer_list<VertexSet> sets) {
    for (const auto& s : sets) insert(s);
  }

  /// Returns true if the set was new.
  bool insert(const VertexSet& s, const std::string& tag = {}) {
    auto [it, fresh] = index_.emplace(s, members_.size());
    if (!fresh) return false;
    members_.push_back(s);
    tags_.push_back(tag);
    return true;
  }
  void insert_all(const SetFamily& o) {
    for (std::size_t i = 0; i < o.size(); ++i) insert(o.members_[i], o.tags_[i]);
  }
  template <class Range>
  void insert_range(const Range& r, const std::string& tag = {}) {
    for (const auto& s : r) insert(s, tag);
  }

  bool contains(const VertexSet& s) const { return index_.count(s) > 0; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const VertexSet& operator[](std::size_t i) const { return members_[i]; }
  const std::string& tag(std::size_t i) const { return tags_[i]; }
  const std::string& tag_of(const VertexSet& s) const { return tags_[index_.at(s)]; }
  const std::vector<VertexSet>& members() const& { return members_; }
  std::vector<VertexSet> members() && { return std::move(members_); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Members in canonical order.
  std::vector<VertexSet> sorted() const {
    std::vector<VertexSet> v = members_;
    std::sort(v.begin(), v.end());
    return v;
  }

  /// Member counts per tag.
  std::unordered_map<std::string, std::size_t> tag_counts() const {
    std::unordered_map<std::string, std::size_t> c;
    for (const auto& t : tags_) ++c[t];
    return c;
  }

 private:
  std::vector<VertexSet> members_;
  std::vector<std::string> tags_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_;
};

}  // namespace p6mwis
