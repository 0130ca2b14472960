#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace twsep {

using Vertex = std::uint32_t;

// Sorted, duplicate-free set of vertex ids. Comparison is lexicographic on
// the sorted member list, which is the tie-break order used throughout.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  // {0, ..., n-1}
  static VertexSet range(std::size_t n);

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  Vertex front() const { return members_.front(); }
  Vertex back() const { return members_.back(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& sub, const VertexSet& super);
std::size_t intersection_size(const VertexSet& a, const VertexSet& b);

}  // namespace twsep
