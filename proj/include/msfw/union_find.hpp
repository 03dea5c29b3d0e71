#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace msfw {

// Disjoint-set forest with union by size and path compression.
class UnionFind {
 public:
  explicit UnionFind(std::int64_t n)
      : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1),
        components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::int64_t find(std::int64_t x) {
    std::int64_t root = x;
    while (parent_[static_cast<std::size_t>(root)] != root)
      root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(x)] != root) {
      std::int64_t next = parent_[static_cast<std::size_t>(x)];
      parent_[static_cast<std::size_t>(x)] = root;
      x = next;
    }
    return root;
  }

  // Returns true when x and y were in different sets.
  bool unite(std::int64_t x, std::int64_t y) {
    std::int64_t rx = find(x);
    std::int64_t ry = find(y);
    if (rx == ry) return false;
    if (size_[static_cast<std::size_t>(rx)] < size_[static_cast<std::size_t>(ry)])
      std::swap(rx, ry);
    parent_[static_cast<std::size_t>(ry)] = rx;
    size_[static_cast<std::size_t>(rx)] += size_[static_cast<std::size_t>(ry)];
    --components_;
    return true;
  }

  bool connected(std::int64_t x, std::int64_t y) { return find(x) == find(y); }

  std::int64_t componentSize(std::int64_t x) {
    return size_[static_cast<std::size_t>(find(x))];
  }

  std::int64_t componentCount() const { return components_; }

 private:
  std::vector<std::int64_t> parent_;
  std::vector<std::int64_t> size_;
  std::int64_t components_;
};

}  // namespace msfw
