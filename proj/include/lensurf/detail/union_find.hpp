#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace lensurf::detail {

// Disjoint sets with an optional Z/2 label on each element relative to its
// root. `unite(a, b, parity)` records label(a) ^ label(b) == parity; a
// contradicting record marks the merged set as inconsistent.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0), bad_(n, false) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t size() const { return parent_.size(); }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    unsigned acc = 0;
    while (parent_[root] != root) {
      acc ^= parity_[root];
      root = parent_[root];
    }
    // Path compression, keeping parities relative to the new parent.
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      unsigned next_acc = acc ^ parity_[x];
      parent_[x] = root;
      parity_[x] = static_cast<unsigned char>(acc);
      x = next;
      acc = next_acc;
    }
    return root;
  }

  unsigned parity_to_root(std::size_t x) {
    find(x);
    return parent_[x] == x ? 0u : parity_[x];
  }

  bool unite(std::size_t a, std::size_t b, unsigned parity = 0) {
    std::size_t ra = find(a);
    std::size_t rb = find(b);
    unsigned pa = parity_to_root(a);
    unsigned pb = parity_to_root(b);
    if (ra == rb) {
      if ((pa ^ pb) != (parity & 1u)) bad_[ra] = true;
      return false;
    }
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = static_cast<unsigned char>(pa ^ pb ^ (parity & 1u));
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    bad_[ra] = bad_[ra] || bad_[rb];
    return true;
  }

  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

  // True when the labels recorded for the set containing x contradict.
  bool inconsistent(std::size_t x) { return bad_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> parity_;
  std::vector<unsigned char> rank_;
  std::vector<bool> bad_;
};

}  // namespace lensurf::detail
