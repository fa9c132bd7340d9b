#pragma once

// Explicit half-full tree, built literally from the recursive definition:
// HT(S) is B(|S|, a) when |S| is a power of two, else B(2^(x+1), a) with the
// root's right subtree replaced by HT([a + 2^x, b]). Memory-unrestricted;
// used as the verification oracle for the closed-form queries and for
// reconstruction-tree shape checks.

#include <cstdint>
#include <memory>
#include <vector>

#include "cmp/hft.hpp"

namespace cmp::hft {

struct HTOracle {
  struct Node {
    std::uint64_t label = 0;
    bool leaf = false;
    int parent = -1;
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  // Position of leaf y / non-leaf y, or -1.
  int find(std::uint64_t label, bool leaf) const;
  Neighborhood neighborhood(std::uint64_t y) const;
  std::uint32_t height() const;
  std::size_t leaf_count() const;
  std::size_t nonleaf_count() const;
};

HTOracle build_ht_oracle(Interval s);

}  // namespace cmp::hft
