#pragma once

// Closed-form neighborhood queries on labeled full binary trees B(2^x, a)
// and half-full trees HT([a,b]).
//
// B(2^x) carries the labeling: a node v at height h with in-level index v~
// gets label v~ if h = 0, else 2^(h-1) - 1 + v~ * 2^h. Leaf labels cover
// [0, 2^x - 1] once; non-leaf labels cover [0, 2^x - 2] once, so "leaf y"
// and "non-leaf y" are unambiguous. HT([a,b]) splices full trees so leaf
// labels enumerate [a,b] and non-leaf labels enumerate [a,b-1].
//
// Everything here is pure integer arithmetic in O(log) space; safe for
// inputs up to 2^63.

#include <cstdint>
#include <optional>

#include "cmp/types.hpp"

namespace cmp::hft {

struct Interval {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t size() const { return b - a + 1; }
};

// y+1 = 2^i * (2z + 1), unique.
struct Decomposition {
  std::uint32_t i = 0;
  std::uint64_t z = 0;
};

enum class TreeKind : std::uint8_t { Leaf, NonLeaf };

struct TreeRef {
  TreeKind kind = TreeKind::Leaf;
  std::uint64_t label = 0;
  bool operator==(const TreeRef&) const = default;
};

// Result of search_bt / search_ht: the parent of leaf y, plus (when non-leaf
// y exists in the tree) the parent and children of non-leaf y.
struct Neighborhood {
  std::uint64_t query = 0;
  std::optional<TreeRef> leaf_parent;     // absent only for a singleton tree
  std::optional<TreeRef> nonleaf_parent;  // absent when y is the root
  std::optional<TreeRef> nonleaf_left;
  std::optional<TreeRef> nonleaf_right;
  bool has_nonleaf() const { return nonleaf_left.has_value(); }
  bool operator==(const Neighborhood&) const = default;
};

// Projection of search_ht(k, 0, delta-1) onto child indices, as consumed by
// the Will protocol. Kinds are recoverable: the children of non-leaf k are
// leaves iff left index == k.
struct SubWillIdx {
  std::uint32_t child_index = 0;
  std::optional<std::uint32_t> leaf_parent_idx;  // absent only when delta == 1
  std::optional<std::uint32_t> nonleaf_parent_idx;
  std::optional<std::uint32_t> nonleaf_left_idx;
  std::optional<std::uint32_t> nonleaf_right_idx;
  bool left_is_leaf = false;
  std::uint32_t dependency_max = 0;  // max referenced index, at least child_index
  bool operator==(const SubWillIdx&) const = default;
};

Decomposition decompose(std::uint64_t y);

// Label of the node at height h, in-level index v_tilde, in B(2^x).
std::uint64_t label_bt(std::uint32_t h, std::uint64_t v_tilde, std::uint32_t x);

// Neighborhood of y in B(2^x, a). Requires y - a in [0, 2^x - 1].
Neighborhood search_bt(std::uint64_t y, std::uint32_t x, std::uint64_t a = 0);

// Root label of HT([a,b]).
std::uint64_t ht_root(Interval s);

// Neighborhood of y in HT([a,b]). Requires y in [a,b]. If depth_probe is
// given, receives the number of interval descents taken (space instrument).
Neighborhood search_ht(std::uint64_t y, std::uint64_t a, std::uint64_t b,
                       std::uint32_t* depth_probe = nullptr);

SubWillIdx subwill_indices(std::uint32_t k, std::uint32_t delta);

// Number of subwills that reference child j's ID, counted with multiplicity.
// Used by the Will protocol to free slots as soon as the last use happens.
std::uint32_t will_uses(std::uint32_t j, std::uint32_t delta);

}  // namespace cmp::hft
