#include "cmp/hft.hpp"

#include <bit>

namespace cmp::hft {

namespace {

bool is_pow2(std::uint64_t v) { return v != 0 && std::has_single_bit(v); }

// floor(log2(v)), v >= 1
std::uint32_t ilog2(std::uint64_t v) { return 63u - std::countl_zero(v); }

}  // namespace

Decomposition decompose(std::uint64_t y) {
  std::uint64_t n = y + 1;  // y <= 2^63 keeps this from wrapping
  Decomposition d;
  d.i = std::countr_zero(n);
  d.z = (n >> (d.i + 1));  // (n >> i - 1) / 2
  return d;
}

std::uint64_t label_bt(std::uint32_t h, std::uint64_t v_tilde, std::uint32_t x) {
  if (h > x || x > 63) throw SimError("label_bt: height out of range");
  if (v_tilde >= (std::uint64_t{1} << (x - h)))
    throw SimError("label_bt: in-level index out of range");
  if (h == 0) return v_tilde;
  return (std::uint64_t{1} << (h - 1)) - 1 + (v_tilde << h);
}

Neighborhood search_bt(std::uint64_t y, std::uint32_t x, std::uint64_t a) {
  if (x == 0 || x > 63) throw SimError("search_bt: x out of range");
  if (y < a || y - a > (std::uint64_t{1} << x) - 1)
    throw SimError("search_bt: label outside tree");
  const std::uint64_t yp = y - a;
  const std::uint64_t top = (std::uint64_t{1} << x) - 1;

  Neighborhood nb;
  nb.query = y;
  nb.leaf_parent = TreeRef{TreeKind::NonLeaf, a + 2 * (yp / 2)};

  if (yp == top) return nb;  // no non-leaf carries label 2^x - 1

  const auto [i, z] = decompose(yp);
  if (i <= x - 2) {
    // parent = 2^(i+1) - 1 + floor(z/2) * 2^(i+2)
    nb.nonleaf_parent = TreeRef{
        TreeKind::NonLeaf,
        a + (std::uint64_t{1} << (i + 1)) - 1 + ((z / 2) << (i + 2))};
  }
  if (i >= 1) {
    const std::uint64_t base = (std::uint64_t{1} << (i - 1)) - 1;
    nb.nonleaf_left = TreeRef{TreeKind::NonLeaf, a + base + ((2 * z) << i)};
    nb.nonleaf_right = TreeRef{TreeKind::NonLeaf, a + base + ((2 * z + 1) << i)};
  } else {
    nb.nonleaf_left = TreeRef{TreeKind::Leaf, a + yp};
    nb.nonleaf_right = TreeRef{TreeKind::Leaf, a + yp + 1};
  }
  return nb;
}

std::uint64_t ht_root(Interval s) {
  const std::uint64_t size = s.size();
  if (size == 1) return s.a;
  if (is_pow2(size)) return s.a + size / 2 - 1;
  // largest power of two strictly smaller than size
  return s.a + (std::uint64_t{1} << ilog2(size)) - 1;
}

Neighborhood search_ht(std::uint64_t y, std::uint64_t a, std::uint64_t b,
                       std::uint32_t* depth_probe) {
  if (y < a || y > b) throw SimError("search_ht: label outside interval");
  std::uint32_t depth = 0;
  // Parent of the current sub-HT's root in the enclosing tree, if any.
  std::optional<TreeRef> pending_parent;

  for (;;) {
    ++depth;
    const std::uint64_t size = b - a + 1;

    if (size == 1) {
      Neighborhood nb;
      nb.query = y;
      nb.leaf_parent = pending_parent;
      if (depth_probe) *depth_probe = depth;
      return nb;
    }

    if (is_pow2(size)) {
      const std::uint32_t x1 = ilog2(size);
      Neighborhood nb = search_bt(y, x1, a);
      if (y == a + size / 2 - 1 && pending_parent)
        nb.nonleaf_parent = pending_parent;
      if (depth_probe) *depth_probe = depth;
      return nb;
    }

    const std::uint32_t x = ilog2(size);  // 2^x < size < 2^(x+1)
    const std::uint64_t mid = a + (std::uint64_t{1} << x);
    const std::uint64_t root = mid - 1;

    if (y < mid) {
      // y lives in the surviving left part (or is the root) of B(2^(x+1), a).
      Neighborhood nb = search_bt(y, x + 1, a);
      if (y == root) {
        if (pending_parent) nb.nonleaf_parent = pending_parent;
        // The root's right subtree was replaced by HT([mid, b]).
        nb.nonleaf_right =
            mid == b ? TreeRef{TreeKind::Leaf, b}
                     : TreeRef{TreeKind::NonLeaf, ht_root({mid, b})};
      }
      if (depth_probe) *depth_probe = depth;
      return nb;
    }

    pending_parent = TreeRef{TreeKind::NonLeaf, root};
    a = mid;
  }
}

SubWillIdx subwill_indices(std::uint32_t k, std::uint32_t delta) {
  if (delta == 0 || k >= delta) throw SimError("subwill_indices: index out of range");
  const Neighborhood nb = search_ht(k, 0, delta - 1);
  SubWillIdx s;
  s.child_index = k;
  s.dependency_max = k;
  auto put = [&s](const std::optional<TreeRef>& r, std::optional<std::uint32_t>& out) {
    if (!r) return;
    out = static_cast<std::uint32_t>(r->label);
    if (*out > s.dependency_max) s.dependency_max = *out;
  };
  put(nb.leaf_parent, s.leaf_parent_idx);
  put(nb.nonleaf_parent, s.nonleaf_parent_idx);
  put(nb.nonleaf_left, s.nonleaf_left_idx);
  put(nb.nonleaf_right, s.nonleaf_right_idx);
  if (nb.nonleaf_left) s.left_is_leaf = nb.nonleaf_left->kind == TreeKind::Leaf;
  return s;
}

std::uint32_t will_uses(std::uint32_t j, std::uint32_t delta) {
  // Only subwills of j's HT neighbors can reference j: the leaves it parents
  // (j-1, j, j+1 cover both layouts), its parent and its non-leaf children.
  std::uint64_t cand[6];
  std::size_t nc = 0;
  if (j > 0) cand[nc++] = j - 1;
  cand[nc++] = j;
  cand[nc++] = std::uint64_t{j} + 1;
  if (j + 1 <= delta - 1) {  // non-leaf j exists
    const Neighborhood nb = search_ht(j, 0, delta - 1);
    if (nb.nonleaf_parent) cand[nc++] = nb.nonleaf_parent->label;
    if (nb.nonleaf_left && nb.nonleaf_left->kind == TreeKind::NonLeaf) {
      cand[nc++] = nb.nonleaf_left->label;
      cand[nc++] = nb.nonleaf_right->label;
    }
  }
  std::uint32_t uses = 0;
  for (std::size_t c = 0; c < nc; ++c) {
    if (cand[c] > delta - 1) continue;
    bool seen_before = false;
    for (std::size_t p = 0; p < c; ++p)
      if (cand[p] == cand[c]) seen_before = true;
    if (seen_before) continue;
    const SubWillIdx s = subwill_indices(static_cast<std::uint32_t>(cand[c]), delta);
    if (s.leaf_parent_idx == j) ++uses;
    if (s.nonleaf_parent_idx == j) ++uses;
    if (s.nonleaf_left_idx == j) ++uses;
    if (s.nonleaf_right_idx == j) ++uses;
  }
  return uses;
}

}  // namespace cmp::hft
