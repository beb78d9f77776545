#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tl3d/rational.hpp"

namespace tl3d {

// Balanced, properly nested sequence over the alphabet { '(', ')' }.
// Each matched pair denotes one loop (one tree edge).
class BracketSeq {
public:
  BracketSeq() = default;
  const std::string& str() const noexcept { return symbols_; }
  int pair_count() const noexcept {
    return static_cast<int>(symbols_.size() / 2);
  }
  friend bool operator==(const BracketSeq&, const BracketSeq&) = default;

private:
  explicit BracketSeq(std::string s) : symbols_(std::move(s)) {}
  friend BracketSeq parse(std::string_view);
  friend BracketSeq to_bracket(const class RootedTree&);
  std::string symbols_;
};

// Validates nesting and balance; throws ParseError naming the first
// offending 1-based position.
BracketSeq parse(std::string_view text);

// Rooted tree with unlabelled vertices, one per isotopy class of planar
// loop configurations.  Loops correspond to edges (loop count = vertex
// count minus the root).  Stored in left-light canonical order: children
// of every vertex sorted ascending by compare(), lighter subtrees first,
// so equal trees have identical representations.
class RootedTree {
public:
  RootedTree() = default;  // root only, zero loops
  explicit RootedTree(std::vector<RootedTree> children);

  int loops() const noexcept { return loops_; }
  const std::vector<RootedTree>& children() const noexcept {
    return children_;
  }

  // Depths of all vertices in canonical preorder, root first at depth 0.
  std::vector<int> depth_sequence() const;

  // "∅" for the root-only tree, canonical bracket string otherwise.
  std::string display() const;

private:
  std::vector<RootedTree> children_;
  int loops_ = 0;
};

// Total order: by loop count, then lexicographically on canonical depth
// sequences.  Matches the listing ∅ < () < ()() < (()) < ()()() < ...
// Returns <0, 0, >0.
int compare(const RootedTree& a, const RootedTree& b);

inline bool operator==(const RootedTree& a, const RootedTree& b) {
  return compare(a, b) == 0;
}
inline bool operator!=(const RootedTree& a, const RootedTree& b) {
  return compare(a, b) != 0;
}
inline bool operator<(const RootedTree& a, const RootedTree& b) {
  return compare(a, b) < 0;
}

RootedTree to_tree(const BracketSeq& b);
BracketSeq to_bracket(const RootedTree& t);

inline RootedTree tree_from_string(std::string_view text) {
  return to_tree(parse(text));
}

// All canonical rooted trees with exactly n loops, sorted by compare().
std::vector<RootedTree> enumerate_trees(int n);

// L_n by the Euler-product recurrence; exact, no enumeration.
BigInt count_trees(int n);

// Bijection on loop indices 1..n.
class EdgePermutation {
public:
  EdgePermutation() = default;
  static EdgePermutation identity(int n);
  // image[i-1] = sigma(i); validates bijectivity.
  explicit EdgePermutation(std::vector<int> image);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i - 1]; }
  const std::vector<int>& image() const noexcept { return image_; }
  bool is_identity() const;
  EdgePermutation inverse() const;
  // apply *this first, then next.
  EdgePermutation then(const EdgePermutation& next) const;
  // Cycle notation on moved points: "(3 4)"; "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const EdgePermutation&,
                         const EdgePermutation&) = default;
  friend bool operator<(const EdgePermutation& a, const EdgePermutation& b) {
    return a.image_ < b.image_;
  }

private:
  std::vector<int> image_;
};

// Canonical loop numbering: edges are numbered 1..n in preorder with the
// heavier sibling subtrees visited first.  For ()()(()) this numbers the
// nested pair 1,2 and the single loops 3,4.  parent(e) is the enclosing
// loop's number, 0 for loops attached directly to the root.
class TreeLayout {
public:
  explicit TreeLayout(const RootedTree& t);
  int loop_count() const noexcept { return static_cast<int>(parent_.size()); }
  int parent(int e) const { return parent_[e - 1]; }
  int depth(int e) const { return depth_[e - 1]; }

private:
  void build(const RootedTree& node, int parent_edge, int& next);
  std::vector<int> parent_;
  std::vector<int> depth_;
};

// The full group Sigma_F of loop permutations induced by automorphisms of
// the rooted tree, acting on canonical loop numbers; identity first,
// sorted by image.  Size is the product of m! over every multiset of m
// isomorphic sibling subtrees.
std::vector<EdgePermutation> automorphisms(const RootedTree& t);

// True iff sigma preserves the edge-parent structure of t.
bool is_automorphism(const RootedTree& t, const EdgePermutation& sigma);

}  // namespace tl3d
