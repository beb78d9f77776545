#pragma once

#include <vector>

#include "tl3d/partitions.hpp"
#include "tl3d/trees.hpp"

namespace tl3d {

// The two boundary trees with their roots identified: one graph whose
// edges are the loops of both sides.  Edge positions are the ground
// positions of the corresponding partitions: bottom loops first, then top.
class JoinedTree {
public:
  JoinedTree(RootedTree bottom, RootedTree top);

  const RootedTree& bottom() const noexcept { return bottom_; }
  const RootedTree& top() const noexcept { return top_; }
  int bottom_loops() const noexcept { return nb_; }
  int edge_count() const noexcept { return static_cast<int>(parent_.size()); }
  int parent(int pos) const { return parent_[pos]; }  // -1 at the root

  // Edges strictly between e1 and e2 on the unique connecting path:
  // the symmetric difference of the two root paths minus the endpoints.
  std::vector<int> chain(int e1, int e2) const;

private:
  RootedTree bottom_, top_;
  int nb_;
  std::vector<int> parent_;
  std::vector<int> depth_;
};

// Chain condition: for every pair of same-block edges e, e' either some
// other edge of the same block lies in chain(e,e'), or every block
// represented in chain(e,e') appears there an even number of times.
bool is_admissible(const JoinedTree& j, const SetPartition& p);

// A hom-set basis element: an admissible partition of the loops of the
// source (bottom) and target (top) trees.  Connectivity is the whole datum;
// no geometric or scalar data is stored.
struct Diagram {
  // Validates ground shape and admissibility.
  Diagram(RootedTree source, RootedTree target, SetPartition partition);

  RootedTree source;
  RootedTree target;
  SetPartition partition;

  int propagating_number() const { return partition.propagating_number(); }
  std::string to_string() const;
};

bool operator==(const Diagram& a, const Diagram& b);
int compare(const Diagram& a, const Diagram& b);  // source, target, partition

struct DiagramLess {
  bool operator()(const Diagram& a, const Diagram& b) const {
    return compare(a, b) < 0;
  }
};

// All admissible partitions of the joined loop set, sorted by lex_compare.
// Generated by incremental block assignment; each pair's chain condition is
// checked at the first step where its outcome is decided, pruning the
// branch on failure.
std::vector<Diagram> enumerate_homs(const RootedTree& F, const RootedTree& Fp);

Diagram identity(const RootedTree& F);

// Blocks {{i-, sigma(i)+}}; sigma must lie in automorphisms(F).
Diagram permutation_diagram(const RootedTree& F, const EdgePermutation& sigma);

// Swap source/target and the +/- tags; involution.
Diagram flip(const Diagram& d);

// The tree of loops cut by a middle cross-section: one node per
// propagating block, nested below the block owning the nearest propagating
// ancestor of its outermost source loop.
RootedTree propagating_config(const Diagram& d);

}  // namespace tl3d
