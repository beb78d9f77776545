#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tl3d/trees.hpp"

namespace tl3d {

enum class Move { leaf_removal, fold, meld };

std::string to_string(Move m);

// A downward move certificate: applying `move` to `upper` yields `lower`.
struct CoverRelation {
  RootedTree lower;
  RootedTree upper;
  Move move;
};

struct HasseDiagram {
  std::vector<RootedTree> nodes;
  std::vector<std::pair<int, int>> covers;  // (lower index, upper index)
};

// One-step results, canonicalised, deduplicated, sorted by compare().
// fold rewrites (t1(t2)) -> (t1)t2 at any matching vertex; meld rewrites
// (t1)(t2) -> (t1 t2) on any sibling pair; leaf removal deletes one leaf.
std::vector<RootedTree> fold_moves(const RootedTree& t);
std::vector<RootedTree> meld_moves(const RootedTree& t);
std::vector<RootedTree> leaf_removals(const RootedTree& t);

// Union of the three move lists.
std::vector<RootedTree> one_step_down(const RootedTree& t);

// Covers of `upper`, one entry per distinct lower tree; when several move
// kinds produce the same tree the label records the first of
// leaf_removal, fold, meld.
std::vector<CoverRelation> cover_relations(const RootedTree& upper);

// a reachable from b by any sequence of the three downward moves
// (reflexively).  BFS with per-call memoisation on canonical forms.
bool subfold_leq(const RootedTree& a, const RootedTree& b);

// Nodes: all trees with at most max_loops loops, sorted by compare().
// Every move drops the loop count by exactly one, so the one-move relation
// is its own transitive reduction.
HasseDiagram hasse(int max_loops);

std::string to_dot(const HasseDiagram& h);

enum class SearchOutcome { no, yes, inconclusive };

// Decides whether the identity on `a` factors through `b` (i.e. b >=_p a):
// searches pairs X in hom(a,b), Y in hom(b,a), both full on a, for a
// composite whose connectivity is the identity of a; the k^g q^b scalar is
// a unit once k is specialised to 1.  Examines at most max_check pairs and
// never reports `no` from an exhausted bound.
SearchOutcome propagating_leq(const RootedTree& a, const RootedTree& b,
                              long max_check);

}  // namespace tl3d
