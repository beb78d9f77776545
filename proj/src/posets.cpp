#include "tl3d/posets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tl3d/algebra.hpp"
#include "tl3d/diagrams.hpp"
#include "tl3d/errors.hpp"

namespace tl3d {

std::string to_string(Move m) {
  switch (m) {
    case Move::leaf_removal: return "leaf_removal";
    case Move::fold: return "fold";
    case Move::meld: return "meld";
  }
  return "?";
}

namespace {

struct TreeLess {
  bool operator()(const RootedTree& a, const RootedTree& b) const {
    return compare(a, b) < 0;
  }
};

using TreeSet = std::set<RootedTree, TreeLess>;

std::vector<RootedTree> without(const std::vector<RootedTree>& v,
                                std::size_t skip) {
  std::vector<RootedTree> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != skip) out.push_back(v[i]);
  }
  return out;
}

std::vector<RootedTree> replaced(const std::vector<RootedTree>& v,
                                 std::size_t at, RootedTree value) {
  std::vector<RootedTree> out = v;
  out[at] = std::move(value);
  return out;
}

// All one-fold results inside the subtree `node` (folds may export the
// moved forest to node's child list, so results are child lists for node).
void fold_inside(const RootedTree& node, TreeSet& out);

std::vector<std::vector<RootedTree>> fold_child_lists(const RootedTree& node) {
  const auto& kids = node.children();
  std::vector<std::vector<RootedTree>> lists;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const RootedTree& v = kids[i];
    // v is the rewritten vertex: one of its children dissolves and its
    // content re-attaches beside v.
    for (std::size_t k = 0; k < v.children().size(); ++k) {
      const RootedTree& c = v.children()[k];
      std::vector<RootedTree> new_kids = without(kids, i);
      new_kids.push_back(RootedTree(without(v.children(), k)));
      for (const RootedTree& grand : c.children()) new_kids.push_back(grand);
      lists.push_back(std::move(new_kids));
    }
    // folds strictly inside v
    TreeSet deeper;
    fold_inside(v, deeper);
    for (const RootedTree& r : deeper) {
      lists.push_back(replaced(kids, i, r));
    }
  }
  return lists;
}

void fold_inside(const RootedTree& node, TreeSet& out) {
  for (auto& list : fold_child_lists(node)) {
    out.insert(RootedTree(std::move(list)));
  }
}

void meld_inside(const RootedTree& node, TreeSet& out) {
  const auto& kids = node.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    for (std::size_t j = i + 1; j < kids.size(); ++j) {
      std::vector<RootedTree> merged_kids = kids[i].children();
      for (const RootedTree& c : kids[j].children()) merged_kids.push_back(c);
      std::vector<RootedTree> new_kids;
      for (std::size_t t = 0; t < kids.size(); ++t) {
        if (t != i && t != j) new_kids.push_back(kids[t]);
      }
      new_kids.push_back(RootedTree(std::move(merged_kids)));
      out.insert(RootedTree(std::move(new_kids)));
    }
    TreeSet deeper;
    meld_inside(kids[i], deeper);
    for (const RootedTree& r : deeper) {
      out.insert(RootedTree(replaced(kids, i, r)));
    }
  }
}

void leaves_inside(const RootedTree& node, TreeSet& out) {
  const auto& kids = node.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (kids[i].loops() == 0) {
      out.insert(RootedTree(without(kids, i)));
    }
    TreeSet deeper;
    leaves_inside(kids[i], deeper);
    for (const RootedTree& r : deeper) {
      out.insert(RootedTree(replaced(kids, i, r)));
    }
  }
}

std::vector<RootedTree> to_sorted(const TreeSet& s) {
  return std::vector<RootedTree>(s.begin(), s.end());
}

}  // namespace

std::vector<RootedTree> fold_moves(const RootedTree& t) {
  TreeSet out;
  fold_inside(t, out);
  return to_sorted(out);
}

std::vector<RootedTree> meld_moves(const RootedTree& t) {
  TreeSet out;
  meld_inside(t, out);
  return to_sorted(out);
}

std::vector<RootedTree> leaf_removals(const RootedTree& t) {
  TreeSet out;
  leaves_inside(t, out);
  return to_sorted(out);
}

std::vector<RootedTree> one_step_down(const RootedTree& t) {
  TreeSet out;
  leaves_inside(t, out);
  fold_inside(t, out);
  meld_inside(t, out);
  return to_sorted(out);
}

std::vector<CoverRelation> cover_relations(const RootedTree& upper) {
  std::map<RootedTree, Move, TreeLess> firsts;
  auto record = [&](const std::vector<RootedTree>& list, Move m) {
    for (const RootedTree& lower : list) firsts.try_emplace(lower, m);
  };
  record(leaf_removals(upper), Move::leaf_removal);
  record(fold_moves(upper), Move::fold);
  record(meld_moves(upper), Move::meld);
  std::vector<CoverRelation> out;
  out.reserve(firsts.size());
  for (const auto& [lower, m] : firsts) {
    out.push_back(CoverRelation{lower, upper, m});
  }
  return out;
}

bool subfold_leq(const RootedTree& a, const RootedTree& b) {
  if (a.loops() > b.loops()) return false;
  TreeSet frontier{b};
  for (int level = b.loops(); level > a.loops(); --level) {
    TreeSet next;
    for (const RootedTree& u : frontier) {
      for (const RootedTree& l : one_step_down(u)) next.insert(l);
    }
    frontier = std::move(next);
    if (frontier.empty()) return false;
  }
  return frontier.count(a) > 0;
}

HasseDiagram hasse(int max_loops) {
  HasseDiagram h;
  std::map<RootedTree, int, TreeLess> index;
  for (int n = 0; n <= max_loops; ++n) {
    for (RootedTree& t : enumerate_trees(n)) {
      index.emplace(t, static_cast<int>(h.nodes.size()));
      h.nodes.push_back(std::move(t));
    }
  }
  for (std::size_t u = 0; u < h.nodes.size(); ++u) {
    for (const RootedTree& l : one_step_down(h.nodes[u])) {
      h.covers.emplace_back(index.at(l), static_cast<int>(u));
    }
  }
  std::sort(h.covers.begin(), h.covers.end());
  return h;
}

std::string to_dot(const HasseDiagram& h) {
  std::ostringstream out;
  out << "digraph subfold {\n  rankdir=LR;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << h.nodes[i].display() << "\"];\n";
  }
  for (const auto& [lower, upper] : h.covers) {
    out << "  n" << lower << " -> n" << upper << ";\n";
  }
  out << "}\n";
  return out.str();
}

SearchOutcome propagating_leq(const RootedTree& a, const RootedTree& b,
                              long max_check) {
  if (a == b) return SearchOutcome::yes;  // identity factors through itself
  // A full composite needs propagating number |a| on both layers.
  if (b.loops() < a.loops()) return SearchOutcome::no;

  std::vector<Diagram> up_full;
  for (Diagram& d : enumerate_homs(a, b)) {
    if (d.propagating_number() == a.loops()) up_full.push_back(std::move(d));
  }
  if (up_full.empty()) return SearchOutcome::no;

  SetPartition ident = SetPartition::identity(a.loops());
  long examined = 0;
  bool exhausted_bound = false;
  for (const Diagram& x : up_full) {
    for (const Diagram& xp : up_full) {
      if (examined >= max_check) {
        exhausted_bound = true;
        break;
      }
      ++examined;
      Term t = compose_sh(x, flip(xp));
      if (t.diagram.partition == ident &&
          specialise(t.coeff, 1, 1) != 0) {
        return SearchOutcome::yes;
      }
    }
    if (exhausted_bound) break;
  }
  return exhausted_bound ? SearchOutcome::inconclusive : SearchOutcome::no;
}

}  // namespace tl3d
