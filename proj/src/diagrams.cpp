#include "tl3d/diagrams.hpp"

#include <algorithm>
#include <map>

#include "tl3d/errors.hpp"

namespace tl3d {

JoinedTree::JoinedTree(RootedTree bottom, RootedTree top)
    : bottom_(std::move(bottom)), top_(std::move(top)) {
  nb_ = bottom_.loops();
  TreeLayout lb(bottom_);
  TreeLayout lt(top_);
  parent_.resize(nb_ + top_.loops());
  depth_.resize(parent_.size());
  for (int e = 1; e <= nb_; ++e) {
    parent_[e - 1] = lb.parent(e) - 1;  // -1 when attached to the root
    depth_[e - 1] = lb.depth(e);
  }
  for (int e = 1; e <= top_.loops(); ++e) {
    int p = lt.parent(e);
    parent_[nb_ + e - 1] = p == 0 ? -1 : nb_ + p - 1;
    depth_[nb_ + e - 1] = lt.depth(e);
  }
}

std::vector<int> JoinedTree::chain(int e1, int e2) const {
  std::vector<int> out;
  int a = e1, b = e2;
  while (depth_[a] > depth_[b]) {
    if (a != e1) out.push_back(a);
    a = parent_[a];
  }
  while (depth_[b] > depth_[a]) {
    if (b != e2) out.push_back(b);
    b = parent_[b];
  }
  while (a != b) {
    if (a != e1 && a != -1) out.push_back(a);
    if (b != e2 && b != -1) out.push_back(b);
    if (a == -1 || b == -1) return out;  // met at the shared root
    a = parent_[a];
    b = parent_[b];
  }
  // The meeting edge hangs above the junction vertex, so it lies on both
  // root paths and drops out of the symmetric difference.
  return out;
}

namespace {

bool chain_condition_holds(const SetPartition& p, int colour,
                           const std::vector<int>& chain) {
  if (chain.empty()) return true;
  std::map<int, int> counts;
  for (int f : chain) {
    int c = p.block_of(f);
    if (c == colour) return true;  // same-block edge inside the chain
    ++counts[c];
  }
  for (const auto& [c, n] : counts) {
    if (n % 2 != 0) return false;
  }
  return true;
}

}  // namespace

bool is_admissible(const JoinedTree& j, const SetPartition& p) {
  if (p.bottom_count() != j.bottom_loops() ||
      p.ground_size() != j.edge_count()) {
    throw ObjectMismatch("partition does not cover the joined tree's edges");
  }
  for (const auto& block : p.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t k = i + 1; k < block.size(); ++k) {
        if (!chain_condition_holds(p, p.block_of(block[i]),
                                   j.chain(block[i], block[k]))) {
          return false;
        }
      }
    }
  }
  return true;
}

Diagram::Diagram(RootedTree src, RootedTree tgt, SetPartition part)
    : source(std::move(src)), target(std::move(tgt)),
      partition(std::move(part)) {
  if (partition.bottom_count() != source.loops() ||
      partition.top_count() != target.loops()) {
    throw ObjectMismatch("partition ground does not match the diagram's "
                         "boundary loop counts");
  }
  JoinedTree jt(source, target);
  if (!is_admissible(jt, partition)) {
    throw CheckViolation("connectivity is not admissible for " +
                         source.display() + " -> " + target.display() + ": " +
                         partition.to_string());
  }
}

std::string Diagram::to_string() const { return partition.to_string(); }

bool operator==(const Diagram& a, const Diagram& b) {
  return compare(a, b) == 0;
}

int compare(const Diagram& a, const Diagram& b) {
  if (int c = compare(a.source, b.source)) return c;
  if (int c = compare(a.target, b.target)) return c;
  return lex_compare(a.partition, b.partition);
}

namespace {

struct PairCheck {
  int a, b;
  std::vector<int> chain;
};

void enumerate_rec(int n, int pos, std::vector<int>& rgs, int used,
                   const std::vector<std::vector<PairCheck>>& by_trigger,
                   std::vector<std::vector<int>>& chain_colours,
                   std::vector<std::vector<std::vector<int>>>& out) {
  if (pos == n) {
    std::vector<std::vector<int>> blocks(used);
    for (int p = 0; p < n; ++p) blocks[rgs[p]].push_back(p);
    out.push_back(std::move(blocks));
    return;
  }
  for (int c = 0; c <= used; ++c) {
    rgs[pos] = c;
    bool ok = true;
    // Every pair whose outcome is decided at this step: both endpoints and
    // the whole chain are assigned, and assigned colours never change.
    for (const PairCheck& pc : by_trigger[pos]) {
      if (rgs[pc.a] != rgs[pc.b]) continue;
      auto& counts = chain_colours[pos];
      counts.assign(used + 1, 0);
      bool rescued = false;
      for (int f : pc.chain) {
        if (rgs[f] == rgs[pc.a]) {
          rescued = true;
          break;
        }
        ++counts[rgs[f]];
      }
      if (rescued) continue;
      for (int cc = 0; cc <= used && ok; ++cc) {
        if (counts[cc] % 2 != 0) ok = false;
      }
      if (!ok) break;
    }
    if (ok) {
      enumerate_rec(n, pos + 1, rgs, c == used ? used + 1 : used, by_trigger,
                    chain_colours, out);
    }
  }
}

}  // namespace

std::vector<Diagram> enumerate_homs(const RootedTree& F,
                                    const RootedTree& Fp) {
  JoinedTree jt(F, Fp);
  int n = jt.edge_count();
  std::vector<std::vector<PairCheck>> by_trigger(std::max(n, 1));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      PairCheck pc{a, b, jt.chain(a, b)};
      int trigger = b;
      for (int f : pc.chain) trigger = std::max(trigger, f);
      by_trigger[trigger].push_back(std::move(pc));
    }
  }
  std::vector<std::vector<std::vector<int>>> raw;
  if (n == 0) {
    raw.push_back({});
  } else {
    std::vector<int> rgs(n, 0);
    std::vector<std::vector<int>> scratch(n);
    enumerate_rec(n, 0, rgs, 0, by_trigger, scratch, raw);
  }
  std::vector<Diagram> out;
  out.reserve(raw.size());
  for (auto& blocks : raw) {
    out.emplace_back(F, Fp, SetPartition(F.loops(), Fp.loops(),
                                         std::move(blocks)));
  }
  std::sort(out.begin(), out.end(), DiagramLess{});
  return out;
}

Diagram identity(const RootedTree& F) {
  return Diagram(F, F, SetPartition::identity(F.loops()));
}

Diagram permutation_diagram(const RootedTree& F,
                            const EdgePermutation& sigma) {
  if (sigma.size() != F.loops() || !is_automorphism(F, sigma)) {
    throw ObjectMismatch("permutation " + sigma.to_cycle_string() +
                         " is not a loop symmetry of " + F.display());
  }
  int n = F.loops();
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 1; i <= n; ++i) blocks.push_back({i - 1, n + sigma(i) - 1});
  return Diagram(F, F, SetPartition(n, n, std::move(blocks)));
}

Diagram flip(const Diagram& d) {
  int nb = d.partition.bottom_count();
  int nt = d.partition.top_count();
  std::vector<std::vector<int>> blocks;
  blocks.reserve(d.partition.block_count());
  for (const auto& block : d.partition.blocks()) {
    std::vector<int> nb_block;
    nb_block.reserve(block.size());
    for (int pos : block) {
      nb_block.push_back(pos < nb ? nt + pos : pos - nb);
    }
    blocks.push_back(std::move(nb_block));
  }
  return Diagram(d.target, d.source, SetPartition(nt, nb, std::move(blocks)));
}

RootedTree propagating_config(const Diagram& d) {
  const SetPartition& p = d.partition;
  int nb = p.bottom_count();
  TreeLayout layout(d.source);

  std::vector<int> prop_blocks;
  std::vector<int> block_rank(p.block_count(), -1);
  for (int b = 0; b < p.block_count(); ++b) {
    bool has_bottom = false, has_top = false;
    for (int pos : p.blocks()[b]) {
      (pos < nb ? has_bottom : has_top) = true;
    }
    if (has_bottom && has_top) {
      block_rank[b] = static_cast<int>(prop_blocks.size());
      prop_blocks.push_back(b);
    }
  }

  // Representative source loop per block: the outermost one.
  std::vector<int> rep(prop_blocks.size(), 0);
  for (std::size_t r = 0; r < prop_blocks.size(); ++r) {
    int best = -1;
    for (int pos : p.blocks()[prop_blocks[r]]) {
      if (pos >= nb) continue;
      int loop = pos + 1;
      if (best == -1 || layout.depth(loop) < layout.depth(best)) best = loop;
    }
    rep[r] = best;
  }

  // Parent block: owner of the nearest propagating ancestor loop.  The
  // representative is the outermost loop of its block, so no ancestor can
  // belong to the same block.
  std::vector<std::vector<int>> children(prop_blocks.size());
  std::vector<int> roots;
  for (std::size_t r = 0; r < prop_blocks.size(); ++r) {
    int up = layout.parent(rep[r]);
    int parent_rank = -1;
    while (up != 0) {
      int owner = p.block_of(up - 1);
      if (block_rank[owner] != -1) {
        parent_rank = block_rank[owner];
        break;
      }
      up = layout.parent(up);
    }
    if (parent_rank == -1) {
      roots.push_back(static_cast<int>(r));
    } else {
      children[parent_rank].push_back(static_cast<int>(r));
    }
  }

  std::vector<RootedTree> built(prop_blocks.size());
  // deepest representatives first, so children are built before parents
  std::vector<int> order(prop_blocks.size());
  for (std::size_t r = 0; r < order.size(); ++r) order[r] = static_cast<int>(r);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return layout.depth(rep[x]) > layout.depth(rep[y]);
  });
  for (int r : order) {
    std::vector<RootedTree> kids;
    for (int c : children[r]) kids.push_back(built[c]);
    built[r] = RootedTree(std::move(kids));
  }
  std::vector<RootedTree> top_level;
  for (int r : roots) top_level.push_back(built[r]);
  return RootedTree(std::move(top_level));
}

}  // namespace tl3d
