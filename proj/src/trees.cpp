#include "tl3d/trees.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tl3d/errors.hpp"

namespace tl3d {

BracketSeq parse(std::string_view text) {
  int depth = 0;
  std::vector<std::size_t> open_positions;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') {
      ++depth;
      open_positions.push_back(i + 1);
    } else if (c == ')') {
      --depth;
      if (depth < 0) {
        throw ParseError("improper nesting: ')' at position " +
                             std::to_string(i + 1) + " has no matching '('",
                         i + 1);
      }
      open_positions.pop_back();
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) +
                           "' at position " + std::to_string(i + 1),
                       i + 1);
    }
  }
  if (depth != 0) {
    std::size_t pos = open_positions.front();
    throw ParseError("unbalanced input: '(' at position " +
                         std::to_string(pos) + " is never closed",
                     pos);
  }
  return BracketSeq(std::string(text));
}

RootedTree::RootedTree(std::vector<RootedTree> children)
    : children_(std::move(children)) {
  std::sort(children_.begin(), children_.end(),
            [](const RootedTree& a, const RootedTree& b) {
              return compare(a, b) < 0;
            });
  loops_ = 0;
  for (const RootedTree& c : children_) loops_ += c.loops_ + 1;
}

namespace {

void collect_depths(const RootedTree& node, int depth, std::vector<int>& out) {
  out.push_back(depth);
  for (const RootedTree& c : node.children()) {
    collect_depths(c, depth + 1, out);
  }
}

}  // namespace

std::vector<int> RootedTree::depth_sequence() const {
  std::vector<int> out;
  out.reserve(loops_ + 1);
  collect_depths(*this, 0, out);
  return out;
}

std::string RootedTree::display() const {
  return loops_ == 0 ? "∅" : to_bracket(*this).str();
}

int compare(const RootedTree& a, const RootedTree& b) {
  if (a.loops() != b.loops()) return a.loops() < b.loops() ? -1 : 1;
  std::vector<int> da = a.depth_sequence();
  std::vector<int> db = b.depth_sequence();
  if (da < db) return -1;
  if (db < da) return 1;
  return 0;
}

namespace {

RootedTree parse_subtree(const std::string& s, std::size_t& i) {
  std::vector<RootedTree> children;
  while (i < s.size() && s[i] == '(') {
    ++i;  // consume '('
    children.push_back(parse_subtree(s, i));
    ++i;  // consume ')'
  }
  return RootedTree(std::move(children));
}

}  // namespace

RootedTree to_tree(const BracketSeq& b) {
  std::size_t i = 0;
  return parse_subtree(b.str(), i);
}

namespace {

void write_brackets(const RootedTree& node, std::string& out) {
  for (const RootedTree& c : node.children()) {
    out += '(';
    write_brackets(c, out);
    out += ')';
  }
}

}  // namespace

BracketSeq to_bracket(const RootedTree& t) {
  std::string s;
  s.reserve(2 * static_cast<std::size_t>(t.loops()));
  write_brackets(t, s);
  return BracketSeq(std::move(s));
}

namespace {

// Multisets of child subtrees drawn (non-decreasing) from `pool`, with
// total weight (loops+1 each) equal to `remaining`.
void build_trees(const std::vector<RootedTree>& pool, std::size_t start,
                 int remaining, std::vector<RootedTree>& current,
                 std::vector<RootedTree>& out) {
  if (remaining == 0) {
    out.push_back(RootedTree(current));
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    int w = pool[i].loops() + 1;
    if (w > remaining) continue;
    current.push_back(pool[i]);
    build_trees(pool, i, remaining - w, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<RootedTree> enumerate_trees(int n) {
  if (n < 0) throw ParseError("loop count must be non-negative");
  if (n == 0) return {RootedTree()};
  std::vector<RootedTree> pool;
  for (int k = 0; k < n; ++k) {
    std::vector<RootedTree> smaller = enumerate_trees(k);
    pool.insert(pool.end(), smaller.begin(), smaller.end());
  }
  std::vector<RootedTree> out;
  std::vector<RootedTree> current;
  build_trees(pool, 0, n, current, out);
  std::sort(out.begin(), out.end(),
            [](const RootedTree& a, const RootedTree& b) {
              return compare(a, b) < 0;
            });
  return out;
}

BigInt count_trees(int n) {
  if (n < 0) throw ParseError("loop count must be non-negative");
  // Coefficients of prod_{k>=1} (1-x^k)^(-L_{k-1}) via the log-derivative
  // recurrence  n*L_n = sum_{m=1..n} ( sum_{d|m} d*L_{d-1} ) * L_{n-m}.
  std::vector<BigInt> L(static_cast<std::size_t>(n) + 1);
  L[0] = 1;
  std::vector<BigInt> divisor_sum(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    BigInt s = 0;
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0) s += BigInt(d) * L[d - 1];
    }
    divisor_sum[m] = s;
    BigInt total = 0;
    for (int k = 1; k <= m; ++k) total += divisor_sum[k] * L[m - k];
    BigInt q = total / m;
    if (q * m != total) {
      throw CheckViolation("tree-count recurrence produced a non-integer");
    }
    L[m] = q;
  }
  return L[n];
}

EdgePermutation EdgePermutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return EdgePermutation(std::move(img));
}

EdgePermutation::EdgePermutation(std::vector<int> image)
    : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1]) {
      throw ParseError("not a permutation of 1..n");
    }
    seen[v - 1] = true;
  }
}

bool EdgePermutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if (image_[i - 1] != i) return false;
  }
  return true;
}

EdgePermutation EdgePermutation::inverse() const {
  std::vector<int> img(image_.size());
  for (int i = 1; i <= size(); ++i) img[image_[i - 1] - 1] = i;
  return EdgePermutation(std::move(img));
}

EdgePermutation EdgePermutation::then(const EdgePermutation& next) const {
  if (next.size() != size()) throw ObjectMismatch("permutation sizes differ");
  std::vector<int> img(image_.size());
  for (int i = 1; i <= size(); ++i) img[i - 1] = next(image_[i - 1]);
  return EdgePermutation(std::move(img));
}

std::string EdgePermutation::to_cycle_string() const {
  std::vector<bool> done(image_.size(), false);
  std::ostringstream out;
  bool any = false;
  for (int i = 1; i <= size(); ++i) {
    if (done[i - 1] || image_[i - 1] == i) continue;
    any = true;
    out << "(";
    int j = i;
    bool first = true;
    do {
      if (!first) out << " ";
      out << j;
      done[j - 1] = true;
      j = image_[j - 1];
      first = false;
    } while (j != i);
    out << ")";
  }
  return any ? out.str() : "()";
}

TreeLayout::TreeLayout(const RootedTree& t) {
  parent_.reserve(t.loops());
  depth_.reserve(t.loops());
  int next = 1;
  build(t, 0, next);
}

void TreeLayout::build(const RootedTree& node, int parent_edge, int& next) {
  const auto& kids = node.children();
  // heavier siblings first: stored order is ascending, so iterate backwards
  for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
    int e = next++;
    parent_.push_back(parent_edge);
    depth_.push_back(parent_edge == 0 ? 1 : depth_[parent_edge - 1] + 1);
    build(*it, e, next);
  }
}

namespace {

using LocalPerm = std::vector<int>;  // 0-based map on a block of edges

LocalPerm local_identity(int n) {
  LocalPerm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<LocalPerm> forest_perms(const RootedTree& t);

// Permutations of the edge block of one child subtree: index 0 (the edge
// to the child) is fixed, descendants permute by the child's forest.
std::vector<LocalPerm> child_block_perms(const RootedTree& child) {
  std::vector<LocalPerm> out;
  for (const LocalPerm& f : forest_perms(child)) {
    LocalPerm p(f.size() + 1);
    p[0] = 0;
    for (std::size_t i = 0; i < f.size(); ++i) p[i + 1] = f[i] + 1;
    out.push_back(std::move(p));
  }
  return out;
}

// All edge permutations of the forest below t's root, on local indices
// 0..loops-1 in the canonical (heavy-first preorder) numbering.
std::vector<LocalPerm> forest_perms(const RootedTree& t) {
  std::vector<const RootedTree*> kids;
  for (auto it = t.children().rbegin(); it != t.children().rend(); ++it) {
    kids.push_back(&*it);
  }
  std::vector<LocalPerm> result{local_identity(t.loops())};
  std::size_t i = 0;
  int offset = 0;
  while (i < kids.size()) {
    std::size_t j = i;
    while (j < kids.size() && compare(*kids[j], *kids[i]) == 0) ++j;
    int m = static_cast<int>(j - i);
    int block = kids[i]->loops() + 1;
    std::vector<LocalPerm> sub = child_block_perms(*kids[i]);

    // group perms: permute the m identical blocks, each with an
    // independent internal automorphism
    std::vector<LocalPerm> group;
    std::vector<int> pi(static_cast<std::size_t>(m));
    std::iota(pi.begin(), pi.end(), 0);
    do {
      std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
      while (true) {
        LocalPerm g = local_identity(t.loops());
        for (int r = 0; r < m; ++r) {
          int src = offset + r * block;
          int dst = offset + pi[r] * block;
          const LocalPerm& rho = sub[choice[r]];
          for (int x = 0; x < block; ++x) g[src + x] = dst + rho[x];
        }
        group.push_back(std::move(g));
        int carry = m - 1;
        while (carry >= 0 && ++choice[carry] == sub.size()) {
          choice[carry] = 0;
          --carry;
        }
        if (carry < 0) break;
      }
    } while (std::next_permutation(pi.begin(), pi.end()));

    std::vector<LocalPerm> merged;
    merged.reserve(result.size() * group.size());
    for (const LocalPerm& base : result) {
      for (const LocalPerm& g : group) {
        LocalPerm combined = base;
        for (int x = offset; x < offset + m * block; ++x) combined[x] = g[x];
        merged.push_back(std::move(combined));
      }
    }
    result = std::move(merged);
    offset += m * block;
    i = j;
  }
  return result;
}

}  // namespace

std::vector<EdgePermutation> automorphisms(const RootedTree& t) {
  std::vector<EdgePermutation> out;
  for (const LocalPerm& p : forest_perms(t)) {
    std::vector<int> img(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) img[i] = p[i] + 1;
    out.push_back(EdgePermutation(std::move(img)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_automorphism(const RootedTree& t, const EdgePermutation& sigma) {
  if (sigma.size() != t.loops()) return false;
  TreeLayout layout(t);
  for (int e = 1; e <= layout.loop_count(); ++e) {
    int p = layout.parent(e);
    int mapped_parent = p == 0 ? 0 : sigma(p);
    if (layout.parent(sigma(e)) != mapped_parent) return false;
  }
  return true;
}

}  // namespace tl3d
