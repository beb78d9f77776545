#include "tl3d/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tl3d/errors.hpp"

namespace tl3d {

SetPartition::SetPartition(int bottom, int top,
                           std::vector<std::vector<int>> blocks)
    : bottom_(bottom), top_(top), blocks_(std::move(blocks)) {
  if (bottom < 0 || top < 0) {
    throw ParseError("negative ground side size");
  }
  int n = bottom_ + top_;
  block_index_.assign(n, -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw ParseError("empty block in partition");
    std::sort(b.begin(), b.end());
    for (int pos : b) {
      if (pos < 0 || pos >= n) {
        throw ParseError("block element out of ground range");
      }
      if (block_index_[pos] != -1) {
        throw ParseError("ground element in two blocks");
      }
      block_index_[pos] = 0;  // placeholder, rebuilt below
    }
  }
  for (int pos = 0; pos < n; ++pos) {
    if (block_index_[pos] == -1) {
      throw ParseError("ground element missing from all blocks");
    }
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int pos : blocks_[i]) block_index_[pos] = static_cast<int>(i);
  }
}

SetPartition SetPartition::identity(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 0; i < n; ++i) blocks.push_back({i, n + i});
  return SetPartition(n, n, std::move(blocks));
}

SetPartition SetPartition::singletons(int bottom, int top) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(bottom + top);
  for (int i = 0; i < bottom + top; ++i) blocks.push_back({i});
  return SetPartition(bottom, top, std::move(blocks));
}

int SetPartition::propagating_number() const {
  int count = 0;
  for (const auto& b : blocks_) {
    bool has_bottom = false, has_top = false;
    for (int pos : b) (is_bottom(pos) ? has_bottom : has_top) = true;
    if (has_bottom && has_top) ++count;
  }
  return count;
}

std::vector<int> SetPartition::rgs() const {
  std::vector<int> out(ground_size());
  std::vector<int> renumber(blocks_.size(), -1);
  int next = 0;
  for (int pos = 0; pos < ground_size(); ++pos) {
    int b = block_index_[pos];
    if (renumber[b] == -1) renumber[b] = next++;
    out[pos] = renumber[b];
  }
  return out;
}

std::string SetPartition::label(int pos) const {
  if (is_bottom(pos)) return std::to_string(pos + 1) + "-";
  return std::to_string(pos - bottom_ + 1) + "+";
}

std::string SetPartition::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out << ",";
    out << "{";
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out << ",";
      out << label(blocks_[i][j]);
    }
    out << "}";
  }
  out << "}";
  return out.str();
}

int lex_compare(const SetPartition& a, const SetPartition& b) {
  if (a.bottom_count() != b.bottom_count() ||
      a.top_count() != b.top_count()) {
    throw ObjectMismatch("lex_compare requires a common ground");
  }
  if (a.block_count() != b.block_count()) {
    return a.block_count() > b.block_count() ? -1 : 1;
  }
  std::vector<int> ra = a.rgs();
  std::vector<int> rb = b.rgs();
  if (ra < rb) return -1;
  if (rb < ra) return 1;
  return 0;
}

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

GluingResult glue(const std::vector<const SetPartition*>& layers) {
  // Block ids are offset per layer; every interface loop between
  // consecutive layers unites the two incident blocks.
  std::vector<int> offset(layers.size());
  int total_blocks = 0;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    offset[l] = total_blocks;
    total_blocks += layers[l]->block_count();
  }
  UnionFind uf(total_blocks);
  for (std::size_t l = 0; l + 1 < layers.size(); ++l) {
    const SetPartition& lo = *layers[l];
    const SetPartition& hi = *layers[l + 1];
    if (lo.top_count() != hi.bottom_count()) {
      throw ObjectMismatch(
          "glued interfaces disagree: upper side of size " +
          std::to_string(lo.top_count()) + " against lower side of size " +
          std::to_string(hi.bottom_count()));
    }
    for (int m = 0; m < lo.top_count(); ++m) {
      uf.unite(offset[l] + lo.block_of(lo.bottom_count() + m),
               offset[l + 1] + hi.block_of(m));
    }
  }

  const SetPartition& first = *layers.front();
  const SetPartition& last = *layers.back();
  int s = first.bottom_count();
  int u = last.top_count();

  // outer ground: bottom of the first layer, then top of the last
  std::vector<int> class_of_root(total_blocks, -1);
  std::vector<std::vector<int>> trace_blocks;
  auto outer_class = [&](int root) {
    if (class_of_root[root] == -1) {
      class_of_root[root] = static_cast<int>(trace_blocks.size());
      trace_blocks.emplace_back();
    }
    return class_of_root[root];
  };
  for (int i = 0; i < s; ++i) {
    int root = uf.find(first.block_of(i));
    trace_blocks[outer_class(root)].push_back(i);
  }
  for (int j = 0; j < u; ++j) {
    int root = uf.find(offset.back() +
                       last.block_of(last.bottom_count() + j));
    trace_blocks[outer_class(root)].push_back(s + j);
  }

  int merged = 0;
  int outer = 0;
  std::vector<bool> seen(total_blocks, false);
  for (int b = 0; b < total_blocks; ++b) {
    int root = uf.find(b);
    if (seen[root]) continue;
    seen[root] = true;
    ++merged;
    if (class_of_root[root] != -1) ++outer;
  }

  GluingResult result;
  result.trace = SetPartition(s, u, std::move(trace_blocks));
  result.merged_components = merged;
  result.middle_only_blocks = merged - outer;
  return result;
}

}  // namespace

GluingResult compose(const SetPartition& a, const SetPartition& b) {
  return glue({&a, &b});
}

GluingResult compose3(const SetPartition& a, const SetPartition& x,
                      const SetPartition& b) {
  return glue({&a, &x, &b});
}

namespace {

void partitions_rec(int n, int pos, std::vector<int>& rgs, int used,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (pos == n) {
    std::vector<std::vector<int>> blocks(used);
    for (int p = 0; p < n; ++p) blocks[rgs[p]].push_back(p);
    out.push_back(std::move(blocks));
    return;
  }
  for (int c = 0; c <= used; ++c) {
    rgs[pos] = c;
    partitions_rec(n, pos + 1, rgs, c == used ? used + 1 : used, out);
  }
}

}  // namespace

std::vector<std::vector<std::vector<int>>> all_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> rgs(n, 0);
  partitions_rec(n, 0, rgs, 0, out);
  return out;
}

}  // namespace tl3d
