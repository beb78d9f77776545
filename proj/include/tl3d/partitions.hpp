#pragma once

#include <string>
#include <vector>

namespace tl3d {

// Partition of a labelled loop set split into a bottom side and a top side.
// Ground positions are 0-based: [0, bottom) are bottom loops 1-,2-,...,
// [bottom, bottom+top) are top loops 1+,2+,...  Blocks are stored with
// elements ascending and blocks ordered by first element.
class SetPartition {
public:
  SetPartition() = default;  // empty ground
  // Validates: blocks disjoint, non-empty, covering the ground.
  SetPartition(int bottom, int top, std::vector<std::vector<int>> blocks);

  static SetPartition identity(int n);                 // {{i-, i+}}
  static SetPartition singletons(int bottom, int top);

  int bottom_count() const noexcept { return bottom_; }
  int top_count() const noexcept { return top_; }
  int ground_size() const noexcept { return bottom_ + top_; }
  const std::vector<std::vector<int>>& blocks() const noexcept {
    return blocks_;
  }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  int block_of(int pos) const { return block_index_[pos]; }
  bool is_bottom(int pos) const { return pos < bottom_; }

  // Count of blocks meeting both sides.
  int propagating_number() const;

  // Restricted-growth sequence: rgs[p] = index of p's block, blocks
  // numbered by first appearance along the ground order.
  std::vector<int> rgs() const;

  std::string label(int pos) const;  // "2-", "1+"
  std::string to_string() const;     // "{{1-,1+},{2-},{2+}}"

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
  int bottom_ = 0;
  int top_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_index_;
};

// Total order used everywhere partitions are sorted or canonicalised:
// partitions with more blocks come first; ties broken by ascending
// restricted-growth sequence.  So for a 2-element ground,
// {{1},{2}} < {{1,2}}.  Returns <0, 0, >0; requires equal ground shape.
int lex_compare(const SetPartition& a, const SetPartition& b);

struct SetPartitionLess {
  bool operator()(const SetPartition& a, const SetPartition& b) const {
    return lex_compare(a, b) < 0;
  }
};

// Outcome of gluing layers along shared middle loop sets.
struct GluingResult {
  SetPartition trace;       // partition induced on the outer ground
  int merged_components;    // classes of the glued diagram, |A o B|
  int middle_only_blocks;   // classes touching no outer loop (bubbles)
};

// Glue a (on S|T) below b (on T|U) along T; requires a.top == b.bottom.
GluingResult compose(const SetPartition& a, const SetPartition& b);

// One-shot three-layer gluing a (S|T), x (T|T'), b (T'|U).
GluingResult compose3(const SetPartition& a, const SetPartition& x,
                      const SetPartition& b);

// All partitions of an n-element ground in ascending rgs order
// (test oracle and enumeration helper).
std::vector<std::vector<std::vector<int>>> all_partitions(int n);

}  // namespace tl3d
