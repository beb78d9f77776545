#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "tl3d/errors.hpp"
#include "tl3d/trees.hpp"

using namespace tl3d;

namespace {

std::vector<std::string> bracket_list(const std::vector<RootedTree>& trees) {
  std::vector<std::string> out;
  for (const RootedTree& t : trees) out.push_back(to_bracket(t).str());
  return out;
}

// Every plane embedding's depth sequence, by recursive child permutation.
void all_embeddings(const RootedTree& t, std::vector<int>& prefix, int depth,
                    std::vector<std::vector<int>>& out_partial);

void embed_children(std::vector<RootedTree> kids, std::vector<int>& prefix,
                    int depth, std::vector<std::vector<int>>& out) {
  std::sort(kids.begin(), kids.end(),
            [](const RootedTree& a, const RootedTree& b) {
              return compare(a, b) < 0;
            });
  std::vector<std::size_t> order(kids.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  do {
    std::vector<std::vector<int>> partials{prefix};
    for (std::size_t i : order) {
      std::vector<std::vector<int>> next;
      for (const auto& p : partials) {
        std::vector<int> local = p;
        all_embeddings(kids[i], local, depth, next);
        // all_embeddings pushes completed extensions into `next`
      }
      partials = std::move(next);
    }
    for (auto& p : partials) out.push_back(std::move(p));
  } while (std::next_permutation(order.begin(), order.end()));
}

void all_embeddings(const RootedTree& t, std::vector<int>& prefix, int depth,
                    std::vector<std::vector<int>>& out) {
  prefix.push_back(depth);
  if (t.children().empty()) {
    out.push_back(prefix);
  } else {
    embed_children(t.children(), prefix, depth + 1, out);
  }
  prefix.pop_back();
}

std::vector<std::vector<int>> embeddings(const RootedTree& t) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  all_embeddings(t, prefix, 0, out);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("trees");

TEST_CASE("parse accepts nestings and reports offending positions") {
  CHECK(parse("()(())").pair_count() == 3);
  CHECK(parse("").pair_count() == 0);
  CHECK_THROWS_WITH_AS(parse(")("),
                       "improper nesting: ')' at position 1 has no matching "
                       "'('",
                       ParseError);
  try {
    parse("(()");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS(parse("(a)"), ParseError);
}

TEST_CASE("to_tree canonicalises, to_bracket round-trips") {
  CHECK(to_tree(parse("((()))")) == to_tree(parse("((()))")));
  CHECK(to_tree(parse("((()))")).depth_sequence() ==
        std::vector<int>{0, 1, 2, 3});
  CHECK(to_tree(parse("(())()")) == to_tree(parse("()(())")));
  CHECK(to_bracket(to_tree(parse("(())()"))).str() == "()(())");
  CHECK(to_tree(parse("()")).loops() == 1);
  CHECK(to_bracket(RootedTree()).str() == "");
  CHECK(to_bracket(to_tree(parse("((()))"))).str() == "((()))");
  RootedTree two_kids = tree_from_string("()(())");
  CHECK(two_kids.children().size() == 2);
}

TEST_CASE("compare is the loops-then-depth-sequence order") {
  CHECK(compare(tree_from_string("(()())"), tree_from_string("((()))")) < 0);
  RootedTree t = tree_from_string("()(())");
  CHECK(compare(t, t) == 0);
  CHECK(compare(tree_from_string("()()"), tree_from_string("(())")) < 0);
  // () < (()) < (()()) < ((())) as listed
  std::vector<std::string> listing = {"()", "(())", "(()())", "((()))"};
  for (std::size_t i = 0; i + 1 < listing.size(); ++i) {
    CHECK(compare(tree_from_string(listing[i]),
                  tree_from_string(listing[i + 1])) < 0);
  }
}

TEST_CASE("enumerate_trees matches the reference listing") {
  CHECK(enumerate_trees(0).size() == 1);
  CHECK(bracket_list(enumerate_trees(3)) ==
        std::vector<std::string>{"()()()", "()(())", "(()())", "((()))"});
  CHECK(enumerate_trees(4).size() == 9);
}

TEST_CASE("count_trees agrees with enumeration") {
  CHECK(count_trees(2) == 2);
  CHECK(count_trees(0) == 1);
  for (int n = 0; n <= 8; ++n) {
    CHECK(count_trees(n) == BigInt(enumerate_trees(n).size()));
  }
  CHECK(count_trees(12) == 12486);  // larger value from the recurrence
}

TEST_CASE("round-trip: every canonical tree survives bracket encoding") {
  for (int n = 0; n <= 6; ++n) {
    for (const RootedTree& t : enumerate_trees(n)) {
      CHECK(to_tree(to_bracket(t)) == t);
    }
  }
}

TEST_CASE("canonical form is minimal over all plane embeddings") {
  for (int n = 0; n <= 6; ++n) {
    for (const RootedTree& t : enumerate_trees(n)) {
      auto embs = embeddings(t);
      auto canonical = t.depth_sequence();
      CHECK(*std::min_element(embs.begin(), embs.end()) == canonical);
    }
  }
}

TEST_CASE("automorphisms of (())()() are the identity and (3 4)") {
  RootedTree f = tree_from_string("(())()()");
  auto group = automorphisms(f);
  REQUIRE(group.size() == 2);
  CHECK(group[0] == EdgePermutation::identity(4));
  CHECK(group[1] == EdgePermutation({1, 2, 4, 3}));
  CHECK(group[1].to_cycle_string() == "(3 4)");
}

TEST_CASE("path trees are rigid, stars fully symmetric") {
  CHECK(automorphisms(tree_from_string("((()))")).size() == 1);
  auto star = automorphisms(tree_from_string("()()()"));
  CHECK(star.size() == 6);
  std::set<std::vector<int>> images;
  for (const auto& s : star) images.insert(s.image());
  CHECK(images.size() == 6);
}

TEST_CASE("automorphism groups satisfy the group axioms") {
  for (int n = 0; n <= 5; ++n) {
    for (const RootedTree& t : enumerate_trees(n)) {
      auto group = automorphisms(t);
      std::set<std::vector<int>> members;
      for (const auto& g : group) members.insert(g.image());
      CHECK(members.count(EdgePermutation::identity(n).image()) == 1);
      for (const auto& g : group) {
        CHECK(members.count(g.inverse().image()) == 1);
        for (const auto& h : group) {
          CHECK(members.count(g.then(h).image()) == 1);
        }
      }
    }
  }
}

TEST_CASE("automorphisms are exactly the structure-preserving permutations") {
  for (int n = 0; n <= 5; ++n) {
    for (const RootedTree& t : enumerate_trees(n)) {
      auto group = automorphisms(t);
      std::set<std::vector<int>> members;
      for (const auto& g : group) members.insert(g.image());
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = i + 1;
      long brute = 0;
      do {
        EdgePermutation sigma(img);
        bool structural = is_automorphism(t, sigma);
        CHECK(structural == (members.count(img) == 1));
        if (structural) ++brute;
      } while (std::next_permutation(img.begin(), img.end()));
      CHECK(brute == static_cast<long>(group.size()));
    }
  }
}

TEST_CASE("group size equals the multiplicity-factorial product") {
  // recursive reference: product of m! over isomorphic-sibling classes
  // times the children's own factors
  std::function<long(const RootedTree&)> formula =
      [&](const RootedTree& t) -> long {
    long total = 1;
    const auto& kids = t.children();
    std::size_t i = 0;
    while (i < kids.size()) {
      std::size_t j = i;
      long fact = 1;
      while (j < kids.size() && kids[j] == kids[i]) {
        ++j;
        fact *= static_cast<long>(j - i);
      }
      total *= fact;
      for (std::size_t k = i; k < j; ++k) total *= formula(kids[k]);
      i = j;
    }
    return total;
  };
  for (int n = 0; n <= 6; ++n) {
    for (const RootedTree& t : enumerate_trees(n)) {
      CHECK(static_cast<long>(automorphisms(t).size()) == formula(t));
    }
  }
}

TEST_CASE("compare is a strict total order on random pairs") {
  std::vector<RootedTree> pool;
  for (int n = 0; n <= 6; ++n) {
    auto trees = enumerate_trees(n);
    pool.insert(pool.end(), trees.begin(), trees.end());
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const RootedTree& a = pool[pick(rng)];
    const RootedTree& b = pool[pick(rng)];
    const RootedTree& c = pool[pick(rng)];
    CHECK(compare(a, b) == -compare(b, a));
    if (compare(a, b) == 0) CHECK(to_bracket(a) == to_bracket(b));
    if (compare(a, b) <= 0 && compare(b, c) <= 0) CHECK(compare(a, c) <= 0);
  }
}

TEST_SUITE_END();
