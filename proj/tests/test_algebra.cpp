#include <doctest.h>

#include <algorithm>

#include "tl3d/algebra.hpp"
#include "tl3d/checks.hpp"
#include "tl3d/errors.hpp"

using namespace tl3d;

namespace {

const Poly2 kOne = Poly2::one();
const Poly2 kQ = Poly2::var_q();
const Poly2 kK = Poly2::var_k();

Diagram diag(const char* src, const char* tgt,
             std::vector<std::vector<int>> blocks) {
  RootedTree s = tree_from_string(src);
  RootedTree t = tree_from_string(tgt);
  return Diagram(s, t, SetPartition(s.loops(), t.loops(), std::move(blocks)));
}

}  // namespace

TEST_SUITE_BEGIN("algebra");

TEST_CASE("caps and cups over (()) give the q^2 / q / qk scalars") {
  Diagram caps = diag("(())", "", {{0}, {1}});        // two separate caps
  Diagram pancake = diag("(())", "", {{0, 1}});       // one joint cap
  Term t11 = compose_sh(flip(caps), caps);
  CHECK(t11.coeff == kQ * kQ);
  CHECK(t11.diagram.partition.ground_size() == 0);
  Term t12 = compose_sh(flip(caps), pancake);
  CHECK(t12.coeff == kQ);
  Term t22 = compose_sh(flip(pancake), pancake);
  CHECK(t22.coeff == kQ * kK);
}

TEST_CASE("identity is a strict unit for compose_sh") {
  for (const char* f : {"(())", "()()", "()(())"}) {
    RootedTree tree = tree_from_string(f);
    for (const Diagram& d : enumerate_homs(tree, tree)) {
      Term left = compose_sh(identity(tree), d);
      CHECK(left.coeff == kOne);
      CHECK(left.diagram == d);
      Term right = compose_sh(d, identity(tree));
      CHECK(right.coeff == kOne);
      CHECK(right.diagram == d);
    }
  }
}

TEST_CASE("half-propagating square on ()() closes one bubble") {
  Diagram a = diag("()()", "()()", {{0, 2}, {1}, {3}});
  Term t = compose_sh(a, a);
  CHECK(t.coeff == kQ);
  CHECK(t.diagram == a);
}

TEST_CASE("composition across different objects is rejected") {
  Diagram a = diag("()", "(())", {{0, 1, 2}});
  Diagram b = diag("()()", "()", {{0, 2}, {1}});
  CHECK_THROWS_AS(compose_sh(a, b), ObjectMismatch);
}

TEST_CASE("bilinearity and the zero combination") {
  Diagram a = diag("()", "()", {{0, 1}});
  Diagram b = diag("()", "()", {{0}, {1}});
  LinComb x = LinComb::single(a, kQ);
  LinComb y = LinComb::single(b, Poly2::constant(Rational(1, 2)));
  LinComb xy = compose_sh_lin(x, y);
  Term t = compose_sh(a, b);
  CHECK(xy ==
        LinComb::single(t.diagram,
                        t.coeff * kQ * Poly2::constant(Rational(1, 2))));
  LinComb zero(tree_from_string("()"), tree_from_string("()"));
  CHECK(compose_sh_lin(zero, y).empty());
}

TEST_CASE("idempotent elements of small symmetry groups") {
  CHECK(idempotent(tree_from_string("((()))")) ==
        LinComb::single(identity(tree_from_string("((()))"))));

  RootedTree pair = tree_from_string("()()");
  LinComb eta = idempotent(pair);
  REQUIRE(eta.size() == 2);
  Poly2 half = Poly2::constant(Rational(1, 2));
  CHECK(eta.coefficient(identity(pair)) == half);
  CHECK(eta.coefficient(permutation_diagram(pair, EdgePermutation({2, 1}))) ==
        half);
  CHECK(compose_sh_lin(eta, eta) == eta);

  // canonical numbering puts the nested pair first, so the symmetry of
  // (())()() swaps loops 3 and 4
  RootedTree mixed = tree_from_string("(())()()");
  LinComb eta2 = idempotent(mixed);
  REQUIRE(eta2.size() == 2);
  CHECK(eta2.coefficient(identity(mixed)) == half);
  CHECK(eta2.coefficient(permutation_diagram(
            mixed, EdgePermutation({1, 2, 4, 3}))) == half);
}

TEST_CASE("permutation diagrams compose as their permutations") {
  for (const char* f : {"()()", "()()()", "(())()()"}) {
    RootedTree tree = tree_from_string(f);
    auto group = automorphisms(tree);
    for (const EdgePermutation& sigma : group) {
      for (const EdgePermutation& tau : group) {
        Term t = compose_sh(permutation_diagram(tree, sigma),
                            permutation_diagram(tree, tau));
        CHECK(t.coeff == kOne);
        CHECK(t.diagram == permutation_diagram(tree, sigma.then(tau)));
      }
    }
  }
}

TEST_CASE("h-canonical representatives") {
  RootedTree pair = tree_from_string("()()");
  CHECK(h_canonical(identity(pair)) == identity(pair));

  Diagram a = diag("()()", "()()", {{0, 2}, {1}, {3}});
  Diagram partner = diag("()()", "()()", {{1, 3}, {0}, {2}});
  CHECK(h_canonical(a) == a);
  CHECK(h_canonical(partner) == a);
  // whole orbit collapses to one representative
  CHECK(h_canonical(diag("()()", "()()", {{0, 3}, {1}, {2}})) == a);
  CHECK(h_canonical(diag("()()", "()()", {{1, 2}, {0}, {3}})) == a);

  // rigid objects leave diagrams untouched
  Diagram rigid = diag("(())", "(())", {{0, 2}, {1}, {3}});
  CHECK(h_canonical(rigid) == rigid);
}

TEST_CASE("h-canonical agrees with explicit permutation sandwiches") {
  for (const char* f : {"()()", "()(())"}) {
    RootedTree tree = tree_from_string(f);
    auto group = automorphisms(tree);
    for (const Diagram& d : enumerate_homs(tree, tree)) {
      Diagram canon = h_canonical(d);
      bool found = false;
      for (const EdgePermutation& sigma : group) {
        for (const EdgePermutation& tau : group) {
          Term left = compose_sh(permutation_diagram(tree, sigma), d);
          CHECK(left.coeff == kOne);
          Term both = compose_sh(left.diagram,
                                 permutation_diagram(tree, tau));
          CHECK(both.coeff == kOne);
          CHECK(lex_compare(canon.partition, both.diagram.partition) <= 0);
          if (both.diagram == canon) found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("symmetrised composition averages over the middle symmetries") {
  RootedTree pair = tree_from_string("()()");
  Diagram a = diag("()()", "()()", {{0, 2}, {1}, {3}});
  LinComb product = compose_h(a, a);
  REQUIRE(product.size() == 2);
  Poly2 half = Poly2::constant(Rational(1, 2));
  CHECK(product.coefficient(a) == half * kQ);
  Diagram scattered = diag("()()", "()()", {{0}, {1}, {2}, {3}});
  CHECK(product.coefficient(scattered) == half);
}

TEST_CASE("rigid middles reduce compose_h to compose_sh") {
  RootedTree rigid = tree_from_string("((()))");
  auto homs = enumerate_homs(rigid, rigid);
  for (std::size_t i = 0; i < homs.size(); i += 3) {
    for (std::size_t j = 0; j < homs.size(); j += 4) {
      Term sh = compose_sh(homs[i], homs[j]);
      LinComb h = compose_h(homs[i], homs[j]);
      REQUIRE(h.size() == 1);
      CHECK(h.coefficient(h_canonical(sh.diagram)) == sh.coeff);
    }
  }
}

TEST_CASE("the identity class is a unit for compose_h") {
  for (const char* f : {"()()", "(())()()"}) {
    RootedTree tree = tree_from_string(f);
    auto homs = enumerate_homs(tree, tree);
    for (std::size_t i = 0; i < homs.size(); i += 5) {
      Diagram d = h_canonical(homs[i]);
      LinComb left = compose_h(identity(tree), d);
      CHECK(left == LinComb::single(d));
      LinComb right = compose_h(d, identity(tree));
      CHECK(right == LinComb::single(d));
    }
  }
}

TEST_CASE("Gram data for the two-loop nest matches the reference values") {
  RootedTree f = tree_from_string("(())");

  GramMatrix m0 = gram_matrix(f, RootedTree());
  REQUIRE(m0.dimension() == 2);
  CHECK(m0.basis()[0].partition == SetPartition(2, 0, {{0}, {1}}));
  CHECK(m0.basis()[1].partition == SetPartition(2, 0, {{0, 1}}));
  CHECK(m0.entry(0, 0).value == kQ * kQ);
  CHECK(m0.entry(0, 1).value == kQ);
  CHECK(m0.entry(1, 0).value == kQ);
  CHECK(m0.entry(1, 1).value == kQ * kK);
  CHECK(gram_det(m0) == kQ * kQ * (kQ * kK - kOne));

  GramMatrix m1 = gram_matrix(f, tree_from_string("()"));
  REQUIRE(m1.dimension() == 2);
  CHECK(m1.entry(0, 0).value == kQ);
  CHECK(m1.entry(0, 1).value == kOne);
  CHECK(m1.entry(1, 0).value == kOne);
  CHECK(m1.entry(1, 1).value == kK);
  CHECK(gram_det(m1) == kQ * kK - kOne);

  GramMatrix m2 = gram_matrix(f, f);
  REQUIRE(m2.dimension() == 1);
  CHECK(m2.entry(0, 0).value == kOne);
  CHECK(gram_det(m2) == kOne);

  // empty section: no diagram in hom((()),()()) is full
  GramMatrix empty = gram_matrix(f, tree_from_string("()()"));
  CHECK(empty.dimension() == 0);
  CHECK(gram_det(empty) == kOne);
}

TEST_CASE("Gram matrices are symmetric") {
  for (const char* fs : {"(())", "()()", "()(())"}) {
    RootedTree f = tree_from_string(fs);
    for (int n = 0; n <= f.loops(); ++n) {
      for (const RootedTree& p : enumerate_trees(n)) {
        GramMatrix m = gram_matrix(f, p);
        for (int i = 0; i < m.dimension(); ++i) {
          for (int j = 0; j < m.dimension(); ++j) {
            CHECK(m.entry(i, j).flagged == m.entry(j, i).flagged);
            if (!m.entry(i, j).flagged) {
              CHECK(m.entry(i, j).value == m.entry(j, i).value);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("full non-identity through-parts are flagged, not guessed") {
  RootedTree pair = tree_from_string("()()");
  GramMatrix m = gram_matrix(pair, pair);
  REQUIRE(m.dimension() == 2);  // identity and the swap
  CHECK(m.has_flagged());
  CHECK(m.entry(0, 0).value == kOne);
  CHECK(m.entry(0, 1).flagged);
  CHECK_THROWS_AS(gram_det(m), FlaggedEntry);
}

TEST_CASE("specialisation evaluates exactly") {
  Poly2 locus = kQ * (kQ * kK - kOne);
  CHECK(specialise(locus, 0, Rational(7, 3)) == 0);
  CHECK(specialise(locus, 2, Rational(1, 2)) == 0);
  CHECK(specialise(kOne, Rational(22, 7), Rational(-5, 3)) == 1);
  CHECK(specialise(locus, 2, 1) == 2);
}

TEST_CASE("determinants via Bareiss match cofactor expansion") {
  auto cofactor_det = [](auto&& self, std::vector<std::vector<Poly2>> m)
      -> Poly2 {
    std::size_t n = m.size();
    if (n == 0) return Poly2::one();
    if (n == 1) return m[0][0];
    Poly2 total;
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::vector<Poly2>> minor;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<Poly2> row;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != c) row.push_back(m[i][j]);
        }
        minor.push_back(std::move(row));
      }
      Poly2 term = m[0][c] * self(self, std::move(minor));
      if (c % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
    return total;
  };
  for (const char* fs : {"(())", "()(())"}) {
    RootedTree f = tree_from_string(fs);
    for (int n = 0; n <= f.loops(); ++n) {
      for (const RootedTree& p : enumerate_trees(n)) {
        GramMatrix m = gram_matrix(f, p);
        if (m.has_flagged() || m.dimension() == 0) continue;
        std::vector<std::vector<Poly2>> plain(m.dimension());
        for (int i = 0; i < m.dimension(); ++i) {
          for (int j = 0; j < m.dimension(); ++j) {
            plain[i].push_back(m.entry(i, j).value);
          }
        }
        CHECK(gram_det(m) == cofactor_det(cofactor_det, plain));
      }
    }
  }
}

TEST_CASE("Bareiss elimination handles zero pivots by row swaps") {
  RootedTree f = tree_from_string("()");
  std::vector<Diagram> basis = {identity(f), identity(f)};
  auto entry = [](const Poly2& p) { return GramEntry{p, false}; };
  GramMatrix offdiag(f, f, basis,
                     {{entry(Poly2()), entry(kOne)},
                      {entry(kOne), entry(Poly2())}});
  CHECK(gram_det(offdiag) == -kOne);
  GramMatrix singular(f, f, basis,
                      {{entry(Poly2()), entry(Poly2())},
                       {entry(kQ), entry(kK)}});
  CHECK(gram_det(singular).is_zero());
}

TEST_CASE("factoring scalar polynomials") {
  FactoredScalar f =
      factor_scalar(kQ * kQ * kQ * kK - kQ * kQ);  // q^2 (qk - 1)
  CHECK(f.q_power == 2);
  CHECK(f.k_power == 0);
  CHECK(f.qk_minus_one_power == 1);
  CHECK(f.unit == 1);
  CHECK(f.remainder.is_one());
  CHECK(f.to_string() == "q^2 * (q*k - 1)");

  FactoredScalar c = factor_scalar(Poly2::constant(Rational(-3, 2)));
  CHECK(c.unit == Rational(-3, 2));
  CHECK(c.to_string() == "-3/2");

  FactoredScalar mixed = factor_scalar((kQ * kK - kOne) * (kQ + kOne));
  CHECK(mixed.qk_minus_one_power == 1);
  CHECK(mixed.remainder == kQ + kOne);
}

TEST_CASE("filtration: no composite term climbs in propagating number") {
  RootedTree f = tree_from_string("(())");
  auto homs = enumerate_homs(f, f);
  for (const Diagram& a : homs) {
    for (const Diagram& b : homs) {
      int bound = std::min(a.propagating_number(), b.propagating_number());
      CHECK(compose_sh(a, b).diagram.propagating_number() <= bound);
      for (const Term& t : compose_h(a, b).to_terms()) {
        CHECK(t.diagram.propagating_number() <= bound);
      }
    }
  }
}

TEST_CASE("LinComb arithmetic collects and cancels") {
  RootedTree f = tree_from_string("()");
  Diagram a = diag("()", "()", {{0, 1}});
  LinComb x(f, f);
  x.add(a, kQ);
  x.add(a, -kQ);
  CHECK(x.empty());
  x.add(a, kQ);
  LinComb y(f, f);
  y.add(a, kOne);
  x += y;
  CHECK(x.coefficient(a) == kQ + kOne);
  CHECK(x.scaled(Rational(1, 3)).coefficient(a) ==
        (kQ + kOne).scaled(Rational(1, 3)));
  CHECK(x.scaled(0).empty());
}

TEST_SUITE_END();
