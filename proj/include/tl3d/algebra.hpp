#pragma once

#include <atomic>
#include <map>
#include <string>
#include <vector>

#include "tl3d/diagrams.hpp"
#include "tl3d/poly2.hpp"

namespace tl3d {

// One scalar multiple of one diagram.
struct Term {
  Poly2 coeff;
  Diagram diagram;
};

// Formal Poly2-linear combination of diagrams in a single hom space.
// Terms are kept collected, zero coefficients dropped, and ordered by
// lex_compare on the underlying partitions.
class LinComb {
public:
  LinComb(RootedTree source, RootedTree target);
  static LinComb single(const Diagram& d, const Poly2& coeff = Poly2::one());

  const RootedTree& source() const noexcept { return source_; }
  const RootedTree& target() const noexcept { return target_; }
  const std::map<SetPartition, Poly2, SetPartitionLess>& terms() const {
    return terms_;
  }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add(const Diagram& d, const Poly2& coeff);
  Poly2 coefficient(const Diagram& d) const;
  LinComb& operator+=(const LinComb& rhs);
  LinComb scaled(const Rational& c) const;
  std::vector<Term> to_terms() const;
  std::string to_string() const;

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ &&
           a.terms_ == b.terms_;
  }

private:
  RootedTree source_, target_;
  std::map<SetPartition, Poly2, SetPartitionLess> terms_;
};

// Composition bottom-to-top: in compose_sh(A, B), A is the lower layer and
// A.target must equal B.source.  The scalar is k^g q^b with
//   g = |A o B| - |A| - |B| + |middle loops|,   b = middle-only classes.
// Composing permutation diagrams this way composes the permutations in
// application order: D_sigma then D_tau realises tau(sigma(.)).
// Always verifies g, b >= 0, Euler additivity (an independent recomputation
// of g), and admissibility of the composite connectivity; violations throw
// CheckViolation.
Term compose_sh(const Diagram& a, const Diagram& b);

LinComb compose_sh_lin(const LinComb& x, const LinComb& y);

// (1/|Sigma_F|) sum of permutation diagrams over automorphisms(F).
LinComb idempotent(const RootedTree& F);

// Least element (by lex_compare) of the orbit
// { D_sigma o d o D_tau : sigma in Sigma_source, tau in Sigma_target }.
// The identity diagram is the canonical element of its own orbit.
Diagram h_canonical(const Diagram& d);

// Symmetrised composition: averages compose3(A, D_sigma, B) over Sigma_F
// with the three-layer scalar rule, collecting terms on h-canonical
// representatives.
LinComb compose_h(const Diagram& a, const Diagram& b);

LinComb compose_h_lin(const LinComb& x, const LinComb& y);

struct GramEntry {
  Poly2 value;
  bool flagged = false;  // full but non-identity through-part
};

class GramMatrix {
public:
  GramMatrix(RootedTree object, RootedTree section, std::vector<Diagram> basis,
             std::vector<std::vector<GramEntry>> entries);

  const RootedTree& object() const noexcept { return object_; }
  const RootedTree& section() const noexcept { return section_; }
  const std::vector<Diagram>& basis() const noexcept { return basis_; }
  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  const GramEntry& entry(int i, int j) const { return entries_[i][j]; }
  bool has_flagged() const;

private:
  RootedTree object_, section_;
  std::vector<Diagram> basis_;
  std::vector<std::vector<GramEntry>> entries_;
};

// Basis: diagrams in hom(F, P) whose propagating number is |P| (full on P).
// Entry (i,j) is the coefficient c with flip(h_i) o h_j = c * identity(P);
// 0 when the composite is not full; flagged when full but not the identity.
GramMatrix gram_matrix(const RootedTree& F, const RootedTree& P);

// Exact determinant by fraction-free Bareiss elimination over Poly2.
// The 0x0 matrix has determinant 1.  Throws FlaggedEntry if any entry
// is flagged.
Poly2 gram_det(const GramMatrix& m);

Rational specialise(const Poly2& p, const Rational& q_value,
                    const Rational& k_value);

// p = unit * q^a * k^b * (q*k - 1)^c * remainder with the remainder not
// divisible by any of the three factors.
struct FactoredScalar {
  Rational unit = 1;
  int q_power = 0;
  int k_power = 0;
  int qk_minus_one_power = 0;
  Poly2 remainder = Poly2::one();
  std::string to_string() const;
};

FactoredScalar factor_scalar(const Poly2& p);

namespace internal {
// Number of composites whose Euler cross-check has run (instrumentation
// for the verification suites).
std::atomic<long>& euler_check_count();
}  // namespace internal

}  // namespace tl3d
