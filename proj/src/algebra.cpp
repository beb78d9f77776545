#include "tl3d/algebra.hpp"

#include <sstream>

#include "tl3d/errors.hpp"

namespace tl3d {

namespace internal {
std::atomic<long>& euler_check_count() {
  static std::atomic<long> count{0};
  return count;
}
}  // namespace internal

LinComb::LinComb(RootedTree source, RootedTree target)
    : source_(std::move(source)), target_(std::move(target)) {}

LinComb LinComb::single(const Diagram& d, const Poly2& coeff) {
  LinComb out(d.source, d.target);
  out.add(d, coeff);
  return out;
}

void LinComb::add(const Diagram& d, const Poly2& coeff) {
  if (d.source != source_ || d.target != target_) {
    throw ObjectMismatch("term does not live in hom(" + source_.display() +
                         ", " + target_.display() + ")");
  }
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(d.partition, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly2 LinComb::coefficient(const Diagram& d) const {
  auto it = terms_.find(d.partition);
  return it == terms_.end() ? Poly2() : it->second;
}

LinComb& LinComb::operator+=(const LinComb& rhs) {
  if (rhs.source_ != source_ || rhs.target_ != target_) {
    throw ObjectMismatch("sum across different hom spaces");
  }
  for (const auto& [part, coeff] : rhs.terms_) {
    auto [it, fresh] = terms_.try_emplace(part, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LinComb LinComb::scaled(const Rational& c) const {
  LinComb out(source_, target_);
  if (c == 0) return out;
  for (const auto& [part, coeff] : terms_) {
    out.terms_.emplace(part, coeff.scaled(c));
  }
  return out;
}

std::vector<Term> LinComb::to_terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [part, coeff] : terms_) {
    out.push_back(Term{coeff, Diagram(source_, target_, part)});
  }
  return out;
}

std::string LinComb::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [part, coeff] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (coeff.is_one()) {
      out << part.to_string();
    } else if (coeff.is_constant() || coeff.terms().size() == 1) {
      out << coeff.to_string() << " × " << part.to_string();
    } else {
      out << "(" << coeff.to_string() << ") × " << part.to_string();
    }
  }
  return out.str();
}

namespace {

// g from the component count route must agree with the Euler
// characteristic route; both factors are minimal so chi = 2|.| - boundary.
void euler_cross_check(int g, int merged, const std::vector<int>& block_counts,
                       const std::vector<int>& boundary_sizes) {
  long chi_parts = 0;
  for (std::size_t i = 0; i < block_counts.size(); ++i) {
    chi_parts += 2L * block_counts[i] - boundary_sizes[i] -
                 boundary_sizes[i + 1];
  }
  long chi_composite = 2L * merged - 2L * g - boundary_sizes.front() -
                       boundary_sizes.back();
  if (chi_parts != chi_composite) {
    throw CheckViolation("Euler characteristic is not additive on this "
                         "composite");
  }
  internal::euler_check_count().fetch_add(1, std::memory_order_relaxed);
}

Term scalar_term(const RootedTree& src, const RootedTree& tgt,
                 const GluingResult& glued,
                 const std::vector<int>& block_counts,
                 const std::vector<int>& boundary_sizes) {
  int total_blocks = 0;
  for (int c : block_counts) total_blocks += c;
  int total_middle = 0;
  for (std::size_t i = 1; i + 1 < boundary_sizes.size(); ++i) {
    total_middle += boundary_sizes[i];
  }
  int g = glued.merged_components - total_blocks + total_middle;
  int b = glued.middle_only_blocks;
  if (g < 0 || b < 0) {
    throw CheckViolation("negative handle or bubble count on a composite");
  }
  euler_cross_check(g, glued.merged_components, block_counts, boundary_sizes);
  // Diagram construction re-checks admissibility of the composite
  // connectivity; failure there is a reportable finding.
  return Term{Poly2::monomial(b, g), Diagram(src, tgt, glued.trace)};
}

}  // namespace

Term compose_sh(const Diagram& a, const Diagram& b) {
  if (a.target != b.source) {
    throw ObjectMismatch("cannot compose through " + a.target.display() +
                         " against " + b.source.display());
  }
  GluingResult glued = compose(a.partition, b.partition);
  return scalar_term(a.source, b.target, glued,
                     {a.partition.block_count(), b.partition.block_count()},
                     {a.source.loops(), a.target.loops(), b.target.loops()});
}

LinComb compose_sh_lin(const LinComb& x, const LinComb& y) {
  if (x.target() != y.source()) {
    throw ObjectMismatch("cannot compose through " + x.target().display() +
                         " against " + y.source().display());
  }
  LinComb out(x.source(), y.target());
  for (const auto& [xp, xc] : x.terms()) {
    Diagram dx(x.source(), x.target(), xp);
    for (const auto& [yp, yc] : y.terms()) {
      Term t = compose_sh(dx, Diagram(y.source(), y.target(), yp));
      out.add(t.diagram, t.coeff * xc * yc);
    }
  }
  return out;
}

LinComb idempotent(const RootedTree& F) {
  std::vector<EdgePermutation> sigmas = automorphisms(F);
  LinComb out(F, F);
  Rational weight(1, static_cast<long>(sigmas.size()));
  for (const EdgePermutation& sigma : sigmas) {
    out.add(permutation_diagram(F, sigma), Poly2::constant(weight));
  }
  return out;
}

namespace {

// Connectivity of D_sigma o d o D_tau: bottom loop i joins the block that
// owned sigma(i); top loop j moves to tau(j).
SetPartition relabelled(const SetPartition& p, const EdgePermutation& sigma,
                        const EdgePermutation& tau) {
  int nb = p.bottom_count();
  EdgePermutation sigma_inv = sigma.inverse();
  std::vector<std::vector<int>> blocks;
  blocks.reserve(p.block_count());
  for (const auto& block : p.blocks()) {
    std::vector<int> nb_block;
    nb_block.reserve(block.size());
    for (int pos : block) {
      if (pos < nb) {
        nb_block.push_back(sigma_inv(pos + 1) - 1);
      } else {
        nb_block.push_back(nb + tau(pos - nb + 1) - 1);
      }
    }
    blocks.push_back(std::move(nb_block));
  }
  return SetPartition(nb, p.top_count(), std::move(blocks));
}

}  // namespace

Diagram h_canonical(const Diagram& d) {
  std::vector<EdgePermutation> left = automorphisms(d.source);
  std::vector<EdgePermutation> right = automorphisms(d.target);
  const SetPartition* best = &d.partition;
  SetPartition candidate;
  SetPartition best_storage;
  for (const EdgePermutation& sigma : left) {
    for (const EdgePermutation& tau : right) {
      candidate = relabelled(d.partition, sigma, tau);
      if (lex_compare(candidate, *best) < 0) {
        best_storage = std::move(candidate);
        best = &best_storage;
      }
    }
  }
  return Diagram(d.source, d.target, *best);
}

LinComb compose_h(const Diagram& a, const Diagram& b) {
  if (a.target != b.source) {
    throw ObjectMismatch("cannot compose through " + a.target.display() +
                         " against " + b.source.display());
  }
  const RootedTree& F = a.target;
  std::vector<EdgePermutation> sigmas = automorphisms(F);
  Rational weight(1, static_cast<long>(sigmas.size()));
  LinComb out(a.source, b.target);
  for (const EdgePermutation& sigma : sigmas) {
    Diagram mid = permutation_diagram(F, sigma);
    GluingResult glued = compose3(a.partition, mid.partition, b.partition);
    Term t = scalar_term(
        a.source, b.target, glued,
        {a.partition.block_count(), mid.partition.block_count(),
         b.partition.block_count()},
        {a.source.loops(), F.loops(), F.loops(), b.target.loops()});
    out.add(h_canonical(t.diagram), t.coeff.scaled(weight));
  }
  return out;
}

LinComb compose_h_lin(const LinComb& x, const LinComb& y) {
  if (x.target() != y.source()) {
    throw ObjectMismatch("cannot compose through " + x.target().display() +
                         " against " + y.source().display());
  }
  LinComb out(x.source(), y.target());
  for (const auto& [xp, xc] : x.terms()) {
    Diagram dx(x.source(), x.target(), xp);
    for (const auto& [yp, yc] : y.terms()) {
      LinComb part = compose_h(dx, Diagram(y.source(), y.target(), yp));
      for (const auto& [pp, pc] : part.terms()) {
        out.add(Diagram(out.source(), out.target(), pp), pc * xc * yc);
      }
    }
  }
  return out;
}

GramMatrix::GramMatrix(RootedTree object, RootedTree section,
                       std::vector<Diagram> basis,
                       std::vector<std::vector<GramEntry>> entries)
    : object_(std::move(object)), section_(std::move(section)),
      basis_(std::move(basis)), entries_(std::move(entries)) {}

bool GramMatrix::has_flagged() const {
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (e.flagged) return true;
    }
  }
  return false;
}

GramMatrix gram_matrix(const RootedTree& F, const RootedTree& P) {
  std::vector<Diagram> basis;
  for (Diagram& d : enumerate_homs(F, P)) {
    if (d.propagating_number() == P.loops()) basis.push_back(std::move(d));
  }
  int n = static_cast<int>(basis.size());
  SetPartition ident = SetPartition::identity(P.loops());
  std::vector<std::vector<GramEntry>> entries(
      n, std::vector<GramEntry>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    Diagram flipped = flip(basis[i]);
    for (int j = 0; j < n; ++j) {
      Term t = compose_sh(flipped, basis[j]);
      GramEntry& e = entries[i][j];
      if (t.diagram.partition == ident) {
        e.value = t.coeff;
      } else if (t.diagram.propagating_number() < P.loops()) {
        e.value = Poly2();
      } else {
        e.flagged = true;
      }
    }
  }
  return GramMatrix(F, P, std::move(basis), std::move(entries));
}

Poly2 gram_det(const GramMatrix& m) {
  if (m.has_flagged()) {
    throw FlaggedEntry("Gram matrix for section " + m.section().display() +
                       " has flagged entries; its determinant is not "
                       "defined here");
  }
  int n = m.dimension();
  if (n == 0) return Poly2::one();
  std::vector<std::vector<Poly2>> a(n, std::vector<Poly2>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.entry(i, j).value;
  }
  // Bareiss fraction-free elimination; every division is exact.
  Poly2 prev = Poly2::one();
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!a[i][k].is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot == -1) return Poly2();  // zero column, zero determinant
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divided_exact(prev);
      }
      a[i][k] = Poly2();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Rational specialise(const Poly2& p, const Rational& q_value,
                    const Rational& k_value) {
  return p.evaluate(q_value, k_value);
}

std::string FactoredScalar::to_string() const {
  std::ostringstream out;
  bool wrote = false;
  auto sep = [&]() {
    if (wrote) out << " * ";
    wrote = true;
  };
  if (unit != 1) {
    sep();
    out << tl3d::to_string(unit);
  }
  auto power = [&](const std::string& base, int e) {
    if (e == 0) return;
    sep();
    out << base;
    if (e > 1) out << "^" << e;
  };
  power("q", q_power);
  power("k", k_power);
  power("(q*k - 1)", qk_minus_one_power);
  if (!remainder.is_one()) {
    sep();
    out << "(" << remainder.to_string() << ")";
  }
  if (!wrote) out << "1";
  return out.str();
}

FactoredScalar factor_scalar(const Poly2& p) {
  FactoredScalar f;
  if (p.is_zero()) {
    f.remainder = Poly2();
    return f;
  }
  f.q_power = p.min_q_exponent();
  f.k_power = p.min_k_exponent();
  Poly2 rest;
  for (const auto& [key, c] : p.terms()) {
    rest += Poly2::monomial(key.first - f.q_power, key.second - f.k_power, c);
  }
  Poly2 qk1 = Poly2::var_q() * Poly2::var_k() - Poly2::one();
  while (!rest.is_constant()) {
    try {
      Poly2 quotient = rest.divided_exact(qk1);
      rest = quotient;
      ++f.qk_minus_one_power;
    } catch (const CheckViolation&) {
      break;
    }
  }
  if (rest.is_constant()) {
    f.unit = rest.coefficient(0, 0);
    f.remainder = Poly2::one();
  } else {
    f.remainder = rest;
  }
  return f;
}

}  // namespace tl3d
