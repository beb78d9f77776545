#include "tl3d/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "tl3d/errors.hpp"

namespace tl3d {

GluingResult compose_oracle(const SetPartition& a, const SetPartition& b) {
  if (a.top_count() != b.bottom_count()) {
    throw ObjectMismatch("oracle: interfaces disagree");
  }
  int s = a.bottom_count();
  int t = a.top_count();
  int u = b.top_count();
  int total = s + t + u;  // labels: S, then the shared T, then U
  std::vector<std::vector<bool>> reach(total,
                                       std::vector<bool>(total, false));
  auto connect = [&](int x, int y) { reach[x][y] = reach[y][x] = true; };
  for (int x = 0; x < total; ++x) reach[x][x] = true;
  for (const auto& block : a.blocks()) {
    for (int x : block) {
      for (int y : block) connect(x, y);  // S and T positions line up
    }
  }
  for (const auto& block : b.blocks()) {
    for (int x : block) {
      for (int y : block) connect(s + x, s + y);
    }
  }
  for (int k = 0; k < total; ++k) {
    for (int i = 0; i < total; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < total; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  std::vector<int> cls(total, -1);
  int classes = 0;
  for (int i = 0; i < total; ++i) {
    if (cls[i] != -1) continue;
    for (int j = 0; j < total; ++j) {
      if (reach[i][j]) cls[j] = classes;
    }
    ++classes;
  }
  std::vector<std::vector<int>> outer(classes);
  for (int i = 0; i < s; ++i) outer[cls[i]].push_back(i);
  for (int j = 0; j < u; ++j) outer[cls[s + t + j]].push_back(s + j);
  std::vector<std::vector<int>> trace_blocks;
  int with_outer = 0;
  for (const auto& block : outer) {
    if (!block.empty()) {
      ++with_outer;
      trace_blocks.push_back(block);
    }
  }
  GluingResult r;
  r.trace = SetPartition(s, u, std::move(trace_blocks));
  r.merged_components = classes;
  r.middle_only_blocks = classes - with_outer;
  return r;
}

std::vector<Diagram> enumerate_homs_oracle(const RootedTree& F,
                                           const RootedTree& Fp) {
  JoinedTree jt(F, Fp);
  std::vector<Diagram> out;
  for (auto& blocks : all_partitions(jt.edge_count())) {
    SetPartition p(F.loops(), Fp.loops(), std::move(blocks));
    if (is_admissible(jt, p)) out.emplace_back(F, Fp, std::move(p));
  }
  std::sort(out.begin(), out.end(), DiagramLess{});
  return out;
}

namespace {

struct Failure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

std::vector<RootedTree> trees_up_to(int max_loops) {
  std::vector<RootedTree> out;
  for (int n = 0; n <= max_loops; ++n) {
    for (RootedTree& t : enumerate_trees(n)) out.push_back(std::move(t));
  }
  return out;
}

// Deterministic hom-set cache keyed by bracket strings.
class HomCache {
public:
  const std::vector<Diagram>& get(const RootedTree& a, const RootedTree& b) {
    std::string key = to_bracket(a).str() + "|" + to_bracket(b).str();
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, enumerate_homs(a, b)).first;
    }
    return it->second;
  }

private:
  std::map<std::string, std::vector<Diagram>> cache_;
};

SetPartition random_partition(int bottom, int top, std::mt19937_64& rng) {
  int n = bottom + top;
  std::vector<std::vector<int>> blocks;
  for (int pos = 0; pos < n; ++pos) {
    std::uniform_int_distribution<std::size_t> pick(0, blocks.size());
    std::size_t b = pick(rng);
    if (b == blocks.size()) {
      blocks.push_back({pos});
    } else {
      blocks[b].push_back(pos);
    }
  }
  return SetPartition(bottom, top, std::move(blocks));
}

long suite_oracle_partitions(std::uint64_t seed) {
  long checks = 0;
  for (int s = 0; s <= 3; ++s) {
    for (int t = 0; t <= 3; ++t) {
      for (int u = 0; u <= 3; ++u) {
        auto lowers = all_partitions(s + t);
        auto uppers = all_partitions(t + u);
        for (const auto& lb : lowers) {
          SetPartition a(s, t, lb);
          for (const auto& ub : uppers) {
            SetPartition b(t, u, ub);
            GluingResult fast = compose(a, b);
            GluingResult slow = compose_oracle(a, b);
            require(fast.trace == slow.trace, "oracle trace mismatch on " +
                                                  a.to_string() + " ; " +
                                                  b.to_string());
            require(fast.merged_components == slow.merged_components,
                    "oracle component count mismatch");
            require(fast.middle_only_blocks == slow.middle_only_blocks,
                    "oracle bubble count mismatch");
            require(fast.middle_only_blocks +
                            fast.trace.block_count() ==
                        fast.merged_components,
                    "merged-class bookkeeping off");
            require(fast.trace.propagating_number() <=
                        std::min(a.propagating_number(),
                                 b.propagating_number()),
                    "propagating number grew under composition");
            ++checks;
          }
        }
      }
    }
  }
  // associativity of traces, exhaustive over every layer ground of size
  // at most three (and a little beyond)
  for (int s = 0; s <= 3; ++s) {
    for (int t = 0; t <= 3 && s + t <= 4; ++t) {
      for (int u = 0; u <= 3 && t + u <= 4; ++u) {
        for (int v = 0; v <= 3 && u + v <= 4; ++v) {
          for (const auto& ab : all_partitions(s + t)) {
            SetPartition a(s, t, ab);
            for (const auto& bb : all_partitions(t + u)) {
              SetPartition b(t, u, bb);
              for (const auto& cb : all_partitions(u + v)) {
                SetPartition c(u, v, cb);
                auto left = compose(compose(a, b).trace, c).trace;
                auto right = compose(a, compose(b, c).trace).trace;
                require(left == right, "trace composition not associative");
                ++checks;
              }
            }
          }
        }
      }
    }
  }
  // random larger grounds
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> side(0, 6);
  for (int i = 0; i < 2000; ++i) {
    int s = side(rng), t = side(rng), u = side(rng), v = side(rng);
    SetPartition a = random_partition(s, t, rng);
    SetPartition b = random_partition(t, u, rng);
    SetPartition c = random_partition(u, v, rng);
    auto left = compose(compose(a, b).trace, c).trace;
    auto right = compose(a, compose(b, c).trace).trace;
    require(left == right, "trace composition not associative (random)");
    GluingResult fast = compose(a, b);
    GluingResult slow = compose_oracle(a, b);
    require(fast.trace == slow.trace &&
                fast.merged_components == slow.merged_components &&
                fast.middle_only_blocks == slow.middle_only_blocks,
            "oracle mismatch on a random ground");
    ++checks;
  }
  return checks;
}

long suite_oracle_homs() {
  long checks = 0;
  for (int na = 0; na <= 5; ++na) {
    for (const RootedTree& a : enumerate_trees(na)) {
      for (int nb = 0; na + nb <= 5; ++nb) {
        for (const RootedTree& b : enumerate_trees(nb)) {
          auto fast = enumerate_homs(a, b);
          auto slow = enumerate_homs_oracle(a, b);
          require(fast.size() == slow.size(),
                  "hom enumeration size differs from the oracle for " +
                      a.display() + " -> " + b.display());
          for (std::size_t i = 0; i < fast.size(); ++i) {
            require(fast[i] == slow[i], "hom enumeration order differs");
          }
          ++checks;
        }
      }
    }
  }
  return checks;
}

struct TripleSampler {
  TripleSampler(int max_loops, std::uint64_t seed)
      : objects(trees_up_to(max_loops)), rng(seed) {}

  Diagram sample_hom(const RootedTree& a, const RootedTree& b) {
    const auto& homs = cache.get(a, b);
    std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
    return homs[pick(rng)];
  }

  const RootedTree& sample_object() {
    std::uniform_int_distribution<std::size_t> pick(0, objects.size() - 1);
    return objects[pick(rng)];
  }

  std::vector<RootedTree> objects;
  HomCache cache;
  std::mt19937_64 rng;
};

long assoc_sh_case(const Diagram& a, const Diagram& b, const Diagram& c) {
  Term ab = compose_sh(a, b);
  Term left = compose_sh(ab.diagram, c);
  left.coeff *= ab.coeff;
  Term bc = compose_sh(b, c);
  Term right = compose_sh(a, bc.diagram);
  right.coeff *= bc.coeff;
  require(left.diagram == right.diagram,
          "sh-composition diagrams not associative");
  require(left.coeff == right.coeff,
          "sh-composition scalars not associative");
  return 1;
}

long assoc_h_case(const Diagram& a, const Diagram& b, const Diagram& c) {
  LinComb left = compose_h_lin(compose_h(a, b), LinComb::single(c));
  LinComb right = compose_h_lin(LinComb::single(a), compose_h(b, c));
  require(left == right, "h-composition not associative");
  return 1;
}

long exhaustive_triples(
    int max_loops, const std::function<long(const Diagram&, const Diagram&,
                                            const Diagram&)>& check) {
  long checks = 0;
  HomCache cache;
  auto objects = trees_up_to(max_loops);
  for (const RootedTree& f0 : objects) {
    for (const RootedTree& f1 : objects) {
      for (const RootedTree& f2 : objects) {
        for (const RootedTree& f3 : objects) {
          for (const Diagram& a : cache.get(f0, f1)) {
            for (const Diagram& b : cache.get(f1, f2)) {
              for (const Diagram& c : cache.get(f2, f3)) {
                checks += check(a, b, c);
              }
            }
          }
        }
      }
    }
  }
  return checks;
}

long random_triples(
    int count, int max_loops, std::uint64_t seed,
    const std::function<long(const Diagram&, const Diagram&, const Diagram&)>&
        check) {
  TripleSampler sampler(max_loops, seed);
  long checks = 0;
  for (int i = 0; i < count; ++i) {
    const RootedTree& f0 = sampler.sample_object();
    const RootedTree& f1 = sampler.sample_object();
    const RootedTree& f2 = sampler.sample_object();
    const RootedTree& f3 = sampler.sample_object();
    Diagram a = sampler.sample_hom(f0, f1);
    Diagram b = sampler.sample_hom(f1, f2);
    Diagram c = sampler.sample_hom(f2, f3);
    checks += check(a, b, c);
  }
  return checks;
}

long suite_assoc_sh(std::uint64_t seed) {
  long checks = exhaustive_triples(2, assoc_sh_case);
  checks += random_triples(1000, 4, seed, assoc_sh_case);
  return checks;
}

long suite_assoc_h(std::uint64_t seed) {
  long checks = exhaustive_triples(2, assoc_h_case);
  checks += random_triples(1000, 4, seed, assoc_h_case);
  return checks;
}

long suite_idempotents() {
  long checks = 0;
  for (const RootedTree& f : trees_up_to(5)) {
    LinComb eta = idempotent(f);
    require(compose_sh_lin(eta, eta) == eta,
            "symmetriser not idempotent on " + f.display());
    ++checks;
  }
  return checks;
}

long suite_functoriality(std::uint64_t seed) {
  long checks = 0;
  // connectivity of a composite equals the composite of connectivities
  TripleSampler sampler(4, seed);
  for (int i = 0; i < 500; ++i) {
    const RootedTree& f0 = sampler.sample_object();
    const RootedTree& f1 = sampler.sample_object();
    const RootedTree& f2 = sampler.sample_object();
    Diagram a = sampler.sample_hom(f0, f1);
    Diagram b = sampler.sample_hom(f1, f2);
    Term t = compose_sh(a, b);
    require(t.diagram.partition == compose(a.partition, b.partition).trace,
            "composite connectivity disagrees with partition composition");
    ++checks;
  }
  // permutation diagrams compose their permutations in application order
  for (const RootedTree& f : trees_up_to(4)) {
    auto sigmas = automorphisms(f);
    for (const EdgePermutation& sigma : sigmas) {
      for (const EdgePermutation& tau : sigmas) {
        Term t = compose_sh(permutation_diagram(f, sigma),
                            permutation_diagram(f, tau));
        require(t.coeff.is_one(),
                "permutation composite acquired a scalar");
        require(t.diagram == permutation_diagram(f, sigma.then(tau)),
                "permutation composite realises the wrong permutation");
        ++checks;
      }
    }
  }
  return checks;
}

long suite_euler(std::uint64_t seed) {
  // Independent recomputation: chi additivity determines g; compare with
  // the component-count route used by compose_sh.
  TripleSampler sampler(4, seed ^ 0x9e3779b97f4a7c15ULL);
  long checks = 0;
  for (int i = 0; i < 1000; ++i) {
    const RootedTree& f0 = sampler.sample_object();
    const RootedTree& f1 = sampler.sample_object();
    const RootedTree& f2 = sampler.sample_object();
    Diagram a = sampler.sample_hom(f0, f1);
    Diagram b = sampler.sample_hom(f1, f2);
    GluingResult glued = compose(a.partition, b.partition);
    long g_components = glued.merged_components -
                        a.partition.block_count() -
                        b.partition.block_count() + f1.loops();
    long chi_a = 2L * a.partition.block_count() - f0.loops() - f1.loops();
    long chi_b = 2L * b.partition.block_count() - f1.loops() - f2.loops();
    long chi_sum = chi_a + chi_b;  // additivity of chi
    long twice_g = 2L * glued.merged_components - f0.loops() - f2.loops() -
                   chi_sum;
    require(twice_g % 2 == 0, "chi route gives a non-integer genus");
    require(twice_g / 2 == g_components,
            "chi route disagrees with the component-count genus");
    require(g_components >= 0 && glued.middle_only_blocks >= 0,
            "negative genus or bubble count");
    ++checks;
  }
  return checks;
}

Poly2 qp(int e) { return Poly2::monomial(e, 0); }

long suite_gram_paper() {
  long checks = 0;
  RootedTree f = tree_from_string("(())");
  const Poly2 one = Poly2::one();
  const Poly2 q = Poly2::var_q();
  const Poly2 k = Poly2::var_k();

  GramMatrix m0 = gram_matrix(f, RootedTree());
  require(m0.dimension() == 2, "section ∅: expected a 2x2 matrix");
  Poly2 expected0[2][2] = {{qp(2), q}, {q, q * k}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      require(!m0.entry(i, j).flagged, "section ∅: flagged entry");
      require(m0.entry(i, j).value == expected0[i][j],
              "section ∅: entry mismatch");
      ++checks;
    }
  }
  require(gram_det(m0) == qp(3) * k - qp(2), "section ∅: det mismatch");

  GramMatrix m1 = gram_matrix(f, tree_from_string("()"));
  require(m1.dimension() == 2, "section (): expected a 2x2 matrix");
  Poly2 expected1[2][2] = {{q, one}, {one, k}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      require(!m1.entry(i, j).flagged, "section (): flagged entry");
      require(m1.entry(i, j).value == expected1[i][j],
              "section (): entry mismatch");
      ++checks;
    }
  }
  require(gram_det(m1) == q * k - one, "section (): det mismatch");

  GramMatrix m2 = gram_matrix(f, f);
  require(m2.dimension() == 1 && m2.entry(0, 0).value == one,
          "section (()): expected (1)");
  ++checks;

  // combined singular locus: q (q k - 1) up to units and multiplicities
  Poly2 product = gram_det(m0) * gram_det(m1) * gram_det(m2);
  FactoredScalar fac = factor_scalar(product);
  require(fac.remainder.is_one() && fac.q_power >= 1 &&
              fac.qk_minus_one_power >= 1 && fac.k_power == 0,
          "combined locus is not q*(q*k - 1) up to units");
  ++checks;

  // generic points are nonsingular, locus points singular
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> num(2, 30);
  Poly2 det0 = gram_det(m0);
  Poly2 det1 = gram_det(m1);
  for (int i = 0; i < 20; ++i) {
    Rational qv(num(rng), num(rng) % 7 + 1);
    Rational kv(num(rng), num(rng) % 7 + 1);
    if (qv == 0 || qv * kv == 1) continue;
    require(specialise(det0, qv, kv) != 0 && specialise(det1, qv, kv) != 0,
            "generic point is singular");
    ++checks;
  }
  for (int i = 0; i < 20; ++i) {
    Rational qv(num(rng), num(rng) % 7 + 1);
    Rational kv = 1 / qv;  // q*k = 1 branch
    require(specialise(det0, qv, kv) == 0 && specialise(det1, qv, kv) == 0,
            "locus point q*k=1 is not singular");
    require(specialise(det0, 0, kv) == 0, "locus point q=0 is not singular");
    ++checks;
  }
  return checks;
}

long suite_hasse_paper() {
  HasseDiagram h = hasse(3);
  std::vector<std::pair<std::string, std::string>> expected = {
      {"", "()"},         {"()", "()()"},     {"()", "(())"},
      {"()()", "()()()"}, {"()()", "()(())"}, {"()()", "((()))"},
      {"(())", "()(())"}, {"(())", "(()())"}, {"(())", "((()))"},
  };
  std::vector<std::pair<std::string, std::string>> actual;
  for (const auto& [lo, up] : h.covers) {
    actual.emplace_back(to_bracket(h.nodes[lo]).str(),
                        to_bracket(h.nodes[up]).str());
  }
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  require(actual == expected, "3-loop Hasse edges differ from the "
                              "reference set");
  return static_cast<long>(expected.size());
}

long suite_propagating(std::string* detail) {
  PropagatingReport report = propagating_experiment(4, 2'000'000);
  if (!report.failures.empty()) throw Failure{report.failures.front()};
  require(report.inconclusive == 0, "bounded search left pairs undecided");
  if (detail) {
    std::ostringstream out;
    out << report.pairs_checked << " ordered pairs; converse "
        << (report.converse_counterexamples.empty()
                ? "held everywhere"
                : "FAILED on " +
                      std::to_string(report.converse_counterexamples.size()) +
                      " pairs, e.g. " + report.converse_counterexamples[0]);
    *detail = out.str();
  }
  return report.pairs_checked;
}

long suite_trees() {
  long checks = 0;
  for (int n = 0; n <= 8; ++n) {
    auto trees = enumerate_trees(n);
    require(BigInt(trees.size()) == count_trees(n),
            "enumeration and recurrence disagree at " + std::to_string(n));
    ++checks;
    for (const RootedTree& t : trees) {
      require(to_tree(to_bracket(t)) == t, "bracket round-trip failed");
      ++checks;
    }
  }
  return checks;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"trees",         "oracle-partitions", "oracle-homs",
          "assoc-sh",      "assoc-h",           "idempotents",
          "functoriality", "euler",             "gram-paper",
          "hasse-paper",   "propagating",       "all"};
}

bool is_suite_name(const std::string& name) {
  auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  SuiteResult r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    if (name == "trees") {
      r.checks = suite_trees();
    } else if (name == "oracle-partitions") {
      r.checks = suite_oracle_partitions(seed);
    } else if (name == "oracle-homs") {
      r.checks = suite_oracle_homs();
    } else if (name == "assoc-sh") {
      r.checks = suite_assoc_sh(seed);
    } else if (name == "assoc-h") {
      r.checks = suite_assoc_h(seed);
    } else if (name == "idempotents") {
      r.checks = suite_idempotents();
    } else if (name == "functoriality") {
      r.checks = suite_functoriality(seed);
    } else if (name == "euler") {
      r.checks = suite_euler(seed);
    } else if (name == "gram-paper") {
      r.checks = suite_gram_paper();
    } else if (name == "hasse-paper") {
      r.checks = suite_hasse_paper();
    } else if (name == "propagating") {
      r.checks = suite_propagating(&r.detail);
    } else if (name == "all") {
      long total = 0;
      for (const std::string& sub : suite_names()) {
        if (sub == "all") continue;
        SuiteResult inner = run_suite(sub, seed);
        total += inner.checks;
        if (!inner.passed) {
          r.checks = total;
          r.passed = false;
          r.detail = inner.name + ": " + inner.detail;
          r.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
          return r;
        }
      }
      r.checks = total;
    } else {
      throw ParseError("unknown suite: " + name);
    }
    r.passed = true;
  } catch (const Failure& f) {
    r.passed = false;
    r.detail = f.message;
  } catch (const CheckViolation& e) {
    r.passed = false;
    r.detail = std::string("internal check violation: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

namespace {

int thread_budget(std::size_t work_items) {
  unsigned hw = std::thread::hardware_concurrency();
  long cap = hw == 0 ? 1 : static_cast<long>(hw);
  if (const char* env = std::getenv("TL3D_THREADS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 1) cap = std::min(cap, parsed);
  }
  cap = std::min<long>(cap, static_cast<long>(work_items));
  return static_cast<int>(std::max<long>(cap, 1));
}

}  // namespace

PropagatingReport propagating_experiment(int max_loops, long max_check) {
  std::vector<RootedTree> objects = trees_up_to(max_loops);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }

  struct PairOutcome {
    bool subfold = false;
    SearchOutcome prop = SearchOutcome::no;
  };
  std::vector<PairOutcome> outcomes(pairs.size());
  int threads = thread_budget(pairs.size());
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      const RootedTree& a = objects[pairs[p].first];
      const RootedTree& b = objects[pairs[p].second];
      outcomes[p].subfold = subfold_leq(a, b);
      outcomes[p].prop = propagating_leq(a, b, max_check);
    }
  };
  if (threads <= 1) {
    worker(0, pairs.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (pairs.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(pairs.size(), begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }

  PropagatingReport report;
  report.pairs_checked = static_cast<long>(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const RootedTree& a = objects[pairs[p].first];
    const RootedTree& b = objects[pairs[p].second];
    const PairOutcome& o = outcomes[p];
    if (o.prop == SearchOutcome::inconclusive) {
      ++report.inconclusive;
      continue;
    }
    bool prop = o.prop == SearchOutcome::yes;
    if (o.subfold && !prop) {
      report.subfold_implies_propagating = false;
      report.failures.push_back(a.display() + " below " + b.display() +
                                " in the sub/fold order but the identity "
                                "does not factor");
    }
    if (prop && !o.subfold) {
      report.converse_counterexamples.push_back(
          a.display() + " factors through " + b.display() +
          " but is not below it in the sub/fold order");
    }
  }
  return report;
}

}  // namespace tl3d
