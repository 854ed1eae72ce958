#pragma once

#include <chrono>
#include <random>

#include "spherical/classify.hpp"
#include "spherical/poset.hpp"

namespace spherical {

/// One random fixture for the support-poset properties: a standard Coxeter
/// element c with no left descent in I, a partition lambda, and a split
/// partition gamma straightened from a random monomial of kappa_{c lambda}.
struct PosetInstance {
  int n = 0;
  Permutation c = Permutation::identity(1);
  std::vector<int> I;
  Composition lambda;
  SplitPartition gamma;
  Composition clam;
  SparsePoly kappa = SparsePoly::zero(1);
};

inline std::optional<PosetInstance> random_poset_instance(std::mt19937& rng, int max_n = 6,
                                                          int max_part = 0) {
  PosetInstance inst;
  inst.n = std::uniform_int_distribution<int>(3, max_n)(rng);
  const int n = inst.n;
  if (max_part == 0) max_part = n;
  std::uniform_int_distribution<int> coin100(1, 100);

  // block structure first: every index is a divider with probability 1/4,
  // so I keeps long runs most of the time
  std::vector<int> D;
  for (int d = 1; d < n; ++d)
    if (coin100(rng) <= 25) D.push_back(d);
  for (int i = 1; i < n; ++i)
    if (std::find(D.begin(), D.end(), i) == D.end()) inst.I.push_back(i);

  // c must be a standard Coxeter element with no left descent inside I,
  // making w = w0(I) c length-additive. Try random ones, then fall back to a
  // concatenation of increasing runs whose minima are dividers (for a word
  // with distinct letters, the left descents are letters with no neighbor
  // earlier in the word, so such runs keep every descent inside D).
  auto letters_to_perm = [&](const Word& letters) {
    Permutation c = Permutation::identity(n);
    for (int i : letters) c = right_mult_simple(c, i);
    return c;
  };
  auto descents_avoid_I = [&](const Permutation& c) {
    const auto J = left_descents(c);
    for (int i : inst.I)
      if (std::find(J.begin(), J.end(), i) != J.end()) return false;
    return true;
  };
  bool have_c = false;
  for (int attempt = 0; attempt < 10 && !have_c; ++attempt) {
    Word letters;
    for (int i = 1; i < n; ++i)
      if (coin100(rng) <= 60) letters.push_back(i);
    std::shuffle(letters.begin(), letters.end(), rng);
    const Permutation c = letters_to_perm(letters);
    if (descents_avoid_I(c)) {
      inst.c = c;
      have_c = true;
    }
  }
  if (!have_c) {
    std::vector<Word> runs;
    for (size_t t = 0; t < D.size(); ++t) {
      if (coin100(rng) > 90) continue;
      const int stop = (t + 1 < D.size()) ? D[t + 1] - 1 : n - 1;
      const int end = std::uniform_int_distribution<int>(D[t], stop)(rng);
      Word run;
      for (int i = D[t]; i <= end; ++i) run.push_back(i);
      runs.push_back(std::move(run));
    }
    std::shuffle(runs.begin(), runs.end(), rng);
    Word letters;
    for (const auto& run : runs) letters.insert(letters.end(), run.begin(), run.end());
    inst.c = letters_to_perm(letters);
    if (!descents_avoid_I(inst.c)) return std::nullopt;
  }

  // lambda with spread-out parts gives the richest supports; a staircase
  // multiplier of 2 reaches the larger straightening classes, 0 keeps the
  // degenerate repeats in the mix
  inst.lambda.resize(static_cast<size_t>(n));
  const int roll = coin100(rng);
  const int step = roll <= 20 ? 0 : (roll <= 60 ? 1 : 2);
  for (int i = 0; i < n; ++i)
    inst.lambda[static_cast<size_t>(i)] =
        std::uniform_int_distribution<int>(0, max_part)(rng) + step * (n - 1 - i);
  std::sort(inst.lambda.begin(), inst.lambda.end(), std::greater<int>());
  inst.clam = act(inst.c, inst.lambda);
  inst.kappa = key_demazure(inst.clam);
  // group the support by straightened class; usually take the largest class
  // (the interesting posets), otherwise a term-weighted random one
  const BlockStructure bs = BlockStructure::from_I(inst.I, n);
  std::map<SplitPartition, long> classes;
  for (const auto& [e, coeff] : inst.kappa.terms())
    if (auto st = straighten(e.to_composition(n), bs)) ++classes[st->gamma];
  if (classes.empty()) return std::nullopt;
  if (coin100(rng) <= 70) {
    auto best = classes.begin();
    for (auto it = classes.begin(); it != classes.end(); ++it)
      if (it->second > best->second) best = it;
    inst.gamma = best->first;
  } else {
    long total = 0;
    for (const auto& [gamma, count] : classes) total += count;
    long pick = std::uniform_int_distribution<long>(0, total - 1)(rng);
    for (const auto& [gamma, count] : classes) {
      pick -= count;
      if (pick < 0) {
        inst.gamma = gamma;
        break;
      }
    }
  }
  return inst;
}

/// Structural properties of P_{c lambda, gamma} on random instances:
/// diamond property, unique maximum, Bruhat-interval shape, and zero
/// Moebius sum whenever the poset has more than one element.
inline VerifyReport verify_posets(int instances, unsigned seed = 12345, int max_n = 6,
                                  int jobs = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  report.n = max_n;
  std::mt19937 rng(seed);
  std::vector<PosetInstance> fixtures;
  while (static_cast<int>(fixtures.size()) < instances) {
    if (auto inst = random_poset_instance(rng, max_n)) fixtures.push_back(std::move(*inst));
  }
  std::mutex out_mutex;
  detail::parallel_for(static_cast<long>(fixtures.size()), jobs, [&](long i) {
    const auto& inst = fixtures[static_cast<size_t>(i)];
    const BlockStructure bs = BlockStructure::from_I(inst.I, inst.n);
    const SphericalPoset P = build_support_poset(inst.clam, inst.gamma, bs, inst.kappa);
    auto fail = [&](const std::string& kind) {
      std::lock_guard<std::mutex> lock(out_mutex);
      report.disagreements.push_back({inst.c, inst.I, inst.lambda, kind});
    };
    if (P.size() == 0) {
      fail("support poset lost its own gamma");
      return;
    }
    if (!check_diamond(P)) fail("diamond property fails");
    const IntervalCheck ic = check_interval(P);
    if (!ic.unique_max) fail("no unique maximum");
    else if (!ic.ok) fail("not a Bruhat interval: " + ic.message);
    const Coeff mu = mobius_sum(P);
    if (P.size() == 1 ? mu != 1 : mu != 0) fail("Moebius sum is wrong");
  });
  report.cases = static_cast<long>(fixtures.size());
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

/// The combinatorial facts behind the diamond property, on random instances:
/// pattern avoidance of c lambda, the going-up criterion against direct
/// support membership, the prefix overflow bound, and the exclusion of two
/// interweaved raises landing inside the poset together.
inline VerifyReport verify_section6(int instances, unsigned seed = 54321, int max_n = 6,
                                    int jobs = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  report.n = max_n;
  std::mt19937 rng(seed);
  std::vector<PosetInstance> fixtures;
  while (static_cast<int>(fixtures.size()) < instances) {
    if (auto inst = random_poset_instance(rng, max_n)) fixtures.push_back(std::move(*inst));
  }
  std::mutex out_mutex;
  detail::parallel_for(static_cast<long>(fixtures.size()), jobs, [&](long idx) {
    const auto& inst = fixtures[static_cast<size_t>(idx)];
    const BlockStructure bs = BlockStructure::from_I(inst.I, inst.n);
    auto fail = [&](const std::string& kind) {
      std::lock_guard<std::mutex> lock(out_mutex);
      report.disagreements.push_back({inst.c, inst.I, inst.lambda, kind});
    };
    // c lambda avoids 012, 1032, 0011, 0021, 1022
    for (const Composition& pat :
         {Composition{0, 1, 2}, Composition{1, 0, 3, 2}, Composition{0, 0, 1, 1},
          Composition{0, 0, 2, 1}, Composition{1, 0, 2, 2}}) {
      if (static_cast<int>(pat.size()) <= inst.n && contains_comp_pattern(inst.clam, pat))
        fail("c lambda contains a forbidden composition pattern");
    }
    const SphericalPoset P = build_support_poset(inst.clam, inst.gamma, bs, inst.kappa);
    const StructureStats st = structure_stats(inst.clam, bs);
    for (int v = 0; v < P.size(); ++v) {
      const Composition& beta = P.node(v);
      // prefix overflow bound for every node
      long pref_beta = 0, pref_clam = 0;
      for (int i = 1; i < inst.n; ++i) {
        pref_beta += beta[static_cast<size_t>(i - 1)];
        pref_clam += inst.clam[static_cast<size_t>(i - 1)];
        const long bound = std::max(
            st.rightmax[static_cast<size_t>(i)] - st.leftmin[static_cast<size_t>(i - 1)], 0);
        if (bound < pref_beta - pref_clam) {
          fail("prefix overflow bound fails");
          break;
        }
      }
      // going-up criterion == direct membership, for every raising pair
      for (int t = 1; t <= bs.block_count(); ++t) {
        auto [lo, hi] = bs.block_range(t);
        for (int i = lo; i <= hi; ++i)
          for (int j = i + 1; j <= hi; ++j) {
            if (beta[static_cast<size_t>(i - 1)] - i <= beta[static_cast<size_t>(j - 1)] - j)
              continue;
            const bool predicted = goingup_allows(beta, i, j, inst.clam, bs);
            const bool member = inst.kappa.coeff_of(t_shift(beta, i, j)) != 0;
            if (predicted != member) fail("going-up criterion disagrees with membership");
          }
      }
      // two interweaved raising moves cannot both stay in the poset
      for (const auto& a : st.interweaved)
        for (const auto& b : st.interweaved) {
          if (!(a.i < b.i && b.i < a.j && a.j < b.j)) continue;
          if (!bs.same_block(a.i, b.j)) continue;
          const bool raise_a =
              beta[static_cast<size_t>(a.i - 1)] - a.i > beta[static_cast<size_t>(a.j - 1)] - a.j;
          const bool raise_b =
              beta[static_cast<size_t>(b.i - 1)] - b.i > beta[static_cast<size_t>(b.j - 1)] - b.j;
          if (!raise_a || !raise_b) continue;
          const bool in_a = inst.kappa.coeff_of(t_shift(beta, a.i, a.j)) != 0;
          const bool in_b = inst.kappa.coeff_of(t_shift(beta, b.i, b.j)) != 0;
          if (in_a && in_b) fail("two interweaved raises both land in the poset");
        }
    }
  });
  report.cases = static_cast<long>(fixtures.size());
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

}  // namespace spherical
