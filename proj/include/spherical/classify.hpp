#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "spherical/composition.hpp"
#include "spherical/key_polynomial.hpp"
#include "spherical/permutation.hpp"
#include "spherical/split_schur.hpp"

namespace spherical {

inline void require_I_in_descents(const Permutation& w, const std::vector<int>& I) {
  const auto J = left_descents(w);
  for (int i : I)
    if (std::find(J.begin(), J.end(), i) == J.end())
      throw std::invalid_argument("I is not contained in the left descent set J(w)");
}

/// w is I-spherical iff w0(I) w is a standard Coxeter element.
inline bool is_spherical_coxeter(const Permutation& w, const std::vector<int>& I) {
  require_I_in_descents(w, I);
  const Permutation u = longest_element(I, w.n()) * w;
  return is_standard_coxeter(u).has_value();
}

/// (S.1) every s_d with d outside I appears at most once;
/// (S.2) for every block, strictly fewer interior letters than binom(size+1, 2).
inline bool witness_conditions_hold(const Word& word, const std::vector<int>& I, int n) {
  const BlockStructure bs = BlockStructure::from_I(I, n);
  std::vector<int> letter_count(static_cast<size_t>(n), 0);
  for (int j : word) ++letter_count[static_cast<size_t>(j)];
  for (int d : bs.dividers())
    if (letter_count[static_cast<size_t>(d)] > 1) return false;
  for (int t = 1; t <= bs.block_count(); ++t) {
    auto [lo, hi] = bs.block_range(t);
    const int m = hi - lo + 1;
    int interior = 0;
    for (int j = lo; j < hi; ++j) interior += letter_count[static_cast<size_t>(j)];
    if (!(interior < m * (m + 1) / 2)) return false;
  }
  return true;
}

/// Searches for an I-witness of w of the form R = R' R'' with R' the canonical
/// reduced word of w0(I) and R'' a reduced word of u = w0(I) w. Restricting to
/// this shape loses nothing, and on the suffix the witness conditions become:
/// each divider letter at most once, and per block fewer interior letters than
/// the block size. The walk over Red(u) prunes on those remaining budgets.
inline std::optional<Word> find_witness(const Permutation& w, const std::vector<int>& I) {
  require_I_in_descents(w, I);
  const int n = w.n();
  const BlockStructure bs = BlockStructure::from_I(I, n);
  const Permutation w0I = longest_element(I, n);
  const Permutation u = w0I * w;

  struct Budgeted {
    const BlockStructure& bs;
    std::vector<int> divider_budget;  // indexed by letter
    std::vector<int> interior_budget; // indexed by block (1-based)
    std::optional<Word> found;

    bool enter(int j) {
      const int t = bs.block_of(j);
      auto [lo, hi] = bs.block_range(t);
      if (j == hi) {  // j is the divider d_t
        if (divider_budget[static_cast<size_t>(j)] == 0) return false;
        --divider_budget[static_cast<size_t>(j)];
      } else {
        if (interior_budget[static_cast<size_t>(t)] == 0) return false;
        --interior_budget[static_cast<size_t>(t)];
      }
      return true;
    }
    void leave(int j) {
      const int t = bs.block_of(j);
      auto [lo, hi] = bs.block_range(t);
      if (j == hi) ++divider_budget[static_cast<size_t>(j)];
      else ++interior_budget[static_cast<size_t>(t)];
    }
    bool word_done(const Word& word) {
      found = word;
      return false;  // first hit wins
    }
  };

  Budgeted visitor{bs, std::vector<int>(static_cast<size_t>(n), 1),
                   std::vector<int>(static_cast<size_t>(bs.block_count() + 1), 0),
                   std::nullopt};
  for (int t = 1; t <= bs.block_count(); ++t)
    visitor.interior_budget[static_cast<size_t>(t)] = bs.block_size(t) - 1;
  walk_reduced_words(u, visitor);
  if (!visitor.found) return std::nullopt;
  Word witness = canonical_reduced_word(w0I);
  witness.insert(witness.end(), visitor.found->begin(), visitor.found->end());
  return witness;
}

/// D-Schur expansion of kappa_{w lambda}: since I lies in J(w), w factors
/// length-additively as w0(I) u, and the expansion is the term-wise
/// straightening of kappa_{u lambda}.
inline DSchurExpansion expand_key(const Permutation& w, const std::vector<int>& I,
                                  const Composition& lambda, bool use_kohnert = false) {
  require_I_in_descents(w, I);
  const BlockStructure bs = BlockStructure::from_I(I, w.n());
  const Permutation u = longest_element(I, w.n()) * w;
  const Composition ulam = act(u, lambda);
  return dschur_expand(use_kohnert ? key_kohnert(ulam) : key_demazure(ulam), bs);
}

struct CounterexampleWitness {
  Composition lambda;
  SplitPartition gamma;
  int pattern_case = 0;  // 1: u contains 321; 2: u avoids 321, contains 3412
};

/// For non-I-spherical w, produces (lambda, gamma) with [s_gamma] kappa_{w lambda} >= 2.
/// Case 1 (u contains 321): lambda with parts in {2,1,0} so that u lambda shows
/// the values 0,1,2; gamma = (u lambda + e_p - e_r)|_D. Case 2 (u avoids 321,
/// contains 3412): parts in {3,2,1,0} showing 1,0,3,2; gamma = (u lambda
/// + e_p + e_q - e_r - e_z)|_D. Pattern windows are chosen of minimal width.
inline CounterexampleWitness construct_witness(const Permutation& w, const std::vector<int>& I) {
  require_I_in_descents(w, I);
  const int n = w.n();
  const BlockStructure bs = BlockStructure::from_I(I, n);
  const Permutation u = longest_element(I, n) * w;
  if (is_standard_coxeter(u))
    throw std::invalid_argument("w is I-spherical; no multiplicity witness exists");

  CounterexampleWitness out;
  Composition ulam;
  if (contains_pattern(u, Permutation({3, 2, 1}))) {
    out.pattern_case = 1;
    // first 321 occurrence fixes the two thresholds of lambda
    int i1 = 0, i2 = 0;
    [&] {
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          for (int c = b + 1; c <= n; ++c)
            if (u(a) > u(b) && u(b) > u(c)) {
              i1 = a;
              i2 = b;
              return;
            }
    }();
    out.lambda.resize(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
      out.lambda[static_cast<size_t>(j - 1)] = j <= i1 ? 2 : (j <= i2 ? 1 : 0);
    ulam = act(u, out.lambda);
    // minimal-width occurrence of the values 0,1,2
    int bp = -1, br = -1;
    for (int p2 = 1; p2 <= n; ++p2) {
      if (ulam[static_cast<size_t>(p2 - 1)] != 0) continue;
      for (int q = p2 + 1; q <= n; ++q) {
        if (ulam[static_cast<size_t>(q - 1)] != 1) continue;
        for (int r2 = q + 1; r2 <= n; ++r2) {
          if (ulam[static_cast<size_t>(r2 - 1)] != 2) continue;
          if (bp < 0 || r2 - p2 < br - bp) { bp = p2; br = r2; }
        }
      }
    }
    int p = bp, r = br;
    while (p > 1 && ulam[static_cast<size_t>(p - 2)] == 0) --p;
    while (r < n && ulam[static_cast<size_t>(r)] == 2) ++r;
    Composition g = ulam;
    ++g[static_cast<size_t>(p - 1)];
    --g[static_cast<size_t>(r - 1)];
    out.gamma = SplitPartition::from_composition(g, bs);
  } else {
    out.pattern_case = 2;
    int i1 = 0, i2 = 0, i3 = 0;
    [&] {
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          for (int c = b + 1; c <= n; ++c)
            for (int d = c + 1; d <= n; ++d)
              if (u(c) < u(d) && u(d) < u(a) && u(a) < u(b)) {
                i1 = a;
                i2 = b;
                i3 = c;
                return;
              }
    }();
    if (i1 == 0) throw std::logic_error("non-Coxeter element avoids both 321 and 3412");
    out.lambda.resize(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
      out.lambda[static_cast<size_t>(j - 1)] = j <= i1 ? 3 : (j <= i2 ? 2 : (j <= i3 ? 1 : 0));
    ulam = act(u, out.lambda);
    // minimal-width occurrence of the values 1,0,3,2
    int bp = -1, bz = -1;
    for (int p2 = 1; p2 <= n; ++p2) {
      if (ulam[static_cast<size_t>(p2 - 1)] != 1) continue;
      for (int q2 = p2 + 1; q2 <= n; ++q2) {
        if (ulam[static_cast<size_t>(q2 - 1)] != 0) continue;
        for (int r2 = q2 + 1; r2 <= n; ++r2) {
          if (ulam[static_cast<size_t>(r2 - 1)] != 3) continue;
          for (int z2 = r2 + 1; z2 <= n; ++z2) {
            if (ulam[static_cast<size_t>(z2 - 1)] != 2) continue;
            if (bp < 0 || z2 - p2 < bz - bp) { bp = p2; bz = z2; }
          }
        }
      }
    }
    int p = bp, z = bz;
    while (p > 1 && ulam[static_cast<size_t>(p - 2)] == 1) --p;
    while (z < n && ulam[static_cast<size_t>(z)] == 2) ++z;
    int q = 0, r = 0;
    for (int k = p + 1; k <= n; ++k)
      if (ulam[static_cast<size_t>(k - 1)] == 0) { q = k; break; }
    for (int k = z - 1; k >= 1; --k)
      if (ulam[static_cast<size_t>(k - 1)] == 3) { r = k; break; }
    Composition g = ulam;
    ++g[static_cast<size_t>(p - 1)];
    ++g[static_cast<size_t>(q - 1)];
    --g[static_cast<size_t>(r - 1)];
    --g[static_cast<size_t>(z - 1)];
    out.gamma = SplitPartition::from_composition(g, bs);
  }
  return out;
}

/// All partitions with at most n parts, each part at most bound (zeros allowed).
inline std::vector<Composition> partitions_bounded(int n, int bound) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(int)> rec = [&](int maxpart) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = maxpart; v >= 0; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(bound);
  return out;
}

struct Disagreement {
  Permutation w;
  std::vector<int> I;
  Composition lambda;  // empty when the case is lambda-independent
  std::string kind;
};

struct VerifyReport {
  int n = 0;
  int bound = 0;
  long cases = 0;
  std::vector<Disagreement> disagreements;
  long elapsed_ms = 0;
};

namespace detail {

inline void for_each_w_I(int n, const std::function<void(const Permutation&,
                                                         const std::vector<int>&)>& fn) {
  std::vector<int> oneline(static_cast<size_t>(n));
  std::iota(oneline.begin(), oneline.end(), 1);
  do {
    const Permutation w(oneline);
    const auto J = left_descents(w);
    const int k = static_cast<int>(J.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> I;
      for (int b = 0; b < k; ++b)
        if (mask & (1u << b)) I.push_back(J[static_cast<size_t>(b)]);
      fn(w, I);
    }
  } while (std::next_permutation(oneline.begin(), oneline.end()));
}

/// Runs fn over [0, count) on `jobs` threads; exceptions propagate.
inline void parallel_for(long count, int jobs, const std::function<void(long)>& fn) {
  if (jobs <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  std::mutex err_mutex;
  std::exception_ptr error;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const long i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Exhaustive desk-scale verification of the classification theorem: for every
/// w in S_n and I inside J(w), sphericality must match multiplicity-freeness of
/// kappa_{w lambda} over all partitions with parts at most `bound`. Spherical
/// elements must be multiplicity-free for every sampled lambda; non-spherical
/// ones must exhibit a coefficient >= 2 for some sampled lambda (parts up to 3
/// suffice for that direction).
inline VerifyReport verify_main_theorem(int n, int bound, int jobs = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  report.n = n;
  report.bound = bound;
  const auto lambdas = partitions_bounded(n, bound);

  std::vector<std::pair<Permutation, std::vector<int>>> tasks;
  detail::for_each_w_I(n, [&](const Permutation& w, const std::vector<int>& I) {
    tasks.emplace_back(w, I);
  });
  report.cases = static_cast<long>(tasks.size());

  std::mutex out_mutex;
  detail::parallel_for(static_cast<long>(tasks.size()), jobs, [&](long idx) {
    const auto& [w, I] = tasks[static_cast<size_t>(idx)];
    const bool spherical = is_spherical_coxeter(w, I);
    bool found_multiplicity = false;
    for (const auto& lambda : lambdas) {
      const bool mf = is_multiplicity_free(expand_key(w, I, lambda));
      if (!mf) found_multiplicity = true;
      if (spherical && !mf) {
        std::lock_guard<std::mutex> lock(out_mutex);
        report.disagreements.push_back({w, I, lambda, "spherical but not multiplicity-free"});
      }
      if (found_multiplicity && !spherical) break;
    }
    if (!spherical && !found_multiplicity) {
      std::lock_guard<std::mutex> lock(out_mutex);
      report.disagreements.push_back({w, I, {}, "non-spherical but multiplicity-free for all sampled lambda"});
    }
  });
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

/// Exhaustive check that the two sphericality definitions agree, and that
/// every found witness satisfies the witness conditions verbatim.
inline VerifyReport verify_equivalence(int n) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  report.n = n;
  detail::for_each_w_I(n, [&](const Permutation& w, const std::vector<int>& I) {
    ++report.cases;
    const bool coxeter = is_spherical_coxeter(w, I);
    const auto witness = find_witness(w, I);
    if (coxeter != witness.has_value())
      report.disagreements.push_back({w, I, {}, "definitions disagree"});
    if (witness) {
      if (!witness_conditions_hold(*witness, I, n))
        report.disagreements.push_back({w, I, {}, "witness violates its conditions"});
      if (evaluate_word(*witness, n) != w ||
          static_cast<int>(witness->size()) != length(w))
        report.disagreements.push_back({w, I, {}, "witness is not a reduced word of w"});
    }
  });
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

}  // namespace spherical
