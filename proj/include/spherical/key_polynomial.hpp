#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <unordered_set>
#include <vector>

#include "spherical/composition.hpp"
#include "spherical/permutation.hpp"
#include "spherical/sparse_poly.hpp"

namespace spherical {

/// Isobaric divided difference pi_i, applied monomial-wise through the closed
/// form for pi_i(x_i^a x_{i+1}^b):
///   a >= b     : sum of x_i^k x_{i+1}^{a+b-k} for b <= k <= a
///   b == a+1   : 0
///   b >  a+1   : minus the interior sum, a+1 <= k <= b-1
inline SparsePoly demazure_pi(const SparsePoly& f, int i) {
  if (i < 1 || i >= f.n()) throw std::invalid_argument("pi_i index outside [1, n-1]");
  SparsePoly out(f.n());
  for (const auto& [e, c] : f.terms()) {
    const int a = e[i - 1];
    const int b = e[i];
    int lo, hi, sign;
    if (a >= b) {
      lo = b; hi = a; sign = 1;
    } else if (b == a + 1) {
      continue;
    } else {
      lo = a + 1; hi = b - 1; sign = -1;
    }
    for (int k = lo; k <= hi; ++k) {
      ExpVec e2 = e;
      e2.set(i - 1, k);
      e2.set(i, a + b - k);
      out.add_term(e2, sign > 0 ? c : -c);
    }
  }
  return out;
}

/// pi_{i_1} pi_{i_2} ... pi_{i_l} applied to f (rightmost operator acts first).
/// The result depends only on the Demazure product of the word.
inline SparsePoly pi_along(SparsePoly f, const Word& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure_pi(f, *it);
  return f;
}

/// The minimal-length permutation w with w(sorted alpha) = alpha; equal parts
/// keep their left-to-right order, which pins the choice.
inline Permutation sorting_permutation(const Composition& alpha) {
  const int n = static_cast<int>(alpha.size());
  std::vector<int> pos(static_cast<size_t>(n));
  std::iota(pos.begin(), pos.end(), 1);
  std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) {
    return alpha[static_cast<size_t>(a - 1)] > alpha[static_cast<size_t>(b - 1)];
  });
  return Permutation(std::move(pos));
}

/// Key polynomial by the Demazure recursion: kappa_{w lambda} = pi_w x^lambda.
inline SparsePoly key_demazure(const Composition& alpha) {
  for (int v : alpha)
    if (v < 0) throw std::invalid_argument("key polynomial index must be a weak composition");
  Composition lambda(alpha);
  std::sort(lambda.begin(), lambda.end(), std::greater<int>());
  const Permutation w = sorting_permutation(alpha);
  return pi_along(SparsePoly::monomial(lambda), canonical_reduced_word(w));
}

namespace detail {

/// Kohnert diagram: row r (1-based) is a bitmask of occupied columns (bit c-1).
using Diagram = std::vector<std::uint16_t>;

struct DiagramHash {
  size_t operator()(const Diagram& d) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint16_t row : d) {
      h ^= row;
      h *= 0x100000001b3ULL;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace detail

/// Key polynomial by Kohnert's rule: breadth-first closure of the skyline of
/// alpha under moves that take the top box of a column to the rightmost free
/// cell to its left in the same row; diagrams are counted as a set.
inline SparsePoly key_kohnert(const Composition& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n > kMaxVars) throw std::invalid_argument("more than 16 variables");
  int maxrow = 0;
  for (int v : alpha) {
    if (v < 0) throw std::invalid_argument("key polynomial index must be a weak composition");
    maxrow = std::max(maxrow, v);
  }
  detail::Diagram start(static_cast<size_t>(maxrow), 0);
  for (int c = 1; c <= n; ++c)
    for (int r = 1; r <= alpha[static_cast<size_t>(c - 1)]; ++r)
      start[static_cast<size_t>(r - 1)] |= static_cast<std::uint16_t>(1u << (c - 1));

  std::unordered_set<detail::Diagram, detail::DiagramHash> seen;
  std::vector<detail::Diagram> frontier;
  seen.insert(start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    std::vector<detail::Diagram> next;
    for (const auto& d : frontier) {
      for (int c = 1; c <= n; ++c) {
        // topmost box of column c
        int top = 0;
        for (int r = maxrow; r >= 1; --r) {
          if (d[static_cast<size_t>(r - 1)] & (1u << (c - 1))) { top = r; break; }
        }
        if (top == 0) continue;
        const std::uint16_t row = d[static_cast<size_t>(top - 1)];
        for (int c2 = c - 1; c2 >= 1; --c2) {
          if (!(row & (1u << (c2 - 1)))) {
            detail::Diagram d2 = d;
            d2[static_cast<size_t>(top - 1)] =
                static_cast<std::uint16_t>((row & ~(1u << (c - 1))) | (1u << (c2 - 1)));
            if (seen.insert(d2).second) next.push_back(std::move(d2));
            break;
          }
        }
      }
    }
    frontier = std::move(next);
  }

  SparsePoly out(n);
  for (const auto& d : seen) {
    ExpVec e;
    for (int c = 1; c <= n; ++c) {
      int count = 0;
      for (int r = 1; r <= maxrow; ++r)
        if (d[static_cast<size_t>(r - 1)] & (1u << (c - 1))) ++count;
      e.set(c - 1, count);
    }
    out.add_term(e, 1);
  }
  return out;
}

namespace detail {

/// Row r of the skyline of alpha holds the columns c with alpha_c >= r.
/// A filling assigns each such column a label <= c, distinct within the row.
/// Enumerates every achievable label set of one row via DFS over columns.
inline void row_label_sets(const std::vector<int>& cols, int pos, std::uint32_t used,
                           std::vector<std::uint32_t>& out) {
  if (pos == static_cast<int>(cols.size())) {
    out.push_back(used);
    return;
  }
  const int c = cols[static_cast<size_t>(pos)];
  for (int v = 1; v <= c; ++v) {
    const std::uint32_t bit = 1u << (v - 1);
    if (used & bit) continue;
    row_label_sets(cols, pos + 1, used | bit, out);
  }
}

}  // namespace detail

/// The set of contents {wt(T) : T in Tab(alpha)} of flagged row-distinct
/// fillings of the skyline of alpha. Desk scale only.
inline std::set<Composition> tab_support(const Composition& alpha) {
  const int n = static_cast<int>(alpha.size());
  int maxrow = 0;
  for (int v : alpha) maxrow = std::max(maxrow, v);
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= maxrow; ++r) {
    std::vector<int> cols;
    for (int c = 1; c <= n; ++c)
      if (alpha[static_cast<size_t>(c - 1)] >= r) cols.push_back(c);
    rows.push_back(std::move(cols));
  }
  std::vector<std::vector<std::uint32_t>> per_row;
  for (const auto& cols : rows) {
    std::vector<std::uint32_t> sets;
    detail::row_label_sets(cols, 0, 0, sets);
    std::set<std::uint32_t> dedup(sets.begin(), sets.end());
    per_row.emplace_back(dedup.begin(), dedup.end());
  }
  std::set<Composition> out;
  Composition wt(static_cast<size_t>(n), 0);
  std::function<void(size_t)> rec = [&](size_t r) {
    if (r == per_row.size()) {
      out.insert(wt);
      return;
    }
    for (std::uint32_t s : per_row[r]) {
      for (int v = 1; v <= n; ++v)
        if (s & (1u << (v - 1))) ++wt[static_cast<size_t>(v - 1)];
      rec(r + 1);
      for (int v = 1; v <= n; ++v)
        if (s & (1u << (v - 1))) --wt[static_cast<size_t>(v - 1)];
    }
  };
  rec(0);
  return out;
}

/// Membership variant: does some T in Tab(alpha) have content beta?
/// Prunes row-by-row on the remaining label budget.
inline bool support_nonzero(const Composition& alpha, const Composition& beta) {
  const int n = static_cast<int>(alpha.size());
  if (beta.size() != alpha.size()) throw std::invalid_argument("length mismatch");
  if (weight(alpha) != weight(beta)) return false;
  for (int v : beta)
    if (v < 0) return false;
  int maxrow = 0;
  for (int v : alpha) maxrow = std::max(maxrow, v);
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= maxrow; ++r) {
    std::vector<int> cols;
    for (int c = 1; c <= n; ++c)
      if (alpha[static_cast<size_t>(c - 1)] >= r) cols.push_back(c);
    rows.push_back(std::move(cols));
  }
  Composition remaining(beta);
  // fill rows top-down so shrinking budgets prune early
  std::function<bool(size_t)> rec = [&](size_t r) -> bool {
    if (r == rows.size()) return true;
    const auto& cols = rows[r];
    std::function<bool(int, std::uint32_t)> fill = [&](int pos, std::uint32_t used) -> bool {
      if (pos == static_cast<int>(cols.size())) return rec(r + 1);
      const int c = cols[static_cast<size_t>(pos)];
      for (int v = 1; v <= c; ++v) {
        const std::uint32_t bit = 1u << (v - 1);
        if ((used & bit) || remaining[static_cast<size_t>(v - 1)] == 0) continue;
        --remaining[static_cast<size_t>(v - 1)];
        if (fill(pos + 1, used | bit)) return true;
        ++remaining[static_cast<size_t>(v - 1)];
      }
      return false;
    };
    return fill(0, 0);
  };
  return rec(0);
}

}  // namespace spherical
