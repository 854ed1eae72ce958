#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spherical/permutation.hpp"

namespace spherical {

/// Weak composition (exponent vector). Entries are non-negative in the public
/// operations; the poset layer also uses this type for shifted integer vectors.
using Composition = std::vector<int>;

inline int weight(const Composition& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

inline bool is_weakly_decreasing(const Composition& a) {
  for (size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] < a[i + 1]) return false;
  return true;
}

inline bool is_partition(const Composition& a) {
  return is_weakly_decreasing(a) && (a.empty() || a.back() >= 0);
}

/// (w alpha)_i = alpha_{w^{-1}(i)}.
inline Composition act(const Permutation& w, const Composition& alpha) {
  if (static_cast<int>(alpha.size()) != w.n())
    throw std::invalid_argument("length mismatch in permutation action");
  const Permutation wi = w.inverse();
  Composition out(alpha.size());
  for (int i = 1; i <= w.n(); ++i) out[static_cast<size_t>(i - 1)] = alpha[static_cast<size_t>(wi(i) - 1)];
  return out;
}

/// The block decomposition of [n] induced by D = [n-1] - I.
/// Block t (1-indexed) covers positions d_{t-1}+1 .. d_t with d_0 = 0, d_{k+1} = n.
class BlockStructure {
public:
  static BlockStructure from_D(std::vector<int> D, int n) {
    std::sort(D.begin(), D.end());
    D.erase(std::unique(D.begin(), D.end()), D.end());
    if (!D.empty() && D.back() == n) D.pop_back();  // tolerate the sentinel d_{k+1} = n
    for (int d : D)
      if (d < 1 || d >= n) throw std::invalid_argument("divider outside [1, n-1]");
    return BlockStructure(n, std::move(D));
  }

  static BlockStructure from_I(const std::vector<int>& I, int n) {
    std::vector<char> in_I(static_cast<size_t>(n), 0);
    for (int i : I) {
      if (i < 1 || i >= n) throw std::invalid_argument("index outside [1, n-1]");
      in_I[static_cast<size_t>(i)] = 1;
    }
    std::vector<int> D;
    for (int d = 1; d < n; ++d)
      if (!in_I[static_cast<size_t>(d)]) D.push_back(d);
    return BlockStructure(n, std::move(D));
  }

  int n() const { return n_; }
  const std::vector<int>& dividers() const { return dividers_; }

  std::vector<int> I() const {
    std::vector<int> out;
    size_t t = 0;
    for (int i = 1; i < n_; ++i) {
      while (t < dividers_.size() && dividers_[t] < i) ++t;
      if (t >= dividers_.size() || dividers_[t] != i) out.push_back(i);
    }
    return out;
  }

  int block_count() const { return static_cast<int>(dividers_.size()) + 1; }

  /// 1-indexed inclusive position range of block t (1-indexed).
  std::pair<int, int> block_range(int t) const {
    const int lo = (t == 1) ? 1 : dividers_[static_cast<size_t>(t - 2)] + 1;
    const int hi = (t == block_count()) ? n_ : dividers_[static_cast<size_t>(t - 1)];
    return {lo, hi};
  }

  int block_size(int t) const {
    auto [lo, hi] = block_range(t);
    return hi - lo + 1;
  }

  /// Block index (1-based) containing position i.
  int block_of(int i) const { return block_of_[static_cast<size_t>(i - 1)]; }

  bool same_block(int i, int j) const { return block_of(i) == block_of(j); }

  bool operator==(const BlockStructure& o) const = default;

private:
  BlockStructure(int n, std::vector<int> D) : n_(n), dividers_(std::move(D)) {
    block_of_.resize(static_cast<size_t>(n_));
    int t = 1;
    size_t next = 0;
    for (int i = 1; i <= n_; ++i) {
      block_of_[static_cast<size_t>(i - 1)] = t;
      if (next < dividers_.size() && dividers_[next] == i) { ++t; ++next; }
    }
  }

  int n_;
  std::vector<int> dividers_;
  std::vector<int> block_of_;
};

/// One partition per block, each padded with zeros to its block size.
struct SplitPartition {
  std::vector<std::vector<int>> blocks;

  Composition flatten() const {
    Composition out;
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  static SplitPartition from_composition(const Composition& gamma, const BlockStructure& bs) {
    if (static_cast<int>(gamma.size()) != bs.n())
      throw std::invalid_argument("length mismatch between composition and blocks");
    SplitPartition out;
    for (int t = 1; t <= bs.block_count(); ++t) {
      auto [lo, hi] = bs.block_range(t);
      std::vector<int> b(gamma.begin() + lo - 1, gamma.begin() + hi);
      if (!is_partition(b))
        throw std::invalid_argument("block is not weakly decreasing");
      out.blocks.push_back(std::move(b));
    }
    return out;
  }

  bool operator==(const SplitPartition& o) const = default;
  auto operator<=>(const SplitPartition& o) const = default;
};

/// The transform t_{ij}: entries i and j become beta_j-(j-i) and beta_i+(j-i).
/// Unchecked integer version; the poset layer uses it on shifted vectors.
inline Composition t_shift(const Composition& beta, int i, int j) {
  Composition out(beta);
  const int d = j - i;
  out[static_cast<size_t>(i - 1)] = beta[static_cast<size_t>(j - 1)] - d;
  out[static_cast<size_t>(j - 1)] = beta[static_cast<size_t>(i - 1)] + d;
  return out;
}

/// Checked t_{ij} on weak compositions: rejects results outside Comp_n.
inline Composition t_transform(const Composition& beta, int i, int j) {
  if (!(1 <= i && i < j && j <= static_cast<int>(beta.size())))
    throw std::invalid_argument("t_transform requires 1 <= i < j <= n");
  Composition out = t_shift(beta, i, j);
  for (int v : out)
    if (v < 0) throw std::domain_error("t_transform result has a negative entry");
  return out;
}

/// True iff t_{ij} beta sits strictly above beta in the orbit poset, i.e.
/// beta_i > beta_j - (j-i). Equal shifted entries beta_i - i = beta_j - j
/// cannot occur inside an orbit poset and are reported as a logic error.
inline bool raises(const Composition& beta, int i, int j) {
  const int bi = beta[static_cast<size_t>(i - 1)];
  const int bj = beta[static_cast<size_t>(j - 1)];
  if (bi - i == bj - j)
    throw std::logic_error("raises: equal shifted entries violate the orbit invariant");
  return bi > bj - (j - i);
}

/// Dominance order on equal-weight compositions: prefix sums compare.
inline bool dominance_leq(const Composition& a, const Composition& b) {
  if (a.size() != b.size() || weight(a) != weight(b))
    throw std::invalid_argument("dominance order needs equal length and weight");
  int pa = 0, pb = 0;
  for (size_t t = 0; t < a.size(); ++t) {
    pa += a[t];
    pb += b[t];
    if (pa > pb) return false;
  }
  return true;
}

/// Composition pattern containment: indices j_1<...<j_k with the subsequence
/// order-isomorphic to pat and all pairwise gaps at least those of pat.
inline bool contains_comp_pattern(const Composition& alpha, const Composition& pat) {
  const int n = static_cast<int>(alpha.size());
  const int k = static_cast<int>(pat.size());
  if (k > n) throw std::invalid_argument("pattern longer than composition");
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(k));
  std::function<bool(int)> dfs = [&](int start) -> bool {
    const int t = static_cast<int>(chosen.size());
    if (t == k) return true;
    for (int idx = start; idx <= n - (k - t - 1); ++idx) {
      bool ok = true;
      for (int s = 0; s < t && ok; ++s) {
        const int as = alpha[static_cast<size_t>(chosen[static_cast<size_t>(s)] - 1)];
        const int at = alpha[static_cast<size_t>(idx - 1)];
        const int ps = pat[static_cast<size_t>(s)];
        const int pt = pat[static_cast<size_t>(t)];
        if ((ps <= pt) != (as <= at)) ok = false;
        if ((ps >= pt) != (as >= at)) ok = false;
        if (std::abs(as - at) < std::abs(ps - pt)) ok = false;
      }
      if (!ok) continue;
      chosen.push_back(idx);
      if (dfs(idx + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return dfs(1);
}

}  // namespace spherical
