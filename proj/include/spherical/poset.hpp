#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spherical/composition.hpp"
#include "spherical/key_polynomial.hpp"
#include "spherical/permutation.hpp"
#include "spherical/sparse_poly.hpp"

namespace spherical {

struct PosetEdge {
  int lower = 0;
  int upper = 0;  // node indices
  int i = 0;
  int j = 0;      // the move t_{ij}
  auto operator<=>(const PosetEdge&) const = default;
};

/// The orbit poset S_{I,gamma} of gamma under t-moves, or its subposet
/// supported on the monomials of a key polynomial. Nodes are stored with the
/// shifted-vector (arrangement) semantics, so orbit nodes may carry negative
/// entries; support nodes never do.
///
/// Rank is the Bruhat rank above the minimum gamma; sign(beta) = (-1)^rank.
class SphericalPoset {
public:
  SphericalPoset(std::vector<Composition> nodes, std::vector<PosetEdge> edges,
                 std::vector<int> ranks, Composition gamma, BlockStructure bs)
      : nodes_(std::move(nodes)),
        edges_(std::move(edges)),
        ranks_(std::move(ranks)),
        gamma_(std::move(gamma)),
        blocks_(std::move(bs)) {
    for (size_t v = 0; v < nodes_.size(); ++v) index_.emplace(nodes_[v], static_cast<int>(v));
  }

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Composition>& nodes() const { return nodes_; }
  const std::vector<PosetEdge>& edges() const { return edges_; }
  const Composition& node(int v) const { return nodes_[static_cast<size_t>(v)]; }
  int rank(int v) const { return ranks_[static_cast<size_t>(v)]; }
  int sign(int v) const { return ranks_[static_cast<size_t>(v)] % 2 ? -1 : 1; }
  const Composition& gamma() const { return gamma_; }
  const BlockStructure& blocks() const { return blocks_; }

  std::optional<int> index_of(const Composition& beta) const {
    auto it = index_.find(beta);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Block factor of the node under the order isomorphism onto the Young
  /// subgroup: position q holds the tau(q)-th largest shifted entry of the
  /// block, gamma itself mapping to the identity.
  Permutation block_perm(int v, int t) const {
    auto [lo, hi] = blocks_.block_range(t);
    const int m = hi - lo + 1;
    const Composition& beta = node(v);
    std::vector<std::pair<int, int>> shifted;  // (value, local position)
    for (int q = 0; q < m; ++q)
      shifted.emplace_back(beta[static_cast<size_t>(lo - 1 + q)] - (lo + q), q + 1);
    std::sort(shifted.begin(), shifted.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<int> tau(static_cast<size_t>(m));
    for (int r = 0; r < m; ++r) tau[static_cast<size_t>(r)] = shifted[static_cast<size_t>(r)].second;
    return Permutation(std::move(tau));
  }

  /// Ambient Young-subgroup Bruhat comparison of two nodes, block by block.
  bool leq(int u, int v) const {
    for (int t = 1; t <= blocks_.block_count(); ++t)
      if (!bruhat_leq(block_perm(u, t), block_perm(v, t))) return false;
    return true;
  }

private:
  std::vector<Composition> nodes_;
  std::vector<PosetEdge> edges_;
  std::vector<int> ranks_;
  Composition gamma_;
  BlockStructure blocks_;
  std::map<Composition, int> index_;
};

namespace detail {

inline int arrangement_rank(const Composition& beta, const BlockStructure& bs) {
  int rank = 0;
  for (int t = 1; t <= bs.block_count(); ++t) {
    auto [lo, hi] = bs.block_range(t);
    for (int p = lo; p <= hi; ++p)
      for (int q = p + 1; q <= hi; ++q)
        if (beta[static_cast<size_t>(p - 1)] - p < beta[static_cast<size_t>(q - 1)] - q) ++rank;
  }
  return rank;
}

/// Enumerates every block-wise rearrangement of gamma's shifted entries,
/// i.e. the full orbit of gamma under t-moves (negative entries permitted).
inline void for_each_arrangement(const Composition& gamma, const BlockStructure& bs,
                                 const std::function<void(const Composition&)>& fn) {
  const int k = bs.block_count();
  std::vector<std::vector<int>> shifted(static_cast<size_t>(k));
  for (int t = 1; t <= k; ++t) {
    auto [lo, hi] = bs.block_range(t);
    for (int p = lo; p <= hi; ++p)
      shifted[static_cast<size_t>(t - 1)].push_back(gamma[static_cast<size_t>(p - 1)] - p);
    std::sort(shifted[static_cast<size_t>(t - 1)].begin(), shifted[static_cast<size_t>(t - 1)].end());
  }
  Composition beta(gamma.size());
  std::function<void(int)> rec = [&](int t) {
    if (t > k) {
      fn(beta);
      return;
    }
    auto [lo, hi] = bs.block_range(t);
    std::vector<int>& vals = shifted[static_cast<size_t>(t - 1)];
    do {
      for (int p = lo; p <= hi; ++p)
        beta[static_cast<size_t>(p - 1)] = vals[static_cast<size_t>(p - lo)] + p;
      rec(t + 1);
    } while (std::next_permutation(vals.begin(), vals.end()));
  };
  rec(1);
}

inline SphericalPoset assemble(std::vector<Composition> nodes, Composition gamma,
                               const BlockStructure& bs) {
  std::vector<std::pair<int, Composition>> ordered;
  ordered.reserve(nodes.size());
  for (auto& nd : nodes) ordered.emplace_back(arrangement_rank(nd, bs), std::move(nd));
  std::sort(ordered.begin(), ordered.end());
  std::map<Composition, int> index;
  std::vector<Composition> out_nodes;
  std::vector<int> ranks;
  for (auto& [r, nd] : ordered) {
    index.emplace(nd, static_cast<int>(out_nodes.size()));
    ranks.push_back(r);
    out_nodes.push_back(std::move(nd));
  }
  std::vector<PosetEdge> edges;
  for (size_t v = 0; v < out_nodes.size(); ++v) {
    const Composition& beta = out_nodes[v];
    for (int t = 1; t <= bs.block_count(); ++t) {
      auto [lo, hi] = bs.block_range(t);
      for (int i = lo; i <= hi; ++i) {
        for (int j = i + 1; j <= hi; ++j) {
          if (beta[static_cast<size_t>(i - 1)] - i <= beta[static_cast<size_t>(j - 1)] - j)
            continue;  // not a raising move
          auto it = index.find(t_shift(beta, i, j));
          if (it == index.end()) continue;
          if (ranks[static_cast<size_t>(it->second)] != ranks[v] + 1) continue;
          edges.push_back(PosetEdge{static_cast<int>(v), it->second, i, j});
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return SphericalPoset(std::move(out_nodes), std::move(edges), std::move(ranks),
                        std::move(gamma), bs);
}

}  // namespace detail

/// Full orbit poset S_{I,gamma}: all block-wise rearrangements, with covers
/// oriented by raising t-moves. Node count is the product of block factorials.
inline SphericalPoset build_orbit_poset(const SplitPartition& gamma, const BlockStructure& bs) {
  Composition g = gamma.flatten();
  if (static_cast<int>(g.size()) != bs.n())
    throw std::invalid_argument("gamma length does not match block structure");
  std::vector<Composition> nodes;
  detail::for_each_arrangement(g, bs, [&](const Composition& beta) { nodes.push_back(beta); });
  return detail::assemble(std::move(nodes), std::move(g), bs);
}

/// Subposet P_{alpha,gamma} induced by the support of kappa_alpha.
inline SphericalPoset build_support_poset(const Composition& alpha, const SplitPartition& gamma,
                                          const BlockStructure& bs, const SparsePoly& kappa_alpha) {
  Composition g = gamma.flatten();
  if (static_cast<int>(g.size()) != bs.n())
    throw std::invalid_argument("gamma length does not match block structure");
  if (static_cast<int>(alpha.size()) != bs.n())
    throw std::invalid_argument("alpha length does not match block structure");
  std::vector<Composition> nodes;
  detail::for_each_arrangement(g, bs, [&](const Composition& beta) {
    if (kappa_alpha.coeff_of(beta) != 0) nodes.push_back(beta);
  });
  return detail::assemble(std::move(nodes), std::move(g), bs);
}

inline SphericalPoset build_support_poset(const Composition& alpha, const SplitPartition& gamma,
                                          const BlockStructure& bs) {
  return build_support_poset(alpha, gamma, bs, key_demazure(alpha));
}

/// Diamond property: whenever two distinct raising t-moves from beta land in P
/// and cover beta, some common strict upper bound exists in P.
inline bool check_diamond(const SphericalPoset& P) {
  const int N = P.size();
  auto covers_in_P = [&](int v, int u) {
    // u is above v with nothing of P strictly between
    if (!(P.leq(v, u) && v != u)) return false;
    for (int z = 0; z < N; ++z) {
      if (z == v || z == u) continue;
      if (P.leq(v, z) && P.leq(z, u)) return false;
    }
    return true;
  };
  for (int v = 0; v < N; ++v) {
    std::vector<int> ups;
    const Composition& beta = P.node(v);
    for (int t = 1; t <= P.blocks().block_count(); ++t) {
      auto [lo, hi] = P.blocks().block_range(t);
      for (int i = lo; i <= hi; ++i)
        for (int j = i + 1; j <= hi; ++j) {
          if (beta[static_cast<size_t>(i - 1)] - i <= beta[static_cast<size_t>(j - 1)] - j) continue;
          auto u = P.index_of(t_shift(beta, i, j));
          if (u && covers_in_P(v, *u)) ups.push_back(*u);
        }
    }
    for (size_t a = 0; a < ups.size(); ++a)
      for (size_t b = a + 1; b < ups.size(); ++b) {
        if (ups[a] == ups[b]) continue;
        bool found = false;
        for (int z = 0; z < N && !found; ++z) {
          if (z == ups[a] || z == ups[b]) continue;
          if (P.leq(ups[a], z) && P.leq(ups[b], z)) found = true;
        }
        if (!found) return false;
      }
  }
  return true;
}

struct IntervalCheck {
  bool ok = false;
  bool unique_max = false;
  Composition max_node;
  Word interval_word;  // canonical word of the top of the interval, global letters
  std::string message;
};

/// Verifies P has a unique maximum and equals the full Bruhat interval
/// [gamma, max] inside the orbit of gamma.
inline IntervalCheck check_interval(const SphericalPoset& P) {
  IntervalCheck out;
  if (P.size() == 0) {
    out.message = "empty poset";
    return out;
  }
  std::vector<int> maxima;
  for (int v = 0; v < P.size(); ++v) {
    bool topped = false;
    for (int u = 0; u < P.size() && !topped; ++u)
      if (u != v && P.leq(v, u)) topped = true;
    if (!topped) maxima.push_back(v);
  }
  if (maxima.size() != 1) {
    out.message = "poset has " + std::to_string(maxima.size()) + " maximal elements";
    return out;
  }
  out.unique_max = true;
  const int vmax = maxima.front();
  out.max_node = P.node(vmax);
  for (int t = 1; t <= P.blocks().block_count(); ++t) {
    auto [lo, hi] = P.blocks().block_range(t);
    Word local = canonical_reduced_word(P.block_perm(vmax, t));
    for (int letter : local) out.interval_word.push_back(letter + lo - 1);
  }
  // membership must match the interval [gamma, max] over the whole orbit
  std::vector<Permutation> top;
  for (int t = 1; t <= P.blocks().block_count(); ++t) top.push_back(P.block_perm(vmax, t));
  bool equal = true;
  detail::for_each_arrangement(P.gamma(), P.blocks(), [&](const Composition& beta) {
    if (!equal) return;
    // tau of this arrangement, per block
    bool below = true;
    for (int t = 1; t <= P.blocks().block_count() && below; ++t) {
      auto [lo, hi] = P.blocks().block_range(t);
      const int m = hi - lo + 1;
      std::vector<std::pair<int, int>> shifted;
      for (int q = 0; q < m; ++q)
        shifted.emplace_back(beta[static_cast<size_t>(lo - 1 + q)] - (lo + q), q + 1);
      std::sort(shifted.begin(), shifted.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
      std::vector<int> tau(static_cast<size_t>(m));
      for (int r = 0; r < m; ++r) tau[static_cast<size_t>(r)] = shifted[static_cast<size_t>(r)].second;
      if (!bruhat_leq(Permutation(std::move(tau)), top[static_cast<size_t>(t - 1)])) below = false;
    }
    if (below != P.index_of(beta).has_value()) equal = false;
  });
  if (!equal) {
    out.message = "support does not match the Bruhat interval";
    return out;
  }
  out.ok = true;
  return out;
}

/// Signed node count; 0 for any Bruhat interval with more than one element.
inline Coeff mobius_sum(const SphericalPoset& P) {
  Coeff s = 0;
  for (int v = 0; v < P.size(); ++v) s += P.sign(v);
  return s;
}

struct InterweavedPair {
  int i = 0;
  int j = 0;
  std::optional<int> center;
};

struct StructureStats {
  std::vector<int> leftmin;   // leftmin[i-1] = min of alpha_1..alpha_i
  std::vector<int> rightmax;  // rightmax[i-1] = max of alpha_i..alpha_n
  std::vector<InterweavedPair> interweaved;
};

/// leftmin/rightmax tables and the interweaved pairs of alpha (same-block
/// pairs with alpha weakly decreasing between them). A missing center is
/// legal only for non-012-avoiding alpha and is surfaced via the optional.
inline StructureStats structure_stats(const Composition& alpha, const BlockStructure& bs) {
  const int n = static_cast<int>(alpha.size());
  if (n != bs.n()) throw std::invalid_argument("length mismatch");
  StructureStats st;
  st.leftmin.resize(static_cast<size_t>(n));
  st.rightmax.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    st.leftmin[static_cast<size_t>(i)] =
        i == 0 ? alpha[0] : std::min(st.leftmin[static_cast<size_t>(i - 1)], alpha[static_cast<size_t>(i)]);
  for (int i = n - 1; i >= 0; --i)
    st.rightmax[static_cast<size_t>(i)] =
        i == n - 1 ? alpha[static_cast<size_t>(i)]
                   : std::max(st.rightmax[static_cast<size_t>(i + 1)], alpha[static_cast<size_t>(i)]);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n && bs.same_block(i, j); ++j) {
      bool decreasing = true;
      for (int k = i; k < j && decreasing; ++k)
        if (alpha[static_cast<size_t>(k - 1)] < alpha[static_cast<size_t>(k)]) decreasing = false;
      if (!decreasing) continue;
      if (st.leftmin[static_cast<size_t>(i - 1)] >= alpha[static_cast<size_t>(i - 1)]) continue;
      if (st.rightmax[static_cast<size_t>(j - 1)] <= alpha[static_cast<size_t>(j - 1)]) continue;
      InterweavedPair pr{i, j, std::nullopt};
      for (int k = i; k <= j; ++k)
        if (alpha[static_cast<size_t>(k - 1)] >= st.rightmax[static_cast<size_t>(j - 1)]) pr.center = k;
      st.interweaved.push_back(pr);
    }
  }
  return st;
}

/// The three going-up conditions for a raising move t_{ij} out of beta inside
/// P_{alpha,gamma}; equivalent to membership of t_{ij} beta when alpha = c lambda.
inline bool goingup_allows(const Composition& beta, int i, int j, const Composition& alpha,
                           const BlockStructure& bs) {
  const StructureStats st = structure_stats(alpha, bs);
  const int d = j - i;
  const int bi = beta[static_cast<size_t>(i - 1)];
  const int bj = beta[static_cast<size_t>(j - 1)];
  if (st.leftmin[static_cast<size_t>(i - 1)] > bj - d) return false;
  if (st.rightmax[static_cast<size_t>(j - 1)] < bi + d) return false;
  for (const auto& pr : st.interweaved) {
    if (pr.i != i || pr.j != j) continue;
    if (!pr.center)
      throw std::logic_error("interweaved pair without a center");
    long lhs = 0, rhs = 0;
    for (int k = 1; k <= *pr.center; ++k) {
      lhs += (k == i) ? (bj - d) : beta[static_cast<size_t>(k - 1)];
      rhs += alpha[static_cast<size_t>(k - 1)];
    }
    if (lhs < rhs) return false;
  }
  return true;
}

/// DOT rendering with deterministic node order. Single-digit entries are
/// concatenated inside a block, matching the compact diagram labels;
/// otherwise entries
/// stay comma-separated and blocks are joined with '|'.
inline std::string node_label(const Composition& beta, const BlockStructure& bs) {
  bool digits = true;
  for (int v : beta)
    if (v < 0 || v > 9) digits = false;
  std::string s;
  for (int t = 1; t <= bs.block_count(); ++t) {
    if (t > 1) s += digits ? "," : "|";
    auto [lo, hi] = bs.block_range(t);
    for (int p = lo; p <= hi; ++p) {
      if (!digits && p > lo) s += ',';
      s += std::to_string(beta[static_cast<size_t>(p - 1)]);
    }
  }
  return s;
}

inline std::string edge_label(int i, int j) {
  if (j == i + 1) return "t_" + std::to_string(i);
  if (i <= 9 && j <= 9) return "t_" + std::to_string(i) + std::to_string(j);
  return "t_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

inline std::string to_dot(const SphericalPoset& P, const std::string& name = "poset") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  rankdir=BT;\n";
  for (int v = 0; v < P.size(); ++v) {
    os << "  n" << v << " [label=\"" << node_label(P.node(v), P.blocks()) << "\", rank="
       << P.rank(v) << ", sign=" << (P.sign(v) > 0 ? "\"+\"" : "\"-\"") << "];\n";
  }
  for (const auto& e : P.edges()) {
    os << "  n" << e.lower << " -> n" << e.upper << " [label=\"" << edge_label(e.i, e.j)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace spherical
