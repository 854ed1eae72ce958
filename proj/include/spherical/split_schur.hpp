#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "spherical/composition.hpp"
#include "spherical/sparse_poly.hpp"

namespace spherical {

/// Result of straightening a monomial exponent through pi_{w0(I)}:
/// pi_{w0(I)} x^beta is either 0 (absent) or sign * s_{gamma}.
struct Straightened {
  int sign;  // +1 or -1
  SplitPartition gamma;
};

/// Per block: add the staircase (m-1,...,1,0), drop to absent on a collision,
/// otherwise sort strictly decreasing recording swap parity, subtract the
/// staircase back. The total sign is the product of the block parities.
inline std::optional<Straightened> straighten(const Composition& beta,
                                              const BlockStructure& bs) {
  if (static_cast<int>(beta.size()) != bs.n())
    throw std::invalid_argument("length mismatch between composition and blocks");
  Straightened out;
  out.sign = 1;
  for (int t = 1; t <= bs.block_count(); ++t) {
    auto [lo, hi] = bs.block_range(t);
    const int m = hi - lo + 1;
    std::vector<int> vals(static_cast<size_t>(m));
    for (int q = 0; q < m; ++q)
      vals[static_cast<size_t>(q)] = beta[static_cast<size_t>(lo - 1 + q)] + (m - 1 - q);
    // insertion sort into descending order, counting transpositions
    int swaps = 0;
    for (int a = 1; a < m; ++a) {
      int b = a;
      while (b > 0 && vals[static_cast<size_t>(b - 1)] < vals[static_cast<size_t>(b)]) {
        std::swap(vals[static_cast<size_t>(b - 1)], vals[static_cast<size_t>(b)]);
        ++swaps;
        --b;
      }
      if (b > 0 && vals[static_cast<size_t>(b - 1)] == vals[static_cast<size_t>(b)])
        return std::nullopt;
    }
    if (swaps % 2) out.sign = -out.sign;
    std::vector<int> part(static_cast<size_t>(m));
    for (int q = 0; q < m; ++q)
      part[static_cast<size_t>(q)] = vals[static_cast<size_t>(q)] - (m - 1 - q);
    out.gamma.blocks.push_back(std::move(part));
  }
  return out;
}

namespace detail {

/// Alternant a_{mu+delta} in the block's variables, as a polynomial in all n:
/// sum over permutations of sgn * product x_{block position}^{(mu+delta)_sigma}.
inline SparsePoly block_alternant(const std::vector<int>& exps, int lo, int n) {
  const int m = static_cast<int>(exps.size());
  std::vector<int> idx(static_cast<size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  SparsePoly out(n);
  // iterate permutations in lexicographic order, recomputing parity directly
  do {
    int inv = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (idx[static_cast<size_t>(a)] > idx[static_cast<size_t>(b)]) ++inv;
    ExpVec e;
    for (int q = 0; q < m; ++q)
      e.set(lo - 1 + q, exps[static_cast<size_t>(idx[static_cast<size_t>(q)])]);
    out.add_term(e, (inv % 2) ? Coeff(-1) : Coeff(1));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace detail

/// Schur polynomial of one block by the alternant ratio, dividing out the
/// Vandermonde one binomial factor (x_a - x_b) at a time. Exact throughout.
inline SparsePoly block_schur(const std::vector<int>& mu, int lo, int n) {
  const int m = static_cast<int>(mu.size());
  if (!is_partition(mu)) throw std::invalid_argument("block is not a partition");
  std::vector<int> exps(static_cast<size_t>(m));
  for (int q = 0; q < m; ++q) exps[static_cast<size_t>(q)] = mu[static_cast<size_t>(q)] + (m - 1 - q);
  SparsePoly num = detail::block_alternant(exps, lo, n);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      SparsePoly binom(n);
      Composition ea(static_cast<size_t>(n), 0), eb(static_cast<size_t>(n), 0);
      ea[static_cast<size_t>(lo - 1 + a)] = 1;
      eb[static_cast<size_t>(lo - 1 + b)] = 1;
      binom.add_term(ExpVec::from(ea), 1);
      binom.add_term(ExpVec::from(eb), -1);
      num = num.divide_exact(binom);
    }
  }
  return num;
}

/// D-Schur polynomial: the product over blocks of per-block Schur polynomials.
inline SparsePoly dschur_poly(const SplitPartition& gamma, const BlockStructure& bs) {
  if (static_cast<int>(gamma.blocks.size()) != bs.block_count())
    throw std::invalid_argument("block count mismatch");
  SparsePoly out = SparsePoly::monomial(Composition(static_cast<size_t>(bs.n()), 0));
  for (int t = 1; t <= bs.block_count(); ++t) {
    auto [lo, hi] = bs.block_range(t);
    if (static_cast<int>(gamma.blocks[static_cast<size_t>(t - 1)].size()) != hi - lo + 1)
      throw std::invalid_argument("block length mismatch");
    out = out * block_schur(gamma.blocks[static_cast<size_t>(t - 1)], lo, bs.n());
  }
  return out;
}

/// Expansion of pi_{w0(I)} f in the D-Schur basis; for f already D-split-
/// symmetric this is the expansion of f itself.
struct DSchurExpansion {
  std::map<SplitPartition, Coeff> coeffs;
};

inline DSchurExpansion dschur_expand(const SparsePoly& f, const BlockStructure& bs) {
  if (f.n() != bs.n()) throw std::invalid_argument("variable count mismatch");
  DSchurExpansion out;
  for (const auto& [e, c] : f.terms()) {
    auto st = straighten(e.to_composition(bs.n()), bs);
    if (!st) continue;
    auto [it, inserted] = out.coeffs.try_emplace(st->gamma, st->sign > 0 ? c : -c);
    if (!inserted) {
      it->second += st->sign > 0 ? c : -c;
      if (it->second == 0) out.coeffs.erase(it);
    }
  }
  return out;
}

/// True iff f is invariant under swapping x_i, x_{i+1} for every i interior
/// to a block (i.e. every i in I).
inline bool is_split_symmetric(const SparsePoly& f, const BlockStructure& bs) {
  if (f.n() != bs.n()) throw std::invalid_argument("variable count mismatch");
  for (int i : bs.I())
    if (!f.symmetric_in(i, i + 1)) return false;
  return true;
}

inline bool is_multiplicity_free(const DSchurExpansion& e) {
  for (const auto& [gamma, c] : e.coeffs)
    if (c != 0 && c != 1) return false;
  return true;
}

}  // namespace spherical
