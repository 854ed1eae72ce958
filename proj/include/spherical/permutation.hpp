#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spherical {

/// A reduced (or general) word in the simple generators s_1,...,s_{n-1}.
using Word = std::vector<int>;

/// Permutation of [n] = {1,...,n} in one-line notation, 1-indexed.
/// Immutable after construction; all operations are pure.
class Permutation {
public:
  explicit Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
    const int n = static_cast<int>(oneline_.size());
    if (n == 0) throw std::invalid_argument("permutation must have n >= 1");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : oneline_) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
        throw std::invalid_argument("one-line notation is not a bijection on [n]");
      seen[static_cast<size_t>(v - 1)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// Simple transposition s_i = (i, i+1), 1 <= i <= n-1.
  static Permutation simple(int i, int n) {
    Permutation w = identity(n);
    if (i < 1 || i >= n) throw std::invalid_argument("simple generator index out of range");
    std::swap(w.oneline_[static_cast<size_t>(i - 1)], w.oneline_[static_cast<size_t>(i)]);
    return w;
  }

  int n() const { return static_cast<int>(oneline_.size()); }

  /// w(i), 1-indexed.
  int operator()(int i) const { return oneline_[static_cast<size_t>(i - 1)]; }

  const std::vector<int>& oneline() const { return oneline_; }

  Permutation inverse() const {
    std::vector<int> inv(oneline_.size());
    for (int i = 1; i <= n(); ++i) inv[static_cast<size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(inv));
  }

  /// Composition of functions: (u*v)(i) = u(v(i)).
  Permutation operator*(const Permutation& v) const {
    if (n() != v.n()) throw std::invalid_argument("size mismatch in permutation product");
    std::vector<int> w(oneline_.size());
    for (int i = 1; i <= n(); ++i) w[static_cast<size_t>(i - 1)] = (*this)(v(i));
    return Permutation(std::move(w));
  }

  bool operator==(const Permutation& o) const = default;
  auto operator<=>(const Permutation& o) const = default;

  bool is_identity() const {
    for (int i = 1; i <= n(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

private:
  std::vector<int> oneline_;
};

/// Coxeter length = inversion count #{i<j : w(i)>w(j)}.
inline int length(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

/// Left descents J(w) = {j : w^{-1}(j) > w^{-1}(j+1)}, i.e. j+1 appears left of j.
inline std::vector<int> left_descents(const Permutation& w) {
  const Permutation wi = w.inverse();
  std::vector<int> out;
  for (int j = 1; j < w.n(); ++j)
    if (wi(j) > wi(j + 1)) out.push_back(j);
  return out;
}

inline bool is_left_descent(const Permutation& w, int j) {
  const Permutation wi = w.inverse();
  return wi(j) > wi(j + 1);
}

/// Left-multiply by s_j (swaps the values j and j+1 of w).
inline Permutation left_mult_simple(int j, const Permutation& w) {
  std::vector<int> v = w.oneline();
  for (auto& x : v) {
    if (x == j) x = j + 1;
    else if (x == j + 1) x = j;
  }
  return Permutation(std::move(v));
}

/// Right-multiply by s_i (swaps positions i and i+1).
inline Permutation right_mult_simple(const Permutation& w, int i) {
  std::vector<int> v = w.oneline();
  std::swap(v[static_cast<size_t>(i - 1)], v[static_cast<size_t>(i)]);
  return Permutation(std::move(v));
}

/// Longest element of the parabolic subgroup generated by {s_i : i in I}.
/// In type A this reverses each maximal run of consecutive indices of I.
inline Permutation longest_element(const std::vector<int>& I, int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<int> sorted(I);
  std::sort(sorted.begin(), sorted.end());
  for (int idx : sorted)
    if (idx < 1 || idx >= n) throw std::invalid_argument("parabolic index outside [1, n-1]");
  size_t t = 0;
  while (t < sorted.size()) {
    size_t e = t;
    while (e + 1 < sorted.size() && sorted[e + 1] == sorted[e] + 1) ++e;
    // run of generators sorted[t..e] reverses positions sorted[t] .. sorted[e]+1
    std::reverse(v.begin() + sorted[t] - 1, v.begin() + sorted[e] + 1);
    t = e + 1;
  }
  return Permutation(std::move(v));
}

/// Evaluate a word left-to-right as a product of simple transpositions.
inline Permutation evaluate_word(const Word& word, int n) {
  Permutation w = Permutation::identity(n);
  for (int i : word) w = right_mult_simple(w, i);
  return w;
}

inline bool is_reduced_word(const Word& word, int n) {
  return length(evaluate_word(word, n)) == static_cast<int>(word.size());
}

/// Canonical reduced word: repeatedly strip the smallest left descent.
inline Word canonical_reduced_word(Permutation w) {
  Word word;
  for (;;) {
    const auto J = left_descents(w);
    if (J.empty()) break;
    word.push_back(J.front());
    w = left_mult_simple(J.front(), w);
  }
  return word;
}

/// Demazure (0-Hecke) product: fold w * s_i = w s_i if length increases, else w.
inline Permutation demazure_product(const Word& word, int n) {
  Permutation w = Permutation::identity(n);
  for (int i : word) {
    if (w(i) < w(i + 1)) w = right_mult_simple(w, i);
  }
  return w;
}

/// Depth-first walk over the reduced words of w, letters chosen from the left.
///
/// The visitor controls the walk:
///   bool enter(int letter)        called before descending by s_letter; return
///                                 false to prune the whole branch.
///   void leave(int letter)        undo bookkeeping from enter.
///   bool word_done(const Word&)   called with each complete reduced word;
///                                 return false to abort the entire search.
/// Returns false iff some word_done aborted the search.
template <class Visitor>
bool walk_reduced_words(const Permutation& w, Visitor&& visitor) {
  Word word;
  word.reserve(static_cast<size_t>(length(w)));
  std::function<bool(const Permutation&)> dfs = [&](const Permutation& u) -> bool {
    const auto J = left_descents(u);
    if (J.empty()) return visitor.word_done(word);
    for (int j : J) {
      if (!visitor.enter(j)) continue;
      word.push_back(j);
      const bool keep_going = dfs(left_mult_simple(j, u));
      word.pop_back();
      visitor.leave(j);
      if (!keep_going) return false;
    }
    return true;
  };
  return dfs(w);
}

/// Calls emit for every element of Red(w) exactly once; emit returning false stops.
inline void for_each_reduced_word(const Permutation& w,
                                  const std::function<bool(const Word&)>& emit) {
  struct Plain {
    const std::function<bool(const Word&)>& emit;
    bool enter(int) { return true; }
    void leave(int) {}
    bool word_done(const Word& word) { return emit(word); }
  };
  walk_reduced_words(w, Plain{emit});
}

inline std::vector<Word> all_reduced_words(const Permutation& w) {
  std::vector<Word> out;
  for_each_reduced_word(w, [&](const Word& word) {
    out.push_back(word);
    return true;
  });
  return out;
}

/// Pattern containment: do positions i_1<...<i_k exist with w(i_1..i_k)
/// order-isomorphic to p?
inline bool contains_pattern(const Permutation& w, const Permutation& p) {
  const int n = w.n(), k = p.n();
  if (k > n) throw std::invalid_argument("pattern longer than permutation");
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(k));
  // order-isomorphism holds iff every consecutive-in-value pair of the pattern
  // is respected; checking all pairs against the prefix keeps the DFS simple
  std::function<bool(int)> dfs = [&](int start) -> bool {
    const int t = static_cast<int>(chosen.size());
    if (t == k) return true;
    for (int i = start; i <= n - (k - t - 1); ++i) {
      bool ok = true;
      for (int s = 0; s < t; ++s) {
        const bool want = p(s + 1) < p(t + 1);
        const bool have = w(chosen[static_cast<size_t>(s)]) < w(i);
        if (want != have) { ok = false; break; }
      }
      if (!ok) continue;
      chosen.push_back(i);
      if (dfs(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return dfs(1);
}

inline bool avoids_321_and_3412(const Permutation& w) {
  if (w.n() >= 3 && contains_pattern(w, Permutation({3, 2, 1}))) return false;
  if (w.n() >= 4 && contains_pattern(w, Permutation({3, 4, 1, 2}))) return false;
  return true;
}

/// If u is a product of pairwise-distinct simple generators, returns one
/// witnessing word; otherwise nullopt. Any reduced word of such u has distinct
/// letters (braid moves need a repeated letter, commutations keep the multiset),
/// so it suffices to inspect the canonical word.
inline std::optional<Word> is_standard_coxeter(const Permutation& u) {
  Word word = canonical_reduced_word(u);
  std::vector<char> seen(static_cast<size_t>(u.n()), 0);
  for (int j : word) {
    if (seen[static_cast<size_t>(j)]) return std::nullopt;
    seen[static_cast<size_t>(j)] = 1;
  }
  return word;
}

/// Classical strong Bruhat order (identity minimal), via the rank-matrix
/// criterion: u <= v iff #{k<=i : u(k)>=j} <= #{k<=i : v(k)>=j} for all i,j.
inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("size mismatch in Bruhat comparison");
  const int n = u.n();
  for (int j = 1; j <= n; ++j) {
    int cu = 0, cv = 0;
    for (int i = 1; i <= n; ++i) {
      if (u(i) >= j) ++cu;
      if (v(i) >= j) ++cv;
      if (cu > cv) return false;
    }
  }
  return true;
}

inline std::string to_string(const Permutation& w) {
  std::string s;
  for (int i = 1; i <= w.n(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(w(i));
  }
  return s;
}

}  // namespace spherical
