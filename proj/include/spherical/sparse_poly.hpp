#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spherical/composition.hpp"

namespace spherical {

/// Exact integer coefficients: machine-word storage that grows to arbitrary
/// precision instead of wrapping.
using Coeff = boost::multiprecision::cpp_int;

constexpr int kMaxVars = 16;
constexpr int kMaxExp = 255;

/// Dense fixed-width exponent vector; unused slots stay zero so that equality
/// and hashing can look at all 16 bytes.
class ExpVec {
public:
  ExpVec() : e_{} {}

  static ExpVec from(const Composition& c) {
    if (c.size() > kMaxVars) throw std::invalid_argument("more than 16 variables");
    ExpVec v;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] > kMaxExp) throw std::domain_error("exponent outside [0, 255]");
      v.e_[i] = static_cast<std::uint8_t>(c[i]);
    }
    return v;
  }

  int operator[](int i) const { return e_[static_cast<size_t>(i)]; }

  void set(int i, int v) {
    if (v < 0 || v > kMaxExp) throw std::domain_error("exponent outside [0, 255]");
    e_[static_cast<size_t>(i)] = static_cast<std::uint8_t>(v);
  }

  Composition to_composition(int n) const {
    Composition c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = e_[static_cast<size_t>(i)];
    return c;
  }

  ExpVec swapped(int i, int j) const {
    ExpVec v = *this;
    std::swap(v.e_[static_cast<size_t>(i)], v.e_[static_cast<size_t>(j)]);
    return v;
  }

  bool divides(const ExpVec& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[static_cast<size_t>(i)] > other.e_[static_cast<size_t>(i)]) return false;
    return true;
  }

  ExpVec minus(const ExpVec& other) const {
    ExpVec v;
    for (int i = 0; i < kMaxVars; ++i)
      v.e_[static_cast<size_t>(i)] =
          static_cast<std::uint8_t>(e_[static_cast<size_t>(i)] - other.e_[static_cast<size_t>(i)]);
    return v;
  }

  ExpVec plus(const ExpVec& other) const {
    ExpVec v;
    for (int i = 0; i < kMaxVars; ++i) {
      const int s = e_[static_cast<size_t>(i)] + other.e_[static_cast<size_t>(i)];
      if (s > kMaxExp) throw std::domain_error("exponent overflow");
      v.e_[static_cast<size_t>(i)] = static_cast<std::uint8_t>(s);
    }
    return v;
  }

  bool operator==(const ExpVec& o) const { return e_ == o.e_; }

  /// Lexicographic on the exponent sequence.
  bool lex_less(const ExpVec& o) const { return e_ < o.e_; }

  std::uint64_t hash() const {
    std::uint64_t lo = 0, hi = 0;
    for (int i = 0; i < 8; ++i) {
      lo = (lo << 8) | e_[static_cast<size_t>(i)];
      hi = (hi << 8) | e_[static_cast<size_t>(i + 8)];
    }
    std::uint64_t x = lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0xbf58476d1ce4e5b9ULL);
    x ^= x >> 31;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 29;
    return x;
  }

private:
  std::array<std::uint8_t, kMaxVars> e_;
};

struct ExpVecHash {
  size_t operator()(const ExpVec& v) const { return static_cast<size_t>(v.hash()); }
};

struct ExpVecLexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const { return b.lex_less(a); }
};

/// Sparse polynomial in Z[x_1,...,x_n]: finite map exponent vector -> nonzero
/// integer coefficient. Zero coefficients are never stored.
class SparsePoly {
public:
  explicit SparsePoly(int n) : n_(n) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("variable count outside [1, 16]");
  }

  static SparsePoly zero(int n) { return SparsePoly(n); }

  static SparsePoly monomial(const Composition& exp, Coeff c = 1) {
    SparsePoly p(static_cast<int>(exp.size()));
    p.add_term(ExpVec::from(exp), std::move(c));
    return p;
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  const std::unordered_map<ExpVec, Coeff, ExpVecHash>& terms() const { return terms_; }

  void add_term(const ExpVec& e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Coefficient of x^exp; zero for vectors outside the exponent domain.
  Coeff coeff_of(const Composition& exp) const {
    if (static_cast<int>(exp.size()) != n_) throw std::invalid_argument("length mismatch");
    for (int v : exp)
      if (v < 0 || v > kMaxExp) return 0;
    return coeff(ExpVec::from(exp));
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_same(b);
    SparsePoly out(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea.plus(eb), ca * cb);
    return out;
  }

  bool operator==(const SparsePoly& o) const {
    if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
    for (const auto& [e, c] : terms_) {
      auto it = o.terms_.find(e);
      if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
  }

  /// f with x_i and x_j exchanged (0-indexed arguments rejected; i, j are 1-based).
  SparsePoly swap_vars(int i, int j) const {
    SparsePoly out(n_);
    for (const auto& [e, c] : terms_) out.add_term(e.swapped(i - 1, j - 1), c);
    return out;
  }

  bool symmetric_in(int i, int j) const {
    for (const auto& [e, c] : terms_)
      if (coeff(e.swapped(i - 1, j - 1)) != c) return false;
    return true;
  }

  /// Terms sorted lexicographically ascending by exponent vector.
  std::vector<std::pair<ExpVec, Coeff>> sorted_terms() const {
    std::vector<std::pair<ExpVec, Coeff>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first.lex_less(b.first); });
    return v;
  }

  /// Exact division; throws std::logic_error if the division leaves a remainder.
  SparsePoly divide_exact(const SparsePoly& divisor) const {
    check_same(divisor);
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    // leading term of the divisor under descending lex
    std::map<ExpVec, Coeff, ExpVecLexGreater> rem(terms_.begin(), terms_.end());
    auto dlead = divisor.terms_.begin();
    for (auto it = divisor.terms_.begin(); it != divisor.terms_.end(); ++it)
      if (dlead->first.lex_less(it->first)) dlead = it;
    const ExpVec de = dlead->first;
    const Coeff dc = dlead->second;

    SparsePoly quotient(n_);
    while (!rem.empty()) {
      auto it = rem.begin();
      const ExpVec re = it->first;
      const Coeff rc = it->second;
      if (!de.divides(re) || rc % dc != 0)
        throw std::logic_error("inexact polynomial division");
      const ExpVec qe = re.minus(de);
      const Coeff qc = rc / dc;
      quotient.add_term(qe, qc);
      for (const auto& [e, c] : divisor.terms_) {
        const ExpVec te = qe.plus(e);
        const Coeff tc = qc * c;
        auto jt = rem.find(te);
        if (jt == rem.end()) {
          if (tc != 0) rem.emplace(te, -tc);
        } else {
          jt->second -= tc;
          if (jt->second == 0) rem.erase(jt);
        }
      }
    }
    return quotient;
  }

private:
  void check_same(const SparsePoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
  }

  int n_;
  std::unordered_map<ExpVec, Coeff, ExpVecHash> terms_;
};

}  // namespace spherical
