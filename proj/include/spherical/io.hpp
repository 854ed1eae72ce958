#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spherical/classify.hpp"
#include "spherical/composition.hpp"
#include "spherical/permutation.hpp"
#include "spherical/poset.hpp"
#include "spherical/sparse_poly.hpp"
#include "spherical/split_schur.hpp"

namespace spherical {

using json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline int parse_int(const std::string& s) {
  size_t pos = 0;
  int v;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

}  // namespace detail

/// "7,6,5,4,3,2,9,1,8"
inline Permutation parse_permutation(const std::string& s) {
  std::vector<int> v;
  for (const auto& tok : detail::split(s, ',')) v.push_back(detail::parse_int(tok));
  return Permutation(std::move(v));
}

/// "2,9,8,7,6,5,4,1,3"
inline Composition parse_composition(const std::string& s) {
  Composition v;
  for (const auto& tok : detail::split(s, ',')) v.push_back(detail::parse_int(tok));
  return v;
}

inline std::string format_composition(const Composition& a) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

/// Index sets like "2,3,4,5,6"; the empty string is the empty set.
inline std::vector<int> parse_index_set(const std::string& s) {
  std::vector<int> v;
  if (s.empty()) return v;
  for (const auto& tok : detail::split(s, ',')) v.push_back(detail::parse_int(tok));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::string format_index_set(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

/// The divider set prints with the sentinel n, matching the worked examples
/// ("1,7,8,9" for n = 9); parsing tolerates the sentinel either way.
inline std::string format_blocks(const BlockStructure& bs) {
  std::vector<int> d = bs.dividers();
  d.push_back(bs.n());
  return format_index_set(d);
}

/// Generator words: "s8 s1 s2" or "8,1,2".
inline Word parse_word(const std::string& s) {
  Word out;
  if (s.empty()) return out;
  if (s.find('s') != std::string::npos) {
    for (const auto& tok : detail::split(s, ' ')) {
      if (tok.empty()) continue;
      if (tok[0] != 's') throw std::invalid_argument("bad generator token: '" + tok + "'");
      out.push_back(detail::parse_int(tok.substr(1)));
    }
  } else {
    for (const auto& tok : detail::split(s, ',')) out.push_back(detail::parse_int(tok));
  }
  return out;
}

inline std::string format_word(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

inline std::string format_word_s(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += 's' + std::to_string(w[i]);
  }
  return s;
}

/// Split partitions: blocks joined by '|', entries by ','. A comma-free
/// multi-digit block is read digit-by-digit, so the compact "9|765554|2|2"
/// and the canonical "9|7,6,5,5,5,4|2|2" both parse. Entries of 10 or more
/// therefore always need commas.
inline SplitPartition parse_split_partition(const std::string& s) {
  SplitPartition out;
  for (const auto& block : detail::split(s, '|')) {
    std::vector<int> b;
    if (block.find(',') != std::string::npos) {
      for (const auto& tok : detail::split(block, ',')) b.push_back(detail::parse_int(tok));
    } else if (block.size() > 1) {
      for (char ch : block) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("bad block: '" + block + "'");
        b.push_back(ch - '0');
      }
    } else {
      b.push_back(detail::parse_int(block));
    }
    if (!is_partition(b)) throw std::invalid_argument("block is not weakly decreasing: '" + block + "'");
    out.blocks.push_back(std::move(b));
  }
  return out;
}

inline std::string format_split_partition(const SplitPartition& g) {
  std::string s;
  for (size_t t = 0; t < g.blocks.size(); ++t) {
    if (t) s += '|';
    for (size_t q = 0; q < g.blocks[t].size(); ++q) {
      if (q) s += ',';
      s += std::to_string(g.blocks[t][q]);
    }
  }
  return s;
}

/// Coefficients fit in int64 at desk scale; anything larger is emitted as a
/// decimal string rather than silently truncated.
inline json coeff_to_json(const Coeff& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(c));
  return json(c.str());
}

/// Polynomial JSON: [{"exp": [...], "coeff": N}, ...] sorted lexicographically
/// by exponent vector.
inline json poly_to_json(const SparsePoly& f) {
  json out = json::array();
  for (const auto& [e, c] : f.sorted_terms()) {
    json term;
    term["exp"] = e.to_composition(f.n());
    term["coeff"] = coeff_to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

inline SparsePoly poly_from_json(const json& j, int n) {
  SparsePoly f(n);
  for (const auto& term : j) {
    Composition e = term.at("exp").get<Composition>();
    Coeff c;
    if (term.at("coeff").is_string())
      c = Coeff(term.at("coeff").get<std::string>());
    else
      c = term.at("coeff").get<std::int64_t>();
    f.add_term(ExpVec::from(e), c);
  }
  return f;
}

/// Expansion JSON: [{"gamma": "...", "coeff": N}, ...] sorted by gamma.
inline json expansion_to_json(const DSchurExpansion& e) {
  json out = json::array();
  for (const auto& [gamma, c] : e.coeffs) {
    json item;
    item["gamma"] = format_split_partition(gamma);
    item["coeff"] = coeff_to_json(c);
    out.push_back(std::move(item));
  }
  return out;
}

inline json poset_to_json(const SphericalPoset& P) {
  json out;
  out["gamma"] = format_composition(P.gamma());
  out["node_count"] = P.size();
  json nodes = json::array();
  for (int v = 0; v < P.size(); ++v) {
    json nd;
    nd["beta"] = format_composition(P.node(v));
    nd["rank"] = P.rank(v);
    nd["sign"] = P.sign(v);
    nodes.push_back(std::move(nd));
  }
  out["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& e : P.edges()) {
    json ed;
    ed["lower"] = e.lower;
    ed["upper"] = e.upper;
    ed["label"] = edge_label(e.i, e.j);
    edges.push_back(std::move(ed));
  }
  out["edges"] = std::move(edges);
  return out;
}

inline json report_to_json(const VerifyReport& r) {
  json out;
  out["n"] = r.n;
  out["bound"] = r.bound;
  out["cases"] = r.cases;
  json dis = json::array();
  for (const auto& d : r.disagreements) {
    json item;
    item["w"] = to_string(d.w);
    item["I"] = format_index_set(d.I);
    if (!d.lambda.empty()) item["lambda"] = format_composition(d.lambda);
    item["kind"] = d.kind;
    dis.push_back(std::move(item));
  }
  out["disagreements"] = std::move(dis);
  out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

}  // namespace spherical
