#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "seshadri/error.hpp"
#include "seshadri/rootsys.hpp"

namespace seshadri {

/// Word in the simple reflections, entries 1..rank. The word (i1, ..., ik)
/// denotes the product s_{i1} * ... * s_{ik}; acting on a weight, s_{ik} is
/// applied first.
using Word = std::vector<int>;

/// Weyl group element identified by its image of rho.
struct WeylElement {
  Weight key;          // w(rho), fundamental coordinates
  int length = 0;
  Word lexmin_word;    // lexicographically smallest reduced word

  bool is_identity() const { return length == 0; }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.key == b.key; }
};

/// Simple-root indices (1-based) orthogonal to lambda.
struct ParabolicSupport {
  std::vector<int> indices;

  static ParabolicSupport of(const Weight& lambda) {
    ParabolicSupport p;
    for (std::size_t i = 0; i < lambda.rank(); ++i)
      if (lambda[i] == 0) p.indices.push_back(static_cast<int>(i) + 1);
    return p;
  }
  bool contains(int i) const { return std::find(indices.begin(), indices.end(), i) != indices.end(); }
};

inline void check_word(const RootSystem& rs, const Word& word) {
  for (int i : word)
    if (i < 1 || static_cast<std::size_t>(i) > rs.rank())
      throw Error(ErrorCode::bad_index, "simple reflection index " + std::to_string(i) + " out of range");
}

inline Weight act(const RootSystem& rs, const Word& word, Weight mu) {
  check_word(rs, word);
  for (auto it = word.rbegin(); it != word.rend(); ++it) mu = rs.simple_reflect(mu, static_cast<std::size_t>(*it - 1));
  return mu;
}

inline Weight act(const RootSystem& rs, const WeylElement& w, const Weight& mu) {
  return act(rs, w.lexmin_word, mu);
}

/// Length from the key: the number of positive roots beta with <w(rho), beta^vee> < 0.
inline int length_of_key(const RootSystem& rs, const Weight& key) {
  int n = 0;
  for (const auto& beta : rs.positive_roots())
    if (rs.pairing(key, beta) < 0) ++n;
  return n;
}

/// Reconstructs the element from w(rho). Left descents are the indices with a
/// negative key coordinate; peeling off the smallest one each time yields the
/// lexicographically minimal reduced word.
inline WeylElement element_from_key(const RootSystem& rs, const Weight& key) {
  WeylElement w;
  w.key = key;
  w.length = length_of_key(rs, key);
  Weight cur = key;
  for (int step = 0; step < w.length; ++step) {
    std::size_t i = 0;
    while (i < rs.rank() && cur[i] >= 0) ++i;
    if (i == rs.rank()) break;
    w.lexmin_word.push_back(static_cast<int>(i) + 1);
    cur = rs.simple_reflect(cur, i);
  }
  if (cur != rs.rho() || static_cast<int>(w.lexmin_word.size()) != w.length)
    throw Error(ErrorCode::bad_input, "weight is not in the Weyl orbit of rho");
  return w;
}

inline WeylElement identity_element(const RootSystem& rs) { return element_from_key(rs, rs.rho()); }

inline WeylElement element_from_word(const RootSystem& rs, const Word& word) {
  return element_from_key(rs, act(rs, word, rs.rho()));
}

inline bool is_reduced(const RootSystem& rs, const Word& word) {
  return element_from_word(rs, word).length == static_cast<int>(word.size());
}

/// s_i * w.
inline WeylElement left_multiply(const RootSystem& rs, int i, const WeylElement& w) {
  check_word(rs, {i});
  return element_from_key(rs, rs.simple_reflect(w.key, static_cast<std::size_t>(i - 1)));
}

/// w * s_i.
inline WeylElement right_multiply(const RootSystem& rs, const WeylElement& w, int i) {
  Word word = w.lexmin_word;
  word.push_back(i);
  return element_from_word(rs, word);
}

/// s_beta * w.
inline WeylElement reflect_left(const RootSystem& rs, const Root& beta, const WeylElement& w) {
  return element_from_key(rs, rs.reflect(w.key, beta));
}

/// True iff w(alpha_i) is a positive root for every i in P.
inline bool is_minimal_rep(const RootSystem& rs, const WeylElement& w, const ParabolicSupport& p) {
  for (int i : p.indices) {
    const Weight image = act(rs, w, rs.simple_root(static_cast<std::size_t>(i - 1)).weight);
    bool negative = false;
    if (rs.find_root(image, &negative) == RootSystem::npos)
      throw Error(ErrorCode::bad_input, "image of a simple root is not a root");
    if (negative) return false;
  }
  return true;
}

/// Minimal-length representative of the coset w W_P.
inline WeylElement minimal_rep(const RootSystem& rs, WeylElement w, const ParabolicSupport& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : p.indices) {
      WeylElement ws = right_multiply(rs, w, i);
      if (ws.length < w.length) {
        w = std::move(ws);
        changed = true;
        break;
      }
    }
  }
  return w;
}

/// Bruhat order via the lifting property along the lexmin reduced word of w:
/// with s the first letter of w, v <= w iff sv <= sw (s a left descent of v)
/// or v <= sw (otherwise). This is the greedy form of the subword criterion.
inline bool bruhat_leq(const RootSystem& rs, const WeylElement& v, const WeylElement& w) {
  if (v.length > w.length) return false;
  Weight vk = v.key;
  int vlen = v.length;
  for (int s : w.lexmin_word) {
    const auto i = static_cast<std::size_t>(s - 1);
    if (vk[i] < 0) {
      vk = rs.simple_reflect(vk, i);
      --vlen;
    }
  }
  return vlen == 0;
}

/// Maximal element of W^P: grow from the identity by s_i while <w(lambda), alpha_i^vee> > 0.
inline WeylElement longest_minimal_rep(const RootSystem& rs, const Weight& lambda) {
  WeylElement w = identity_element(rs);
  Weight image = lambda;
  for (;;) {
    std::size_t i = 0;
    while (i < rs.rank() && image[i] <= 0) ++i;
    if (i == rs.rank()) break;
    w = left_multiply(rs, static_cast<int>(i) + 1, w);
    image = rs.simple_reflect(image, i);
  }
  return w;
}

/// Every element of W, breadth first from the identity (desk-scale ranks only).
inline std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::size_t cap = 100000) {
  std::vector<WeylElement> out{identity_element(rs)};
  std::map<Weight, bool> seen{{out.front().key, true}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      Weight k = rs.simple_reflect(out[head].key, i);
      if (seen.emplace(k, true).second) {
        if (out.size() >= cap) throw Error(ErrorCode::too_many, "Weyl group exceeds enumeration cap");
        out.push_back(element_from_key(rs, k));
      }
    }
  }
  return out;
}

}  // namespace seshadri
