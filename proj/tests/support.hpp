#pragma once

// Shared helpers for the test binaries: the verification catalog and a set of
// brute-force oracles that avoid the library's own algorithms wherever possible.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "seshadri/seshadri.hpp"

namespace testing_support {

using namespace seshadri;

struct CatalogCase {
  std::string type;
  std::string lambda;
};

// Every case is used with tau = longest and with every sigma below it.
inline const std::vector<CatalogCase>& catalog() {
  static const std::vector<CatalogCase> cases = {
      {"A1", "1"},     {"A1", "2"},   {"A1", "3"},   {"A2", "1,0"}, {"A2", "0,1"},
      {"A2", "1,1"},   {"A3", "0,1,0"}, {"B2", "1,0"}, {"B2", "0,1"}, {"G2", "1,0"},
  };
  return cases;
}

inline ResolvedCase resolve(const std::string& type, const std::string& lambda, const std::string& tau) {
  return resolve_case(CaseSpec{type, lambda, tau});
}

inline BondedPoset poset_for(const std::string& type, const std::string& lambda, const std::string& tau) {
  const auto rc = resolve(type, lambda, tau);
  return build_poset(rc.rs, rc.lambda, rc.tau);
}

inline LsFan fan_for(const std::string& type, const std::string& lambda, const std::string& tau) {
  return LsFan(poset_for(type, lambda, tau));
}

// Top poset of a catalog case together with the restriction to each node.
inline std::vector<BondedPoset> all_subposets(const CatalogCase& c) {
  const BondedPoset top = poset_for(c.type, c.lambda, "longest");
  std::vector<BondedPoset> out;
  for (NodeId s = 0; s < top.size(); ++s) out.push_back(restrict_to(top, s));
  return out;
}

inline PathVector pv(std::initializer_list<std::pair<NodeId, Rational>> entries) {
  PathVector a;
  for (const auto& [k, v] : entries) a.set(k, a[k] + v);
  return a;
}

// ---------------------------------------------------------------------------
// Weyl group oracles

// Product of a word evaluated on rho, letter by letter from the right.
inline Weight key_of_word(const RootSystem& rs, const Word& w) {
  Weight mu = rs.rho();
  for (auto it = w.rbegin(); it != w.rend(); ++it) mu = rs.simple_reflect(mu, static_cast<std::size_t>(*it - 1));
  return mu;
}

// All elements reachable by breadth-first search on the Cayley graph; the BFS
// depth of an element is its length.
struct CayleyBfs {
  std::map<Weight, int> depth;
  std::map<Weight, Word> word;
};

inline CayleyBfs cayley_bfs(const RootSystem& rs) {
  CayleyBfs out;
  std::vector<Weight> frontier{rs.rho()};
  out.depth[rs.rho()] = 0;
  out.word[rs.rho()] = {};
  for (int level = 1; !frontier.empty(); ++level) {
    std::vector<Weight> next;
    for (const auto& k : frontier)
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        const Weight nk = rs.simple_reflect(k, i);
        if (out.depth.count(nk)) continue;
        out.depth[nk] = level;
        Word w = out.word[k];
        w.insert(w.begin(), static_cast<int>(i + 1));
        out.word[nk] = w;
        next.push_back(nk);
      }
    frontier = std::move(next);
  }
  return out;
}

// Subword property: v <= w iff some subword of a fixed reduced word of w
// evaluates to v.
inline bool bruhat_by_subwords(const RootSystem& rs, const Weight& v, const Word& reduced_w) {
  const std::size_t n = reduced_w.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Word sub;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) sub.push_back(reduced_w[k]);
    if (key_of_word(rs, sub) == v) return true;
  }
  return false;
}

// Elements of the parabolic subgroup generated by the simple reflections that
// fix lambda, as words.
inline std::vector<Word> parabolic_words(const RootSystem& rs, const Weight& lambda) {
  std::vector<int> gens;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (lambda[i] == 0) gens.push_back(static_cast<int>(i + 1));
  std::map<Weight, Word> seen{{rs.rho(), {}}};
  std::vector<Weight> frontier{rs.rho()};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& k : frontier)
      for (int g : gens) {
        Word w = seen[k];
        w.push_back(g);
        const Weight nk = key_of_word(rs, w);
        if (seen.emplace(nk, w).second) next.push_back(nk);
      }
    frontier = std::move(next);
  }
  std::vector<Word> out;
  for (auto& [k, w] : seen) out.push_back(w);
  return out;
}

// Shortest element of the coset w W_lambda by direct scan.
inline Weight brute_minimal_rep(const RootSystem& rs, const CayleyBfs& bfs, const Word& w, const Weight& lambda) {
  Weight best;
  int best_len = 1 << 30;
  for (const auto& u : parabolic_words(rs, lambda)) {
    Word wu = w;
    wu.insert(wu.end(), u.begin(), u.end());
    const Weight k = key_of_word(rs, wu);
    if (bfs.depth.at(k) < best_len) {
      best_len = bfs.depth.at(k);
      best = k;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Poset oracles

struct BrutePoset {
  std::vector<Weight> keys;          // elements of W^lambda below tau
  std::vector<int> length;
  std::vector<Weight> image;         // sigma(lambda)
  std::set<std::pair<std::size_t, std::size_t>> covers;  // (upper, lower)
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> bonds;
};

// Builds the bonded Hasse diagram from scratch: Bruhat order by subwords,
// covers as comparable pairs of adjacent length, bonds from the difference of
// images along a positive root.
inline BrutePoset brute_poset(const RootSystem& rs, const Weight& lambda, const Word& tau_word) {
  const CayleyBfs bfs = cayley_bfs(rs);
  BrutePoset out;
  std::set<Weight> reps;
  for (const auto& [k, w] : bfs.word) reps.insert(brute_minimal_rep(rs, bfs, w, lambda));
  for (const auto& k : reps)
    if (bruhat_by_subwords(rs, k, tau_word)) {
      out.keys.push_back(k);
      out.length.push_back(bfs.depth.at(k));
      out.image.push_back(act(rs, bfs.word.at(k), lambda));
    }
  const std::size_t n = out.keys.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t l = 0; l < n; ++l) {
      if (out.length[u] != out.length[l] + 1) continue;
      if (!bruhat_by_subwords(rs, out.keys[l], bfs.word.at(out.keys[u]))) continue;
      out.covers.insert({u, l});
      const Weight diff = out.image[l] - out.image[u];
      std::int64_t bond = 0;
      for (const auto& beta : rs.positive_roots()) {
        for (std::size_t i = 0; i < diff.rank(); ++i) {
          if (beta.weight[i] == 0) continue;
          if (diff[i] % beta.weight[i] != 0) break;
          const std::int64_t m = diff[i] / beta.weight[i];
          if (m > 0 && diff == m * beta.weight) bond = m;
          break;
        }
        if (bond) break;
      }
      out.bonds[{u, l}] = bond;
    }
  return out;
}

// Number of maximal chains by dynamic programming on the cover graph.
inline std::int64_t count_chains(const BondedPoset& p) {
  std::vector<std::int64_t> ways(p.size(), 0);
  ways[p.bottom()] = 1;
  for (NodeId id = 0; id < p.size(); ++id)
    for (std::size_t c : p.upper_covers(id)) ways[p.covers()[c].upper] += ways[id];
  return ways[p.tau()];
}

// ---------------------------------------------------------------------------
// LS-path oracles

// Direct integrality test on a top-down chain vector: the k-th partial sum
// times the k-th bond is integral.
inline bool closed_form_ls(const Chain& c, const LatticeVector& v) {
  Rational s = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    s += v[k];
    if (!(s * Rational(c.bonds[k])).is_integer()) return false;
  }
  return true;
}

// LS-paths of degree d by exhaustive scan over (1/N)Z-valued nonnegative
// vectors on each chain.
inline std::set<PathVector> brute_ls_paths(const LsFan& fan, std::int64_t d) {
  std::set<PathVector> out;
  const std::int64_t N = fan.lcm_bonds();
  for (const auto& c : fan.chains()) {
    const std::size_t len = c.nodes.size();
    LatticeVector v(len, Rational(0));
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t left) {
      if (k + 1 == len) {
        v[k] = Rational(left, N);
        if (closed_form_ls(c, v)) out.insert(from_lattice(c, v));
        return;
      }
      for (std::int64_t t = 0; t <= left; ++t) {
        v[k] = Rational(t, N);
        rec(k + 1, left - t);
      }
    };
    rec(0, d * N);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weyl dimension formula, used to check full-flag Demazure dimensions.

inline Rational weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  Rational num = 1, den = 1;
  const Weight lr = lambda + rs.rho();
  for (const auto& beta : rs.positive_roots()) {
    num *= Rational(rs.pairing(lr, beta));
    den *= Rational(rs.pairing(rs.rho(), beta));
  }
  return num / den;
}

}  // namespace testing_support
