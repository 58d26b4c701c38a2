#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "seshadri/bonded_poset.hpp"
#include "seshadri/error.hpp"
#include "seshadri/rational.hpp"

namespace seshadri {

/// Element of Q^A: sparse map from poset nodes to nonzero rationals.
class PathVector {
 public:
  using Entries = std::map<NodeId, Rational>;

  PathVector() = default;
  explicit PathVector(Entries entries) {
    for (auto& [k, v] : entries) set(k, v);
  }
  static PathVector unit(NodeId p, Rational c = 1) {
    PathVector a;
    a.set(p, c);
    return a;
  }

  const Entries& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  Rational operator[](NodeId p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? Rational(0) : it->second;
  }
  void set(NodeId p, const Rational& v) {
    if (v.is_zero())
      entries_.erase(p);
    else
      entries_[p] = v;
  }

  std::vector<NodeId> support() const {
    std::vector<NodeId> s;
    for (const auto& [k, v] : entries_) s.push_back(k);
    return s;
  }
  // Node ids are a linear extension of the poset, so on a totally ordered
  // support the smallest id is the minimum.
  NodeId min_support() const { return entries_.begin()->first; }
  NodeId max_support() const { return entries_.rbegin()->first; }

  bool nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second.sign() > 0; });
  }

  friend PathVector operator+(const PathVector& a, const PathVector& b) {
    PathVector r = a;
    for (const auto& [k, v] : b.entries_) r.set(k, r[k] + v);
    return r;
  }
  friend PathVector operator-(const PathVector& a, const PathVector& b) {
    PathVector r = a;
    for (const auto& [k, v] : b.entries_) r.set(k, r[k] - v);
    return r;
  }
  friend PathVector operator*(const Rational& c, const PathVector& a) {
    PathVector r;
    for (const auto& [k, v] : a.entries_) r.set(k, c * v);
    return r;
  }

  friend bool operator==(const PathVector& a, const PathVector& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const PathVector& a, const PathVector& b) {
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
  }

 private:
  Entries entries_;
};

/// Vector indexed by chain position (position 0 is the top of the chain).
using LatticeVector = std::vector<Rational>;

/// Integer matrix indexed like LatticeVector.
using BMatrix = std::vector<std::vector<std::int64_t>>;

/// Total order on the nodes listed from smallest to largest.
using Linearization = std::vector<NodeId>;

inline Rational degree(const PathVector& a) {
  Rational d = 0;
  for (const auto& [k, v] : a.entries()) d += v;
  return d;
}

/// sum over nodes of a(sigma) * sigma(lambda).
inline RationalWeight weight(const BondedPoset& p, const PathVector& a) {
  RationalWeight w(p.root_system().rank(), Rational(0));
  for (const auto& [k, v] : a.entries()) {
    const Weight& img = p.node(k).image;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += v * Rational(img[i]);
  }
  return w;
}

/// Integral weight of a path vector; throws if some coordinate is fractional.
inline Weight integral_weight(const BondedPoset& p, const PathVector& a) {
  const RationalWeight w = weight(p, a);
  Weight out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_integer()) throw Error(ErrorCode::not_ls_path, "path weight is not integral");
    out[i] = w[i].num();
  }
  return out;
}

inline LatticeVector to_lattice(const Chain& chain, const PathVector& a) {
  LatticeVector v(chain.nodes.size(), Rational(0));
  for (const auto& [k, c] : a.entries()) {
    const std::size_t pos = chain.position(k);
    if (pos == Chain::npos) throw Error(ErrorCode::support, "support is not contained in the chain");
    v[pos] = c;
  }
  return v;
}

inline PathVector from_lattice(const Chain& chain, const LatticeVector& v) {
  if (v.size() != chain.nodes.size()) throw Error(ErrorCode::support, "lattice vector length mismatch");
  PathVector a;
  for (std::size_t k = 0; k < v.size(); ++k) a.set(chain.nodes[k], v[k]);
  return a;
}

/// Partial-sum integrality: b_j (a_r + ... + a_j) in Z for every chain position,
/// the last condition (extended bond 1) being a_r + ... + a_0 in Z.
inline bool ls_member(const Chain& chain, const LatticeVector& v) {
  if (v.size() != chain.nodes.size()) throw Error(ErrorCode::support, "lattice vector length mismatch");
  Rational partial = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    partial += v[k];
    if (!(Rational(chain.bonds[k]) * partial).is_integer()) return false;
  }
  return true;
}

/// Row k holds bonds[k] in columns 0..k (positions ordered from the top).
inline BMatrix b_matrix(const Chain& chain) {
  const std::size_t n = chain.nodes.size();
  BMatrix b(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c <= k; ++c) b[k][c] = chain.bonds[k];
  return b;
}

inline bool ls_member_via_B(const Chain& chain, const LatticeVector& v) {
  if (v.size() != chain.nodes.size()) throw Error(ErrorCode::support, "lattice vector length mismatch");
  const BMatrix b = b_matrix(chain);
  for (std::size_t k = 0; k < b.size(); ++k) {
    Rational row = 0;
    for (std::size_t c = 0; c < b.size(); ++c)
      if (b[k][c] != 0) row += Rational(b[k][c]) * v[c];
    if (!row.is_integer()) return false;
  }
  return true;
}

inline std::strong_ordering lex_compare(const Linearization& lin, const PathVector& a, const PathVector& b) {
  for (auto it = lin.rbegin(); it != lin.rend(); ++it) {
    const Rational x = a[*it];
    const Rational y = b[*it];
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

/// Node ids in increasing order; a linear extension because ids are sorted by length.
inline Linearization default_linearization(const BondedPoset& p) {
  Linearization lin(p.size());
  for (NodeId i = 0; i < p.size(); ++i) lin[i] = i;
  return lin;
}

/// Every linear extension, built bottom-up choosing available nodes by increasing id.
inline std::vector<Linearization> linear_extensions(const BondedPoset& p, std::size_t cap = Limits{}.max_linext) {
  if (cap == 0) throw Error(ErrorCode::bad_input, "linear extension cap must be positive");
  const std::size_t n = p.size();
  std::vector<Linearization> out;
  Linearization cur;
  std::vector<std::size_t> missing(n, 0);
  for (NodeId i = 0; i < n; ++i) missing[i] = p.lower_covers(i).size();
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == n) {
      if (out.size() >= cap) throw Error(ErrorCode::too_many_linext, "linear extensions exceed cap");
      out.push_back(cur);
      return;
    }
    for (NodeId i = 0; i < n; ++i) {
      if (used[i] || missing[i] != 0) continue;
      used[i] = 1;
      cur.push_back(i);
      for (std::size_t k : p.upper_covers(i)) --missing[p.covers()[k].upper];
      self(self);
      for (std::size_t k : p.upper_covers(i)) ++missing[p.covers()[k].upper];
      cur.pop_back();
      used[i] = 0;
    }
  };
  rec(rec);
  return out;
}

inline bool dominates_all(const std::vector<Linearization>& lins, const PathVector& a, const PathVector& b) {
  return std::all_of(lins.begin(), lins.end(), [&](const Linearization& lin) { return lex_compare(lin, a, b) <= 0; });
}

/// a is lex-below-or-equal to b under every linearization of the poset.
inline bool dominates_all(const BondedPoset& p, const PathVector& a, const PathVector& b,
                          std::size_t cap = Limits{}.max_linext) {
  if (a == b) return true;
  return dominates_all(linear_extensions(p, cap), a, b);
}

/// The fan of LS-monoids of a bonded poset: the poset together with its maximal chains.
class LsFan {
 public:
  explicit LsFan(BondedPoset poset, Limits limits = {})
      : poset_(std::move(poset)), limits_(limits), chains_(maximal_chains(poset_, limits.max_chains)) {
    position_.assign(chains_.size(), std::vector<std::size_t>(poset_.size(), Chain::npos));
    for (std::size_t c = 0; c < chains_.size(); ++c)
      for (std::size_t k = 0; k < chains_[c].nodes.size(); ++k) position_[c][chains_[c].nodes[k]] = k;
    lcm_ = poset_.lcm_bonds();
  }

  const BondedPoset& poset() const noexcept { return poset_; }
  const std::vector<Chain>& chains() const noexcept { return chains_; }
  const Limits& limits() const noexcept { return limits_; }
  std::int64_t lcm_bonds() const noexcept { return lcm_; }

  /// First maximal chain containing the support, if any.
  std::optional<std::size_t> chain_containing(const PathVector& a) const {
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      bool inside = true;
      for (const auto& [k, v] : a.entries())
        if (position_[c][k] == Chain::npos) {
          inside = false;
          break;
        }
      if (inside) return c;
    }
    return std::nullopt;
  }

  /// Membership in LS+ = union over chains of LS_C intersected with the nonnegative orthant.
  bool contains(const PathVector& a) const {
    if (!a.nonnegative()) return false;
    for (const auto& [k, v] : a.entries())
      if (k >= poset_.size()) return false;
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      bool inside = true;
      for (const auto& [k, v] : a.entries())
        if (position_[c][k] == Chain::npos) {
          inside = false;
          break;
        }
      if (inside && ls_member(chains_[c], to_lattice(chains_[c], a))) return true;
    }
    return false;
  }

  /// LS-paths of one chain in a given degree, partial sums in lexicographic order.
  std::vector<PathVector> chain_paths(std::size_t c, std::int64_t d) const {
    const Chain& chain = chains_[c];
    const std::size_t r = chain.rank();
    std::vector<PathVector> out;
    // sums[k] = a_r + ... + a_k in top-down positions; sums[r] = d.
    std::vector<Rational> sums(r + 1, Rational(0));
    sums[r] = Rational(d);
    auto rec = [&](auto&& self, std::size_t k, const Rational& floor_sum) -> void {
      if (k == r) {
        PathVector a;
        Rational prev = 0;
        for (std::size_t j = 0; j <= r; ++j) {
          a.set(chain.nodes[j], sums[j] - prev);
          prev = sums[j];
        }
        if (out.size() >= limits_.max_paths) throw Error(ErrorCode::too_many, "LS-path enumeration exceeds cap");
        out.push_back(std::move(a));
        return;
      }
      const std::int64_t b = chain.bonds[k];
      const std::int64_t lo = (floor_sum * Rational(b)).ceil();
      const std::int64_t hi = checked_mul(d, b);
      for (std::int64_t m = lo; m <= hi; ++m) {
        sums[k] = Rational(m, b);
        self(self, k + 1, sums[k]);
      }
    };
    if (d < 0) throw Error(ErrorCode::bad_input, "negative degree");
    rec(rec, 0, Rational(0));
    return out;
  }

 private:
  BondedPoset poset_;
  Limits limits_;
  std::vector<Chain> chains_;
  std::vector<std::vector<std::size_t>> position_;
  std::int64_t lcm_ = 1;
};

/// LS+_d: all LS-paths of degree d, deduplicated across chains and sorted by
/// lex order on the default linearization.
inline std::vector<PathVector> enumerate_ls_paths(const LsFan& fan, std::int64_t d) {
  std::set<PathVector> all;
  for (std::size_t c = 0; c < fan.chains().size(); ++c) {
    for (auto& a : fan.chain_paths(c, d)) {
      all.insert(std::move(a));
      if (all.size() > fan.limits().max_paths) throw Error(ErrorCode::too_many, "LS-path enumeration exceeds cap");
    }
  }
  std::vector<PathVector> out(all.begin(), all.end());
  for (const auto& a : out)
    for (const auto& [k, v] : a.entries())
      if (fan.lcm_bonds() % v.den() != 0) throw Error(ErrorCode::not_ls_path, "denominator does not divide N");
  const Linearization lin = default_linearization(fan.poset());
  std::sort(out.begin(), out.end(), [&](const PathVector& x, const PathVector& y) { return lex_compare(lin, x, y) < 0; });
  return out;
}

struct PathSegment {
  Rational length;
  Weight direction;
};

/// Concatenation of straight segments a_h * tau_h(lambda), from the largest support node down.
inline std::vector<PathSegment> to_path_model(const LsFan& fan, const PathVector& a) {
  if (!fan.contains(a) && !a.is_zero()) throw Error(ErrorCode::not_ls_path, "vector is not an LS-path");
  std::vector<PathSegment> out;
  for (auto it = a.entries().rbegin(); it != a.entries().rend(); ++it)
    out.push_back(PathSegment{it->second, fan.poset().node(it->first).image});
  return out;
}

}  // namespace seshadri
