#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "seshadri/error.hpp"
#include "seshadri/lspath.hpp"

namespace seshadri {

/// Product of degree-one LS-paths, kept in canonical order: factors sorted by
/// (max support, min support) descending along the node-id linearization.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<PathVector> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(), [](const PathVector& a, const PathVector& b) {
      if (a.max_support() != b.max_support()) return a.max_support() > b.max_support();
      if (a.min_support() != b.min_support()) return a.min_support() > b.min_support();
      return b < a;
    });
  }

  const std::vector<PathVector>& factors() const noexcept { return factors_; }
  std::size_t degree() const noexcept { return factors_.size(); }
  PathVector sum() const {
    PathVector s;
    for (const auto& f : factors_) s = s + f;
    return s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<PathVector> factors_;
};

/// min supp a_j >= max supp a_{j+1} for consecutive entries.
inline bool linked(const BondedPoset& p, const std::vector<PathVector>& seq) {
  for (std::size_t j = 0; j + 1 < seq.size(); ++j)
    if (!p.leq(seq[j + 1].max_support(), seq[j].min_support())) return false;
  return true;
}

/// Splits a path at the integer levels of its cumulative degree, walking the
/// support from the top. A coefficient straddling a level is shared by the two
/// adjacent pieces.
inline std::vector<PathVector> threshold_cut(const PathVector& a) {
  const Rational d = degree(a);
  if (!d.is_integer()) throw Error(ErrorCode::not_ls_path, "degree is not an integer");
  std::vector<PathVector> pieces(static_cast<std::size_t>(d.num()));
  std::size_t j = 0;
  Rational room = 1;
  for (auto it = a.entries().rbegin(); it != a.entries().rend(); ++it) {
    Rational c = it->second;
    while (c.sign() > 0) {
      const Rational take = c < room ? c : room;
      pieces[j].set(it->first, pieces[j][it->first] + take);
      c -= take;
      room -= take;
      if (room.is_zero() && j + 1 < pieces.size()) {
        ++j;
        room = 1;
      }
    }
  }
  return pieces;
}

/// Every ordered decomposition of a into degree-one LS-paths with linked supports.
inline std::vector<std::vector<PathVector>> all_decompositions(const LsFan& fan, const PathVector& a,
                                                              const std::vector<PathVector>& degree_one) {
  const BondedPoset& p = fan.poset();
  std::vector<std::vector<PathVector>> out;
  std::vector<PathVector> cur;
  auto rec = [&](auto&& self, const PathVector& rest) -> void {
    if (rest.is_zero()) {
      out.push_back(cur);
      return;
    }
    for (const auto& f : degree_one) {
      if (!cur.empty() && !p.leq(f.max_support(), cur.back().min_support())) continue;
      const PathVector r = rest - f;
      if (!r.is_zero() && !r.nonnegative()) continue;
      cur.push_back(f);
      self(self, r);
      cur.pop_back();
    }
  };
  rec(rec, a);
  return out;
}

inline void require_ls_path(const LsFan& fan, const PathVector& a) {
  if (!fan.contains(a)) throw Error(ErrorCode::not_ls_path, "vector is not an LS-path");
}

/// Zero, or a sum a1 + a2 of nonzero LS-paths with min supp a1 >= max supp a2.
inline bool is_decomposable(const LsFan& fan, const PathVector& a) {
  require_ls_path(fan, a);
  if (a.is_zero()) return true;
  const Rational d = degree(a);
  if (d <= Rational(1)) return false;
  const BondedPoset& p = fan.poset();
  auto valid = [&](const PathVector& top, const PathVector& bottom) {
    return !top.is_zero() && !bottom.is_zero() && fan.contains(top) && fan.contains(bottom) &&
           p.leq(bottom.max_support(), top.min_support());
  };
  const auto pieces = threshold_cut(a);
  PathVector rest;
  for (std::size_t j = 1; j < pieces.size(); ++j) rest = rest + pieces[j];
  if (valid(pieces.front(), rest)) return true;
  for (std::int64_t k = 1; k < d.num(); ++k)
    for (const auto& top : enumerate_ls_paths(fan, k)) {
      const PathVector bottom = a - top;
      if (bottom.nonnegative() && valid(top, bottom)) return true;
    }
  return false;
}

/// The unique decomposition into degree-one LS-paths, obtained by the
/// threshold cut and cross-checked by exhaustive search when the cut fails.
inline std::vector<PathVector> decompose(const LsFan& fan, const PathVector& a) {
  require_ls_path(fan, a);
  auto pieces = threshold_cut(a);
  const bool ok = linked(fan.poset(), pieces) && std::all_of(pieces.begin(), pieces.end(), [&](const PathVector& f) {
                    return degree(f) == Rational(1) && fan.contains(f);
                  });
  if (ok) return pieces;
  const auto found = all_decompositions(fan, a, enumerate_ls_paths(fan, 1));
  if (found.empty()) throw Error(ErrorCode::decomp_fail, "no decomposition into indecomposables");
  return found.front();
}

inline bool is_standard(const LsFan& fan, const Monomial& m) {
  for (const auto& f : m.factors()) {
    if (degree(f) != Rational(1)) throw Error(ErrorCode::not_degree_one, "factor is not of degree one");
    require_ls_path(fan, f);
  }
  if (linked(fan.poset(), m.factors())) return true;
  if (m.degree() >= 9) return false;
  std::vector<std::size_t> order(m.degree());
  std::iota(order.begin(), order.end(), 0);
  std::vector<PathVector> seq(m.degree());
  do {
    for (std::size_t j = 0; j < order.size(); ++j) seq[j] = m.factors()[order[j]];
    if (linked(fan.poset(), seq)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

/// Number of standard monomials of degree n, by dynamic programming over the
/// last factor of a linked sequence (each standard monomial has exactly one
/// linked ordering).
inline std::int64_t count_standard_monomials(const LsFan& fan, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::bad_input, "negative degree");
  if (n == 0) return 1;
  const auto gens = enumerate_ls_paths(fan, 1);
  const BondedPoset& p = fan.poset();
  std::vector<std::int64_t> ways(gens.size(), 1);
  for (std::int64_t step = 1; step < n; ++step) {
    std::vector<std::int64_t> next(gens.size(), 0);
    for (std::size_t f = 0; f < gens.size(); ++f)
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (p.leq(gens[g].max_support(), gens[f].min_support())) next[g] = checked_add(next[g], ways[f]);
    ways = std::move(next);
  }
  std::int64_t total = 0;
  for (auto w : ways) total = checked_add(total, w);
  return total;
}

/// Explicit list of standard monomials of degree n (capped by max_paths).
inline std::vector<Monomial> standard_monomials(const LsFan& fan, std::int64_t n) {
  const auto gens = enumerate_ls_paths(fan, 1);
  const BondedPoset& p = fan.poset();
  std::vector<Monomial> out;
  std::vector<PathVector> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<std::int64_t>(cur.size()) == n) {
      if (out.size() >= fan.limits().max_paths) throw Error(ErrorCode::too_many, "standard monomials exceed cap");
      out.emplace_back(cur);
      return;
    }
    for (const auto& g : gens) {
      if (!cur.empty() && !p.leq(g.max_support(), cur.back().min_support())) continue;
      cur.push_back(g);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

struct StraighteningTerm {
  Monomial monomial;
  bool guaranteed = false;
};

/// Standard degree-two monomials allowed on the right side of the straightening
/// relation of the non-standard product a1 * a2: same weight, and a1 + a2 below
/// the product's sum under every linearization. When a1 and a2 lie on a common
/// chain, the decomposition of a1 + a2 is flagged as guaranteed.
inline std::vector<StraighteningTerm> straightening_support(const LsFan& fan, const PathVector& a1,
                                                            const PathVector& a2) {
  const Monomial input({a1, a2});
  if (is_standard(fan, input)) throw Error(ErrorCode::standard_input, "monomial is already standard");
  const BondedPoset& p = fan.poset();
  const PathVector target = a1 + a2;
  const RationalWeight wt = weight(p, target);
  const auto lins = linear_extensions(p, fan.limits().max_linext);

  std::optional<Monomial> guaranteed;
  const PathVector both = target;
  bool on_chain = true;
  const auto supp = both.support();
  for (std::size_t i = 0; i < supp.size() && on_chain; ++i)
    for (std::size_t j = i + 1; j < supp.size(); ++j)
      if (!p.comparable(supp[i], supp[j])) {
        on_chain = false;
        break;
      }
  if (on_chain) guaranteed = Monomial(decompose(fan, target));

  std::vector<StraighteningTerm> out;
  for (const auto& m : standard_monomials(fan, 2)) {
    const PathVector s = m.sum();
    if (weight(p, s) != wt) continue;
    if (!dominates_all(lins, target, s)) continue;
    out.push_back(StraighteningTerm{m, guaranteed && *guaranteed == m});
  }
  return out;
}

}  // namespace seshadri
