#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seshadri/bonded_poset.hpp"
#include "seshadri/case.hpp"
#include "seshadri/demazure.hpp"
#include "seshadri/error.hpp"
#include "seshadri/lspath.hpp"
#include "seshadri/parallel.hpp"
#include "seshadri/smt.hpp"

namespace seshadri {

enum class MultOneSign { minus, plus };

/// Multiset of weights of the LS-paths of degree d, in the same shape as a character.
inline Character ls_character(const LsFan& fan, std::int64_t d) {
  Character ch;
  for (const auto& a : enumerate_ls_paths(fan, d)) ch.add(integral_weight(fan.poset(), a), 1);
  return ch;
}

inline Character demazure_character(const BondedPoset& p, std::int64_t d) {
  return demazure_character(p.root_system(), p.lambda(), d, p.node(p.tau()).element);
}

struct DegreeRow {
  std::int64_t d = 0;
  std::int64_t ls_paths = 0;
  std::int64_t demazure_dim = 0;
  bool cardinality_equal = false;
  bool characters_equal = false;
};

inline DegreeRow compare_degree(const LsFan& fan, std::int64_t d) {
  DegreeRow row;
  row.d = d;
  const Character ls = ls_character(fan, d);
  const Character dem = demazure_character(fan.poset(), d);
  row.ls_paths = ls.dimension();
  row.demazure_dim = dem.dimension();
  row.cardinality_equal = row.ls_paths == row.demazure_dim;
  row.characters_equal = ls == dem;
  return row;
}

/// |LS+_d| == dim V(d lambda)_tau for d = 0..d_max.
inline std::vector<bool> verify_cardinality(const LsFan& fan, std::int64_t d_max) {
  std::vector<bool> out;
  for (std::int64_t d = 0; d <= d_max; ++d)
    out.push_back(static_cast<std::int64_t>(enumerate_ls_paths(fan, d).size()) ==
                  demazure_character(fan.poset(), d).dimension());
  return out;
}

/// Weights of LS+_d equal char V(d lambda)_tau as multisets. Module weights are
/// compared directly; the leaf functions carry the opposite sign.
inline std::vector<bool> verify_character(const LsFan& fan, std::int64_t d_max) {
  std::vector<bool> out;
  for (std::int64_t d = 0; d <= d_max; ++d) out.push_back(ls_character(fan, d) == demazure_character(fan.poset(), d));
  return out;
}

struct Polynomial {
  std::vector<Rational> coeffs;  // coeffs[k] multiplies x^k

  Rational operator()(const Rational& x) const {
    Rational v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
  }
  Rational leading() const { return coeffs.empty() ? Rational(0) : coeffs.back(); }
};

/// Exact Lagrange interpolation through (k, values[k]) for k = 0..n-1.
inline Polynomial interpolate(const std::vector<std::int64_t>& values) {
  const std::size_t n = values.size();
  Polynomial poly{std::vector<Rational>(n, Rational(0))};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= Rational(static_cast<std::int64_t>(j)) * basis[k];
      }
      basis = std::move(next);
      denom *= Rational(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j));
    }
    const Rational scale = Rational(values[i]) / denom;
    for (std::size_t k = 0; k < n; ++k) poly.coeffs[k] += scale * basis[k];
  }
  while (poly.coeffs.size() > 1 && poly.coeffs.back().is_zero()) poly.coeffs.pop_back();
  return poly;
}

/// Demazure dimensions for d = 0..count-1.
inline std::vector<std::int64_t> demazure_dimensions(const BondedPoset& p, std::size_t count, std::size_t jobs = 1) {
  return parallel_map(jobs, count, [&](std::size_t d) {
    return demazure_character(p, static_cast<std::int64_t>(d)).dimension();
  });
}

/// Interpolates d -> dim V(d lambda)_tau on d = 0..r (r = l(tau)) and checks
/// the fit at d = r+1, r+2, r+3.
inline Polynomial hilbert_polynomial(const BondedPoset& p, std::size_t jobs = 1) {
  const auto r = static_cast<std::size_t>(p.rank());
  const auto dims = demazure_dimensions(p, r + 4, jobs);
  const Polynomial poly = interpolate(std::vector<std::int64_t>(dims.begin(), dims.begin() + static_cast<long>(r + 1)));
  for (std::size_t d = r + 1; d < r + 4; ++d)
    if (poly(Rational(static_cast<std::int64_t>(d))) != Rational(dims[d]))
      throw Error(ErrorCode::fit_mismatch, "Hilbert polynomial fails at d = " + std::to_string(d));
  return poly;
}

/// Sum over maximal chains of the product of the chain bonds b_r ... b_1.
inline std::int64_t degree_by_bonds(const std::vector<Chain>& chains) {
  std::int64_t total = 0;
  for (const auto& c : chains) {
    std::int64_t prod = 1;
    for (std::size_t k = 0; k + 1 < c.bonds.size(); ++k) prod = checked_mul(prod, c.bonds[k]);
    total = checked_add(total, prod);
  }
  return total;
}

inline std::int64_t degree_by_bonds(const LsFan& fan) { return degree_by_bonds(fan.chains()); }

/// r! times the leading coefficient of the Hilbert polynomial.
inline std::int64_t degree_by_hilbert(const BondedPoset& p, std::size_t jobs = 1) {
  const Polynomial poly = hilbert_polynomial(p, jobs);
  const auto r = static_cast<std::size_t>(p.rank());
  if (poly.coeffs.size() != r + 1) throw Error(ErrorCode::fit_mismatch, "Hilbert polynomial has the wrong degree");
  Rational deg = poly.leading();
  for (std::int64_t k = 2; k <= static_cast<std::int64_t>(r); ++k) deg *= Rational(k);
  if (!deg.is_integer()) throw Error(ErrorCode::fit_mismatch, "degree is not an integer");
  return deg.num();
}

struct GcdEntry {
  NodeId upper;
  NodeId lower;
  std::optional<std::int64_t> gcd;  // empty on mismatch
};

/// gcd_between on every strictly comparable pair.
inline std::vector<GcdEntry> gcd_check(const BondedPoset& p, std::size_t cap = Limits{}.max_chains) {
  std::vector<GcdEntry> out;
  for (NodeId u = 0; u < p.size(); ++u)
    for (NodeId l = 0; l < p.size(); ++l) {
      if (u == l || !p.leq(l, u)) continue;
      GcdEntry e{u, l, std::nullopt};
      try {
        e.gcd = gcd_between(p, u, l, cap);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::gcd_mismatch) throw;
      }
      out.push_back(e);
    }
  return out;
}

struct MultOneFailure {
  std::size_t cover;
  std::int64_t j;
  std::int64_t multiplicity;
};

/// For every cover upper > lower with root beta and bond b, the weights
/// lower(lambda) -/+ j beta, j = 0..b, have multiplicity one in V(lambda)_upper.
inline std::vector<MultOneFailure> multiplicity_one_check(const BondedPoset& p, MultOneSign sign = MultOneSign::minus) {
  std::vector<MultOneFailure> out;
  std::map<NodeId, Character> cache;
  const RootSystem& rs = p.root_system();
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    const Cover& c = p.covers()[k];
    auto it = cache.find(c.upper);
    if (it == cache.end())
      it = cache.emplace(c.upper, demazure_character(rs, p.lambda(), 1, p.node(c.upper).element)).first;
    const Weight& beta = rs.positive_roots()[c.root].weight;
    Weight mu = p.node(c.lower).image;
    for (std::int64_t j = 0; j <= c.bond; ++j) {
      const std::int64_t m = it->second.multiplicity(mu);
      if (m != 1) out.push_back(MultOneFailure{k, j, m});
      mu = sign == MultOneSign::minus ? mu - beta : mu + beta;
    }
  }
  return out;
}

struct VerifyOptions {
  Limits limits;
  std::size_t jobs = 1;
  MultOneSign sign = MultOneSign::minus;
};

struct CaseReport {
  std::string type;
  Weight lambda;
  std::string tau;  // label of the minimal representative
  std::int64_t d_max = 0;
  std::vector<DegreeRow> rows;
  std::int64_t chain_count = 0;
  std::optional<std::int64_t> degree_by_bonds;
  std::optional<std::int64_t> degree_by_hilbert;
  bool cardinality_ok = false;
  bool characters_ok = false;
  bool degree_ok = false;
  bool gcd_ok = false;
  bool multiplicity_one_ok = false;
  std::vector<std::string> failures;

  bool all_ok() const {
    return cardinality_ok && characters_ok && degree_ok && gcd_ok && multiplicity_one_ok && failures.empty();
  }
};

namespace detail {

template <typename MakePoset>
CaseReport run_battery(CaseReport rep, MakePoset make, const VerifyOptions& opt) {
  const std::int64_t d_max = rep.d_max;
  auto note = [&](const std::string& what, const std::exception& e) { rep.failures.push_back(what + ": " + e.what()); };

  std::optional<LsFan> fan;
  try {
    fan.emplace(make(), opt.limits);
  } catch (const std::exception& e) {
    note("poset", e);
    return rep;
  }
  rep.chain_count = static_cast<std::int64_t>(fan->chains().size());

  try {
    rep.rows = parallel_map(opt.jobs, static_cast<std::size_t>(d_max + 1),
                            [&](std::size_t d) { return compare_degree(*fan, static_cast<std::int64_t>(d)); });
    rep.cardinality_ok = std::all_of(rep.rows.begin(), rep.rows.end(), [](const DegreeRow& r) { return r.cardinality_equal; });
    rep.characters_ok = std::all_of(rep.rows.begin(), rep.rows.end(), [](const DegreeRow& r) { return r.characters_equal; });
  } catch (const std::exception& e) {
    note("characters", e);
  }

  try {
    rep.degree_by_bonds = degree_by_bonds(*fan);
    rep.degree_by_hilbert = degree_by_hilbert(fan->poset(), opt.jobs);
    rep.degree_ok = *rep.degree_by_bonds == *rep.degree_by_hilbert;
  } catch (const std::exception& e) {
    note("degree", e);
  }

  try {
    const auto entries = gcd_check(fan->poset(), opt.limits.max_chains);
    rep.gcd_ok = std::all_of(entries.begin(), entries.end(), [](const GcdEntry& g) { return g.gcd.has_value(); });
  } catch (const std::exception& e) {
    note("gcd", e);
  }

  try {
    rep.multiplicity_one_ok = multiplicity_one_check(fan->poset(), opt.sign).empty();
  } catch (const std::exception& e) {
    note("multiplicity_one", e);
  }
  return rep;
}

}  // namespace detail

/// Runs the full battery on a resolved case. Checks that throw are recorded in
/// `failures` and the remaining checks still run.
inline CaseReport run_case(const ResolvedCase& rc, std::int64_t d_max, const VerifyOptions& opt = {}) {
  CaseReport rep;
  rep.type = rc.rs.kind().name();
  rep.lambda = rc.lambda;
  rep.tau = word_label(rc.tau.lexmin_word);
  rep.d_max = d_max;
  return detail::run_battery(std::move(rep), [&] { return build_poset(rc.rs, rc.lambda, rc.tau); }, opt);
}

/// Same battery on an already built poset, e.g. a restriction A_sigma.
inline CaseReport run_case(const BondedPoset& p, std::int64_t d_max, const VerifyOptions& opt = {}) {
  CaseReport rep;
  rep.type = p.root_system().kind().name();
  rep.lambda = p.lambda();
  rep.tau = word_label(p.node(p.tau()).element.lexmin_word);
  rep.d_max = d_max;
  return detail::run_battery(std::move(rep), [&] { return p; }, opt);
}

}  // namespace seshadri
