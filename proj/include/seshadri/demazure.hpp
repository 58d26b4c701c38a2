#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "seshadri/error.hpp"
#include "seshadri/rootsys.hpp"
#include "seshadri/weyl.hpp"

namespace seshadri {

/// Finite formal sum of weights with positive multiplicities.
class Character {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  Character() = default;
  explicit Character(Terms t) {
    for (auto& [w, m] : t) add(w, m);
    for (const auto& [w, m] : terms_)
      if (m < 0) throw Error(ErrorCode::negative_mult, "negative multiplicity");
  }
  static Character monomial(const Weight& mu) {
    Character c;
    c.terms_[mu] = 1;
    return c;
  }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  std::int64_t multiplicity(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? 0 : it->second;
  }
  std::int64_t dimension() const {
    std::int64_t d = 0;
    for (const auto& [w, m] : terms_) d = checked_add(d, m);
    return d;
  }

  friend bool operator==(const Character&, const Character&) = default;

  /// Adds m to the multiplicity of w; intermediate sums may go negative.
  void add(const Weight& w, std::int64_t m) {
    if (m == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, 0);
    it->second = checked_add(it->second, m);
    if (it->second == 0) terms_.erase(it);
  }

 private:
  Terms terms_;
};

inline std::int64_t dimension(const Character& ch) { return ch.dimension(); }
inline std::int64_t multiplicity(const Character& ch, const Weight& mu) { return ch.multiplicity(mu); }

/// Isobaric divided difference D_i (i is 1-based), extended linearly:
/// e^mu maps to the alpha_i-string from mu down to s_i(mu) when k = <mu, alpha_i^vee> >= 0,
/// to 0 when k = -1, and to minus the string strictly between mu and s_i(mu) when k <= -2.
inline Character demazure_op(const RootSystem& rs, int i, const Character& ch) {
  check_word(rs, {i});
  const auto idx = static_cast<std::size_t>(i - 1);
  const Weight& alpha = rs.simple_root(idx).weight;
  Character out;
  for (const auto& [mu, m] : ch.terms()) {
    const std::int64_t k = mu[idx];
    if (k >= 0) {
      Weight w = mu;
      for (std::int64_t j = 0; j <= k; ++j) {
        out.add(w, m);
        w = w - alpha;
      }
    } else if (k <= -2) {
      Weight w = mu + alpha;
      for (std::int64_t j = 1; j <= -k - 1; ++j) {
        out.add(w, -m);
        w = w + alpha;
      }
    }
  }
  for (const auto& [w, m] : out.terms())
    if (m < 0) throw Error(ErrorCode::negative_mult, "Demazure operator produced a negative multiplicity");
  return out;
}

/// D_{i1} o ... o D_{it} applied to e^{d lambda} for the given word (rightmost first).
inline Character demazure_character(const RootSystem& rs, const Weight& lambda, std::int64_t d, const Word& word) {
  if (!rs.is_dominant(lambda)) throw Error(ErrorCode::not_dominant, "lambda is not dominant");
  if (d < 0) throw Error(ErrorCode::bad_input, "negative degree");
  Character ch = Character::monomial(d * lambda);
  for (auto it = word.rbegin(); it != word.rend(); ++it) ch = demazure_op(rs, *it, ch);
  return ch;
}

inline Character demazure_character(const RootSystem& rs, const Weight& lambda, std::int64_t d,
                                    const WeylElement& tau) {
  return demazure_character(rs, lambda, d, tau.lexmin_word);
}

}  // namespace seshadri
