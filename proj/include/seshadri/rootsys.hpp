#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seshadri/error.hpp"
#include "seshadri/rational.hpp"

namespace seshadri {

/// Integral weight in the basis of fundamental weights. coords[i] is the
/// pairing with the (i+1)-th simple coroot.
struct Weight {
  std::vector<std::int64_t> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank, 0) {}
  explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t rank() const noexcept { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  friend Weight operator+(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.rank(); ++i) a[i] = checked_add(a[i], b[i]);
    return a;
  }
  friend Weight operator-(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.rank(); ++i) a[i] = checked_sub(a[i], b[i]);
    return a;
  }
  friend Weight operator*(std::int64_t k, Weight a) {
    for (auto& c : a.coords) c = checked_mul(k, c);
    return a;
  }
  Weight operator-() const { return -1 * *this; }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) {
    os << '(';
    for (std::size_t i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
    return os << ')';
  }
};

/// Rational-coefficient weight, used for the weight of a path vector.
using RationalWeight = std::vector<Rational>;

struct CartanKind {
  char family = 'A';
  int rank = 1;

  /// Parses "A3", "G2", ... and validates the rank for the family.
  static CartanKind parse(std::string_view text) {
    if (text.size() < 2) throw Error(ErrorCode::bad_kind, "malformed type '" + std::string(text) + "'");
    CartanKind k;
    k.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
    const auto digits = text.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 3)
      throw Error(ErrorCode::bad_kind, "malformed type '" + std::string(text) + "'");
    k.rank = std::stoi(std::string(digits));
    k.validate();
    return k;
  }

  void validate() const {
    bool ok = false;
    switch (family) {
      case 'A': ok = rank >= 1; break;
      case 'B':
      case 'C': ok = rank >= 2; break;
      case 'D': ok = rank >= 4; break;
      case 'E': ok = rank >= 6 && rank <= 8; break;
      case 'F': ok = rank == 4; break;
      case 'G': ok = rank == 2; break;
      default: ok = false;
    }
    if (!ok) throw Error(ErrorCode::bad_kind, "invalid Cartan type " + name());
  }

  std::string name() const { return std::string(1, family) + std::to_string(rank); }

  friend bool operator==(const CartanKind&, const CartanKind&) = default;
};

/// Number of positive roots of an irreducible root system of the given kind.
inline std::size_t classical_positive_root_count(const CartanKind& kind) {
  const auto n = static_cast<std::size_t>(kind.rank);
  switch (kind.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

/// A positive root together with its coroot.
struct Root {
  std::vector<std::int64_t> root_coords;    // simple-root basis
  std::vector<std::int64_t> coroot_coords;  // simple-coroot basis
  Weight weight;                            // fundamental-weight basis, C * root_coords

  std::int64_t height() const {
    std::int64_t h = 0;
    for (auto c : root_coords) h += c;
    return h;
  }

  friend bool operator==(const Root& a, const Root& b) { return a.root_coords == b.root_coords; }
};

/// Finite crystallographic root system in Bourbaki numbering.
///
/// The Cartan matrix is stored with cartan(i, j) = <alpha_j, alpha_i^vee>, so
/// column j is the simple root alpha_j written in fundamental coordinates.
class RootSystem {
 public:
  explicit RootSystem(CartanKind kind) : kind_(kind) {
    kind_.validate();
    build_form();
    build_cartan();
    build_roots();
  }

  const CartanKind& kind() const noexcept { return kind_; }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(kind_.rank); }
  std::int64_t cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const std::vector<std::vector<std::int64_t>>& cartan_matrix() const noexcept { return cartan_; }
  const std::vector<Root>& positive_roots() const noexcept { return roots_; }

  /// Simple root alpha_{i+1} (0-based index i).
  const Root& simple_root(std::size_t i) const { return roots_[simple_index_[i]]; }

  Weight rho() const { return Weight(std::vector<std::int64_t>(rank(), 1)); }
  Weight fundamental(std::size_t i) const {
    Weight w(rank());
    w[i] = 1;
    return w;
  }

  bool is_dominant(const Weight& mu) const {
    return std::all_of(mu.coords.begin(), mu.coords.end(), [](std::int64_t c) { return c >= 0; });
  }

  /// <mu, beta^vee>.
  std::int64_t pairing(const Weight& mu, const Root& beta) const {
    check_rank(mu);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s = checked_add(s, checked_mul(beta.coroot_coords[i], mu[i]));
    return s;
  }

  /// s_beta(mu) = mu - <mu, beta^vee> beta.
  Weight reflect(const Weight& mu, const Root& beta) const {
    const std::int64_t k = pairing(mu, beta);
    if (k == 0) return mu;
    return mu - k * beta.weight;
  }

  /// Simple reflection s_{i+1} (0-based index i) on a weight.
  Weight simple_reflect(const Weight& mu, std::size_t i) const {
    check_rank(mu);
    const std::int64_t k = mu[i];
    if (k == 0) return mu;
    Weight r = mu;
    for (std::size_t j = 0; j < rank(); ++j) r[j] = checked_sub(r[j], checked_mul(k, cartan_[j][i]));
    return r;
  }

  /// Fundamental-basis form of a vector given in simple-root coordinates.
  Weight to_weight(const std::vector<std::int64_t>& root_coords) const {
    Weight w(rank());
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        w[i] = checked_add(w[i], checked_mul(cartan_[i][j], root_coords[j]));
    return w;
  }

  /// Index of the positive root whose weight equals +-w, or npos.
  std::size_t find_root(const Weight& w, bool* negative = nullptr) const {
    if (auto it = by_weight_.find(w); it != by_weight_.end()) {
      if (negative) *negative = false;
      return it->second;
    }
    if (auto it = by_weight_.find(-w); it != by_weight_.end()) {
      if (negative) *negative = true;
      return it->second;
    }
    return npos;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  void check_rank(const Weight& mu) const {
    if (mu.rank() != rank()) throw Error(ErrorCode::bad_input, "weight rank mismatch");
  }

  // Symmetric form on simple roots (scaled to integers).
  void build_form() {
    const std::size_t n = rank();
    form_.assign(n, std::vector<std::int64_t>(n, 0));
    auto link = [&](std::size_t a, std::size_t b, std::int64_t v) { form_[a][b] = form_[b][a] = v; };
    switch (kind_.family) {
      case 'A':
        for (std::size_t i = 0; i < n; ++i) form_[i][i] = 2;
        for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
      case 'B':
        for (std::size_t i = 0; i + 1 < n; ++i) form_[i][i] = 4;
        form_[n - 1][n - 1] = 2;
        for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
        break;
      case 'C':
        for (std::size_t i = 0; i + 1 < n; ++i) form_[i][i] = 2;
        form_[n - 1][n - 1] = 4;
        for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 2, n - 1, -2);
        break;
      case 'D':
        for (std::size_t i = 0; i < n; ++i) form_[i][i] = 2;
        for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 3, n - 1, -1);
        break;
      case 'E':
        for (std::size_t i = 0; i < n; ++i) form_[i][i] = 2;
        link(0, 2, -1);
        link(1, 3, -1);
        link(2, 3, -1);
        for (std::size_t i = 3; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
      case 'F':
        form_[0][0] = form_[1][1] = 4;
        form_[2][2] = form_[3][3] = 2;
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
      case 'G':
        form_[0][0] = 2;
        form_[1][1] = 6;
        link(0, 1, -3);
        break;
    }
  }

  void build_cartan() {
    const std::size_t n = rank();
    cartan_.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cartan_[i][j] = 2 * form_[i][j] / form_[i][i];
  }

  std::int64_t norm2(const std::vector<std::int64_t>& c) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) s += c[i] * c[j] * form_[i][j];
    return s;
  }

  // Closure of the simple roots under simple reflections, positive part only.
  void build_roots() {
    const std::size_t n = rank();
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::vector<std::int64_t>> frontier;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> e(n, 0);
      e[i] = 1;
      seen.insert(e);
      frontier.push_back(e);
    }
    while (!frontier.empty()) {
      std::vector<std::vector<std::int64_t>> next;
      for (const auto& beta : frontier) {
        for (std::size_t i = 0; i < n; ++i) {
          std::int64_t k = 0;
          for (std::size_t j = 0; j < n; ++j) k += cartan_[i][j] * beta[j];
          if (k == 0) continue;
          auto img = beta;
          img[i] -= k;
          const bool positive = std::all_of(img.begin(), img.end(), [](std::int64_t c) { return c >= 0; });
          if (!positive) continue;
          if (seen.insert(img).second) next.push_back(img);
        }
      }
      frontier = std::move(next);
    }
    std::vector<std::vector<std::int64_t>> sorted(seen.begin(), seen.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      std::int64_t ha = 0, hb = 0;
      for (auto c : a) ha += c;
      for (auto c : b) hb += c;
      if (ha != hb) return ha < hb;
      return a > b;
    });
    simple_index_.assign(n, 0);
    for (const auto& coords : sorted) {
      Root r;
      r.root_coords = coords;
      const std::int64_t len = norm2(coords);
      r.coroot_coords.resize(n);
      for (std::size_t i = 0; i < n; ++i) r.coroot_coords[i] = coords[i] * form_[i][i] / len;
      r.weight = to_weight(coords);
      if (r.height() == 1) {
        for (std::size_t i = 0; i < n; ++i)
          if (coords[i] == 1) simple_index_[i] = roots_.size();
      }
      by_weight_.emplace(r.weight, roots_.size());
      roots_.push_back(std::move(r));
    }
  }

  CartanKind kind_;
  std::vector<std::vector<std::int64_t>> form_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<Root> roots_;
  std::vector<std::size_t> simple_index_;
  std::map<Weight, std::size_t> by_weight_;
};

inline RootSystem build_root_system(const CartanKind& kind) { return RootSystem(kind); }

}  // namespace seshadri
