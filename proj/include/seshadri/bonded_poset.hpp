#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "seshadri/error.hpp"
#include "seshadri/rootsys.hpp"
#include "seshadri/weyl.hpp"

namespace seshadri {

using NodeId = std::size_t;

struct Limits {
  std::size_t max_chains = 1'000'000;
  std::size_t max_linext = 10'000;
  std::size_t max_paths = 1'000'000;
};

struct PosetNode {
  WeylElement element;  // minimal coset representative
  Weight image;         // element applied to lambda
  std::string label;    // lexmin word, dot separated; "e" for the identity

  int length() const { return element.length; }
};

struct Cover {
  NodeId upper;
  NodeId lower;
  std::int64_t bond;  // <lower(lambda), beta^vee>
  std::size_t root;   // index into RootSystem::positive_roots(); upper = s_beta lower
};

/// Maximal chain, listed from the top: nodes[0] = tau > nodes[1] > ... > nodes[r] = e.
/// bonds[k] labels the edge nodes[k] > nodes[k+1]; the trailing bonds[r] = 1 is
/// the bond to the extra minimum of the extended poset.
struct Chain {
  std::vector<NodeId> nodes;
  std::vector<std::int64_t> bonds;

  std::size_t rank() const { return nodes.size() - 1; }
  std::size_t position(NodeId id) const {
    auto it = std::find(nodes.begin(), nodes.end(), id);
    return it == nodes.end() ? npos : static_cast<std::size_t>(it - nodes.begin());
  }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

inline std::string word_label(const Word& w, const char* sep = ".") {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(w[i]);
  }
  return s;
}

/// The Schubert stratification poset A_tau with bonded covers.
///
/// Nodes are sorted by (length, lexmin word), so node 0 is the identity and the
/// last node is tau. Node order is therefore a linear extension of the Bruhat order.
class BondedPoset {
 public:
  BondedPoset(RootSystem rs, Weight lambda) : rs_(std::move(rs)), lambda_(std::move(lambda)) {}

  const RootSystem& root_system() const noexcept { return rs_; }
  const Weight& lambda() const noexcept { return lambda_; }
  ParabolicSupport parabolic() const { return ParabolicSupport::of(lambda_); }

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<PosetNode>& nodes() const noexcept { return nodes_; }
  const PosetNode& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  NodeId tau() const noexcept { return nodes_.size() - 1; }
  NodeId bottom() const noexcept { return 0; }
  int rank() const { return nodes_.back().length(); }

  /// Indices into covers() of the edges below / above a node, sorted by the other endpoint.
  const std::vector<std::size_t>& lower_covers(NodeId id) const { return lower_.at(id); }
  const std::vector<std::size_t>& upper_covers(NodeId id) const { return upper_.at(id); }

  /// a <= b in the poset.
  bool leq(NodeId a, NodeId b) const { return below_[b][a] != 0; }
  bool comparable(NodeId a, NodeId b) const { return leq(a, b) || leq(b, a); }

  /// lcm of all bonds, including the extended bond 1.
  std::int64_t lcm_bonds() const {
    std::int64_t n = 1;
    for (const auto& c : covers_) n = checked_lcm(n, c.bond);
    return n;
  }

  NodeId find_label(const std::string& label) const {
    for (NodeId i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].label == label) return i;
    throw Error(ErrorCode::bad_input, "unknown node label '" + label + "'");
  }

  std::optional<NodeId> find_key(const Weight& key) const {
    for (NodeId i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].element.key == key) return i;
    return std::nullopt;
  }

  /// Assembles the poset from unsorted nodes and covers given by node keys.
  void assemble(std::vector<WeylElement> elements, const std::vector<std::pair<Weight, Weight>>& edges,
                const std::vector<std::size_t>& edge_roots) {
    std::sort(elements.begin(), elements.end(), [](const WeylElement& a, const WeylElement& b) {
      if (a.length != b.length) return a.length < b.length;
      return a.lexmin_word < b.lexmin_word;
    });
    nodes_.clear();
    std::map<Weight, NodeId> id_of;
    for (auto& e : elements) {
      PosetNode n;
      n.image = act(rs_, e, lambda_);
      n.label = word_label(e.lexmin_word);
      n.element = std::move(e);
      id_of.emplace(n.element.key, nodes_.size());
      nodes_.push_back(std::move(n));
    }
    covers_.clear();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      Cover c{id_of.at(edges[k].first), id_of.at(edges[k].second), 0, edge_roots[k]};
      c.bond = bond_for(c);
      covers_.push_back(c);
    }
    std::sort(covers_.begin(), covers_.end(), [](const Cover& a, const Cover& b) {
      return a.upper != b.upper ? a.upper < b.upper : a.lower < b.lower;
    });
    index();
  }

 private:
  // Scans every positive root mapping lower(lambda) to upper(lambda) with
  // positive pairing and insists that all of them give the same bond.
  std::int64_t bond_for(const Cover& c) const {
    const Weight& lo = nodes_[c.lower].image;
    const Weight& up = nodes_[c.upper].image;
    std::set<std::int64_t> pairings;
    for (const auto& beta : rs_.positive_roots()) {
      const std::int64_t k = rs_.pairing(lo, beta);
      if (k > 0 && rs_.reflect(lo, beta) == up) pairings.insert(k);
    }
    if (pairings.empty())
      throw Error(ErrorCode::no_cover_root,
                  "no positive root realizes the cover " + nodes_[c.upper].label + " > " + nodes_[c.lower].label);
    if (pairings.size() > 1)
      throw Error(ErrorCode::ambiguous_bond,
                  "roots with different pairings realize the cover " + nodes_[c.upper].label + " > " +
                      nodes_[c.lower].label);
    const std::int64_t b = *pairings.begin();
    const Root& beta = rs_.positive_roots()[c.root];
    if (rs_.pairing(lo, beta) != b || lo - b * beta.weight != up)
      throw Error(ErrorCode::ambiguous_bond, "cover reflection root disagrees with the weight scan");
    return b;
  }

  void index() {
    const std::size_t n = nodes_.size();
    lower_.assign(n, {});
    upper_.assign(n, {});
    for (std::size_t k = 0; k < covers_.size(); ++k) {
      lower_[covers_[k].upper].push_back(k);
      upper_[covers_[k].lower].push_back(k);
    }
    for (auto& v : upper_)
      std::sort(v.begin(), v.end(), [&](std::size_t a, std::size_t b) { return covers_[a].upper < covers_[b].upper; });
    below_.assign(n, std::vector<char>(n, 0));
    for (NodeId id = 0; id < n; ++id) {
      below_[id][id] = 1;
      for (std::size_t k : lower_[id]) {
        const auto& sub = below_[covers_[k].lower];
        for (NodeId j = 0; j < n; ++j) below_[id][j] |= sub[j];
      }
    }
  }

  RootSystem rs_;
  Weight lambda_;
  std::vector<PosetNode> nodes_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<char>> below_;
};

/// Builds A_tau by breadth-first descent from tau along the covers of W^Q.
///
/// A lower cover of sigma is the minimal representative of s_beta sigma for a
/// positive root beta with <sigma(lambda), beta^vee> < 0, provided its length
/// drops by exactly one; in that case s_beta sigma is already minimal.
inline BondedPoset build_poset(const RootSystem& rs, const Weight& lambda, const WeylElement& tau) {
  if (lambda.rank() != rs.rank()) throw Error(ErrorCode::bad_input, "lambda has the wrong rank");
  if (!rs.is_dominant(lambda)) throw Error(ErrorCode::not_dominant, "lambda is not dominant");
  if (lambda.is_zero()) throw Error(ErrorCode::not_dominant, "lambda must be nonzero");
  const ParabolicSupport par = ParabolicSupport::of(lambda);
  if (!is_minimal_rep(rs, tau, par))
    throw Error(ErrorCode::not_minrep, "tau " + word_label(tau.lexmin_word) + " is not a minimal coset representative");

  std::map<Weight, WeylElement> seen{{tau.key, tau}};
  std::vector<WeylElement> frontier{tau};
  std::vector<std::pair<Weight, Weight>> edges;
  std::vector<std::size_t> edge_roots;
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& sigma : frontier) {
      const Weight image = act(rs, sigma, lambda);
      const auto& roots = rs.positive_roots();
      for (std::size_t b = 0; b < roots.size(); ++b) {
        if (rs.pairing(image, roots[b]) >= 0) continue;
        WeylElement eta = reflect_left(rs, roots[b], sigma);
        if (eta.length != sigma.length - 1) continue;
        if (!is_minimal_rep(rs, eta, par)) continue;
        edges.emplace_back(sigma.key, eta.key);
        edge_roots.push_back(b);
        if (seen.emplace(eta.key, eta).second) next.push_back(eta);
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeylElement> elements;
  elements.reserve(seen.size());
  for (auto& [k, e] : seen) elements.push_back(e);
  BondedPoset p(rs, lambda);
  p.assemble(std::move(elements), edges, edge_roots);
  return p;
}

/// The down-set A_sigma of a node, renumbered.
inline BondedPoset restrict_to(const BondedPoset& p, NodeId sigma) {
  std::vector<WeylElement> elements;
  for (NodeId i = 0; i < p.size(); ++i)
    if (p.leq(i, sigma)) elements.push_back(p.node(i).element);
  std::vector<std::pair<Weight, Weight>> edges;
  std::vector<std::size_t> roots;
  for (const auto& c : p.covers())
    if (p.leq(c.upper, sigma)) {
      edges.emplace_back(p.node(c.upper).element.key, p.node(c.lower).element.key);
      roots.push_back(c.root);
    }
  BondedPoset sub(p.root_system(), p.lambda());
  sub.assemble(std::move(elements), edges, roots);
  return sub;
}

namespace detail {

template <typename Visit>
void walk_chains(const BondedPoset& p, NodeId top, NodeId bottom, std::vector<NodeId>& nodes,
                 std::vector<std::int64_t>& bonds, Visit& visit) {
  const NodeId cur = nodes.back();
  if (cur == bottom) {
    visit(nodes, bonds);
    return;
  }
  std::vector<std::size_t> below = p.lower_covers(cur);
  std::sort(below.begin(), below.end(),
            [&](std::size_t a, std::size_t b) { return p.covers()[a].lower < p.covers()[b].lower; });
  for (std::size_t k : below) {
    const Cover& c = p.covers()[k];
    if (!p.leq(bottom, c.lower)) continue;
    nodes.push_back(c.lower);
    bonds.push_back(c.bond);
    walk_chains(p, top, bottom, nodes, bonds, visit);
    nodes.pop_back();
    bonds.pop_back();
  }
}

}  // namespace detail

/// Chains of covers from `upper` down to `lower` (depth first, children by id).
/// The returned chains carry only the edge bonds, no extended bond.
inline std::vector<Chain> chains_between(const BondedPoset& p, NodeId upper, NodeId lower,
                                         std::size_t cap = Limits{}.max_chains) {
  if (!p.leq(lower, upper)) throw Error(ErrorCode::not_comparable, "nodes are not comparable");
  std::vector<Chain> out;
  std::vector<NodeId> nodes{upper};
  std::vector<std::int64_t> bonds;
  auto visit = [&](const std::vector<NodeId>& n, const std::vector<std::int64_t>& b) {
    if (out.size() >= cap) throw Error(ErrorCode::too_many_chains, "chain enumeration exceeds cap");
    out.push_back(Chain{n, b});
  };
  detail::walk_chains(p, upper, lower, nodes, bonds, visit);
  return out;
}

/// All maximal chains tau > ... > e, each terminated by the extended bond 1.
inline std::vector<Chain> maximal_chains(const BondedPoset& p, std::size_t cap = Limits{}.max_chains) {
  auto chains = chains_between(p, p.tau(), p.bottom(), cap);
  for (auto& c : chains) c.bonds.push_back(1);
  return chains;
}

/// gcd of the bonds along a chain from sigma down to eta, checked on every such chain.
inline std::int64_t gcd_between(const BondedPoset& p, NodeId sigma, NodeId eta,
                                std::size_t cap = Limits{}.max_chains) {
  if (sigma == eta) throw Error(ErrorCode::empty_chain, "gcd over an empty chain");
  if (!p.leq(eta, sigma)) throw Error(ErrorCode::not_comparable, "eta is not below sigma");
  std::int64_t common = 0;
  bool first = true;
  for (const auto& c : chains_between(p, sigma, eta, cap)) {
    std::int64_t g = 0;
    for (auto b : c.bonds) g = std::gcd(g, b);
    if (first) {
      common = g;
      first = false;
    } else if (g != common) {
      throw Error(ErrorCode::gcd_mismatch, "bond gcd depends on the chain between " + p.node(sigma).label +
                                               " and " + p.node(eta).label);
    }
  }
  return common;
}

/// Graphviz rendering; edges point from the lower node to the upper one.
inline std::string export_dot(const BondedPoset& p) {
  auto name = [&](NodeId id) {
    const Word& w = p.node(id).element.lexmin_word;
    if (w.empty()) return std::string("e");
    std::string s;
    for (int i : w) s += "s" + std::to_string(i);
    return s;
  };
  std::ostringstream os;
  os << "digraph A {\n";
  for (NodeId i = 0; i < p.size(); ++i) os << "  \"" << name(i) << "\";\n";
  for (const auto& c : p.covers())
    os << "  \"" << name(c.lower) << "\" -> \"" << name(c.upper) << "\" [label=\"" << c.bond << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace seshadri
