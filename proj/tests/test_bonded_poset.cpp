#include <gtest/gtest.h>

#include "support.hpp"

using namespace seshadri;
using namespace testing_support;

TEST(BondedPoset, A1TwoOmegaS1) {
  const BondedPoset p = poset_for("A1", "2", "1");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.node(0).label, "e");
  EXPECT_EQ(p.node(1).label, "1");
  ASSERT_EQ(p.covers().size(), 1u);
  EXPECT_EQ(p.covers()[0].bond, 2);
  EXPECT_EQ(p.lcm_bonds(), 2);
}

TEST(BondedPoset, PointStratum) {
  const BondedPoset p = poset_for("A1", "2", "");
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.covers().empty());
  EXPECT_EQ(p.lcm_bonds(), 1);
  const auto chains = maximal_chains(p);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains[0].nodes, std::vector<NodeId>{0});
  EXPECT_EQ(export_dot(p).find("->"), std::string::npos);
}

TEST(BondedPoset, A3OmegaTwoLongest) {
  const BondedPoset p = poset_for("A3", "0,1,0", "longest");
  EXPECT_EQ(p.rank(), 4);
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p.covers().size(), 6u);
  for (const auto& c : p.covers()) EXPECT_EQ(c.bond, 1);
  EXPECT_EQ(maximal_chains(p).size(), 2u);
  EXPECT_EQ(gcd_between(p, p.tau(), p.bottom()), 1);
}

TEST(BondedPoset, A1Gcd) {
  const BondedPoset p = poset_for("A1", "2", "1");
  EXPECT_EQ(gcd_between(p, 1, 0), 2);
  try {
    (void)gcd_between(p, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_chain);
  }
  try {
    (void)gcd_between(p, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_comparable);
  }
}

TEST(BondedPoset, DotRendering) {
  const std::string dot = export_dot(poset_for("A1", "2", "1"));
  EXPECT_NE(dot.find("\"e\" -> \"s1\" [label=\"2\"]"), std::string::npos) << dot;
  std::size_t edges = 0;
  const std::string a3 = export_dot(poset_for("A3", "0,1,0", "longest"));
  for (std::size_t pos = a3.find("->"); pos != std::string::npos; pos = a3.find("->", pos + 1)) ++edges;
  EXPECT_EQ(edges, 6u);
}

TEST(BondedPoset, RejectsBadInput) {
  const RootSystem rs(CartanKind::parse("A2"));
  try {
    (void)build_poset(rs, Weight({-1, 1}), identity_element(rs));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_dominant);
  }
  try {
    (void)build_poset(rs, Weight({1, 0}), element_from_word(rs, {1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_minrep);
  }
}

// Node set, covers and bonds agree with a from-scratch construction.
TEST(BondedPoset, MatchesBruteForceConstruction) {
  std::vector<CatalogCase> cases = catalog();
  cases.push_back({"A3", "1,0,1"});
  cases.push_back({"B3", "0,0,1"});
  cases.push_back({"C3", "0,1,0"});
  cases.push_back({"G2", "0,1"});
  cases.push_back({"G2", "1,1"});
  for (const auto& c : cases) {
    const auto rc = resolve(c.type, c.lambda, "longest");
    const BondedPoset p = build_poset(rc.rs, rc.lambda, rc.tau);
    const BrutePoset b = brute_poset(rc.rs, rc.lambda, rc.tau.lexmin_word);
    ASSERT_EQ(p.size(), b.keys.size()) << c.type << " " << c.lambda;
    std::map<Weight, std::size_t> index;
    for (std::size_t i = 0; i < b.keys.size(); ++i) index[b.keys[i]] = i;
    for (NodeId id = 0; id < p.size(); ++id) {
      ASSERT_TRUE(index.count(p.node(id).element.key));
      EXPECT_EQ(p.node(id).image, b.image[index[p.node(id).element.key]]);
    }
    ASSERT_EQ(p.covers().size(), b.covers.size()) << c.type << " " << c.lambda;
    for (const auto& cv : p.covers()) {
      const auto key = std::make_pair(index[p.node(cv.upper).element.key], index[p.node(cv.lower).element.key]);
      ASSERT_TRUE(b.covers.count(key));
      EXPECT_EQ(cv.bond, b.bonds.at(key)) << c.type << " " << c.lambda;
      EXPECT_GT(cv.bond, 0);
    }
    EXPECT_EQ(static_cast<std::int64_t>(maximal_chains(p).size()), count_chains(p));
  }
}

// leq is the transitive closure of the covers and agrees with Bruhat order.
TEST(BondedPoset, OrderIsClosureOfCovers) {
  for (const auto& c : catalog()) {
    const BondedPoset p = poset_for(c.type, c.lambda, "longest");
    const std::size_t n = p.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (NodeId i = 0; i < n; ++i) reach[i][i] = true;
    for (const auto& cv : p.covers()) reach[cv.lower][cv.upper] = true;
    for (NodeId k = 0; k < n; ++k)
      for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (NodeId a = 0; a < n; ++a)
      for (NodeId b = 0; b < n; ++b) {
        EXPECT_EQ(p.leq(a, b), reach[a][b]);
        EXPECT_EQ(p.leq(a, b), bruhat_leq(p.root_system(), p.node(a).element, p.node(b).element));
      }
  }
}

TEST(BondedPoset, NodeIdsAreALinearExtension) {
  for (const auto& c : catalog()) {
    const BondedPoset p = poset_for(c.type, c.lambda, "longest");
    EXPECT_TRUE(p.node(p.bottom()).element.is_identity());
    for (const auto& cv : p.covers()) EXPECT_LT(cv.lower, cv.upper);
    for (NodeId id = 0; id < p.size(); ++id) EXPECT_TRUE(p.leq(id, p.tau()));
  }
}

TEST(BondedPoset, ChainsAreSaturatedAndEndWithUnitBond) {
  for (const auto& c : catalog()) {
    const BondedPoset p = poset_for(c.type, c.lambda, "longest");
    for (const auto& ch : maximal_chains(p)) {
      ASSERT_EQ(ch.nodes.front(), p.tau());
      ASSERT_EQ(ch.nodes.back(), p.bottom());
      ASSERT_EQ(ch.bonds.size(), ch.nodes.size());
      EXPECT_EQ(ch.bonds.back(), 1);
      EXPECT_EQ(ch.rank(), static_cast<std::size_t>(p.rank()));
      for (std::size_t k = 0; k + 1 < ch.nodes.size(); ++k) {
        EXPECT_EQ(p.node(ch.nodes[k]).length(), p.node(ch.nodes[k + 1]).length() + 1);
        bool found = false;
        for (const auto& cv : p.covers())
          if (cv.upper == ch.nodes[k] && cv.lower == ch.nodes[k + 1]) {
            found = true;
            EXPECT_EQ(cv.bond, ch.bonds[k]);
          }
        EXPECT_TRUE(found);
      }
    }
  }
}

// Restriction to sigma gives the same poset as building it directly.
TEST(BondedPoset, RestrictionAgreesWithDirectBuild) {
  for (const auto& c : catalog()) {
    const BondedPoset top = poset_for(c.type, c.lambda, "longest");
    for (NodeId s = 0; s < top.size(); ++s) {
      const BondedPoset sub = restrict_to(top, s);
      const BondedPoset direct = build_poset(top.root_system(), top.lambda(), top.node(s).element);
      ASSERT_EQ(sub.size(), direct.size());
      for (NodeId i = 0; i < sub.size(); ++i) EXPECT_EQ(sub.node(i).label, direct.node(i).label);
      ASSERT_EQ(sub.covers().size(), direct.covers().size());
      for (std::size_t k = 0; k < sub.covers().size(); ++k) {
        EXPECT_EQ(sub.covers()[k].upper, direct.covers()[k].upper);
        EXPECT_EQ(sub.covers()[k].lower, direct.covers()[k].lower);
        EXPECT_EQ(sub.covers()[k].bond, direct.covers()[k].bond);
      }
      EXPECT_EQ(maximal_chains(sub).size(), maximal_chains(direct).size());
    }
  }
}

TEST(BondedPoset, ChainCapIsEnforced) {
  const BondedPoset p = poset_for("A2", "1,1", "longest");
  try {
    (void)maximal_chains(p, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::too_many_chains);
    EXPECT_EQ(e.error_class(), ErrorClass::resource);
  }
}

TEST(BondedPoset, FindLabel) {
  const BondedPoset p = poset_for("A2", "1,1", "longest");
  EXPECT_EQ(p.find_label("e"), 0u);
  EXPECT_EQ(p.find_label("1.2.1"), p.tau());
  EXPECT_THROW((void)p.find_label("3"), Error);
}
