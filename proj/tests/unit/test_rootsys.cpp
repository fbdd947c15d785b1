#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lagsub/error.hpp"
#include "lagsub/roots/canonical_label.hpp"
#include "lagsub/roots/isometry.hpp"
#include "lagsub/roots/parabolic.hpp"

using namespace lagsub::roots;

namespace {

// Closedness and P u -P = R checked straight from root vectors.
bool brute_parabolic(const RootSystem& r, const RootSubset& s) {
  std::set<int> in(s.begin(), s.end());
  for (int a : s) {
    for (int b : s) {
      RootVec v = r.root(a);
      for (int k = 0; k < r.rank(); ++k) v[k] += r.root(b)[k];
      const int c = r.index_of(v);
      if (c >= 0 && !in.count(c)) return false;
    }
  }
  for (int a = 0; a < r.size(); ++a) {
    if (!in.count(a) && !in.count(r.negative(a))) return false;
  }
  return true;
}

std::vector<OrbitKey> sample_keys(const RootSystem& r) {
  std::vector<RatVec> hs{RatVec(r.rank(), 0), RatVec(r.rank(), 1)};
  RatVec skew(r.rank(), 0);
  skew[0] = 2;
  hs.push_back(skew);
  const auto ps = enumerate_parabolic_subsets(r);
  std::vector<OrbitKey> keys;
  for (const auto& p : ps) {
    for (const auto& pp : ps) {
      for (const auto& sigma : enumerate_isometries(r, levi_part(r, p), levi_part(r, pp))) {
        for (const auto& h : hs) keys.push_back(make_key(p, pp, sigma, h));
      }
    }
  }
  return keys;
}

}  // namespace

TEST(RootSystem, RootCounts) {
  const std::map<std::string, int> expected{{"A1", 2},  {"A2", 6},   {"B2", 8},   {"G2", 12}, {"A3", 12},
                                            {"B3", 18}, {"C3", 18},  {"D4", 24},  {"F4", 48}, {"E6", 72},
                                            {"E7", 126}, {"E8", 240}, {"A1xA1", 4}};
  for (const auto& [type, n] : expected) EXPECT_EQ(RootSystem(type).size(), n) << type;
}

TEST(RootSystem, BadTypesThrow) {
  for (const char* t : {"", "A0", "B1", "D3", "E9", "G3", "X2", "A1x", "a2"}) {
    EXPECT_THROW(RootSystem{t}, lagsub::ParseError) << t;
  }
}

TEST(RootSystem, SimpleRootsAndNorms) {
  const RootSystem g2("G2");
  EXPECT_EQ(g2.cartan(0, 1), -3);
  EXPECT_EQ(g2.cartan(1, 0), -1);
  EXPECT_EQ(g2.norm2(1), 2);
  EXPECT_EQ(g2.norm2(0), mpq_class(2, 3));
  const RootSystem b2("B2");
  EXPECT_EQ(b2.norm2(0), 2);
  EXPECT_EQ(b2.norm2(1), 1);
  for (int i = 0; i < b2.size(); ++i) {
    EXPECT_EQ(b2.pairing(i, i), 2);
    EXPECT_EQ(b2.negative(b2.negative(i)), i);
  }
}

TEST(RootSystem, WeylGroupOrders) {
  const std::map<std::string, std::size_t> expected{{"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12},
                                                    {"A3", 24}, {"B3", 48}, {"D4", 192}, {"F4", 1152}};
  for (const auto& [type, n] : expected) EXPECT_EQ(RootSystem(type).weyl_group().size(), n) << type;
  EXPECT_THROW(RootSystem("A5").weyl_group(), lagsub::RankCapExceeded);
}

TEST(RootSystem, WeylElementsPreserveInnerProducts) {
  const RootSystem r("B3");
  for (const auto& w : r.weyl_group()) {
    for (int a = 0; a < r.size(); a += 3) {
      for (int b = 0; b < r.size(); b += 2) EXPECT_EQ(r.inner(r.root(w.perm[a]), r.root(w.perm[b])), r.inner(r.root(a), r.root(b)));
    }
  }
}

TEST(RootSystem, FundamentalCoweightsAreDual) {
  const RootSystem r("G2");
  const auto w = r.fundamental_coweights();
  for (int i = 0; i < r.rank(); ++i) {
    for (int j = 0; j < r.rank(); ++j) EXPECT_EQ(r.evaluate(j, w[i]), i == j ? 1 : 0);
  }
}

class ParabolicOracle : public ::testing::TestWithParam<std::string> {};

TEST_P(ParabolicOracle, EnumerationMatchesBruteForce) {
  const RootSystem r(GetParam());
  std::set<RootSubset> brute;
  for (unsigned mask = 0; mask < (1u << r.size()); ++mask) {
    RootSubset s;
    for (int a = 0; a < r.size(); ++a) {
      if ((mask >> a) & 1u) s.push_back(a);
    }
    if (brute_parabolic(r, s)) brute.insert(s);
  }
  const auto got = enumerate_parabolic_subsets(r);
  EXPECT_EQ(std::set<RootSubset>(got.begin(), got.end()), brute);
  EXPECT_EQ(got.size(), brute.size());
  for (const auto& p : got) EXPECT_TRUE(is_parabolic(r, p));
}

INSTANTIATE_TEST_SUITE_P(RankAtMostTwo, ParabolicOracle, ::testing::Values("A1", "A2", "B2", "G2", "A1xA1"));

TEST(Parabolic, KnownCounts) {
  EXPECT_EQ(enumerate_parabolic_subsets(RootSystem("A1")).size(), 3u);
  EXPECT_EQ(enumerate_parabolic_subsets(RootSystem("A2")).size(), 13u);
  EXPECT_EQ(enumerate_parabolic_subsets(RootSystem("B2")).size(), 17u);
}

TEST(Parabolic, LeviAndSimpleSystem) {
  const RootSystem r("A2");
  const RootSubset p = standard_parabolic(r, {0});
  EXPECT_TRUE(is_parabolic(r, p));
  const RootSubset a = levi_part(r, p);
  EXPECT_EQ(a, (RootSubset{0, r.negative(0)}));
  EXPECT_EQ(simple_system(r, a), (RootSubset{0}));
  EXPECT_TRUE(is_parabolic(r, {0, 1, 2}));
  EXPECT_FALSE(is_parabolic(r, {0, 1}));
  EXPECT_FALSE(is_parabolic(r, {0, 1, 2, r.negative(2)}));
}

TEST(Isometry, EnumerationMatchesBruteForceBijections) {
  for (const char* type : {"A2", "B2", "A1xA1"}) {
    const RootSystem r(type);
    RootSubset all(r.size());
    for (int a = 0; a < r.size(); ++a) all[a] = a;
    std::set<std::vector<int>> brute;
    std::vector<int> perm = all;
    do {
      bool ok = true;
      for (int a = 0; a < r.size() && ok; ++a) {
        for (int b = a; b < r.size() && ok; ++b) ok = r.inner(r.root(perm[a]), r.root(perm[b])) == r.inner(r.root(a), r.root(b));
      }
      if (ok) brute.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<std::vector<int>> got;
    for (const auto& s : enumerate_isometries(r, all, all)) {
      EXPECT_TRUE(is_isometry(r, s));
      got.insert(s.image);
    }
    EXPECT_EQ(got, brute) << type;
  }
  EXPECT_EQ(enumerate_isometries(RootSystem("A2"), {0, 3}, {0, 3}).size(), 2u);
}

TEST(Isometry, LeviOfSigmaAndStableSimpleSystem) {
  const RootSystem r("A2");
  const RootSubset all{0, 1, 2, 3, 4, 5};
  int preserving = 0;
  for (const auto& s : enumerate_isometries(r, all, all)) {
    EXPECT_EQ(levi_of_sigma(r, s), all);
    if (preserves_simple_system(r, s)) {
      ++preserving;
      const RootSubset simple = stable_simple_system(r, s);
      ASSERT_EQ(simple.size(), 2u);
      RootSubset img{s(simple[0]), s(simple[1])};
      std::sort(img.begin(), img.end());
      EXPECT_EQ(img, simple);
    }
  }
  EXPECT_EQ(preserving, 4);
}

class CanonicalLabel : public ::testing::TestWithParam<std::string> {};

TEST_P(CanonicalLabel, ConstantOnOrbitsAndSeparating) {
  const RootSystem r(GetParam());
  const auto keys = sample_keys(r);
  std::map<OrbitKey, OrbitKey> label;
  for (const auto& k : keys) label.emplace(k, weyl_canonical_label(r, k));
  for (const auto& k : keys) {
    std::set<OrbitKey> orbit;
    for (const auto& w : r.weyl_group()) {
      const OrbitKey wk = act(r, w, k);
      orbit.insert(wk);
      EXPECT_EQ(weyl_canonical_label(r, wk), label.at(k));
    }
    for (const auto& other : keys) {
      EXPECT_EQ(label.at(other) == label.at(k), orbit.count(other) > 0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(RankAtMostTwo, CanonicalLabel, ::testing::Values("A1", "A2", "B2", "A1xA1"));
