// Copyright 2026 The SocialGCN Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sstream>

#include <gtest/gtest.h>

#include "socialgcn/dataset.hpp"
#include "socialgcn/errors.hpp"
#include "socialgcn/fingerprint.hpp"
#include "socialgcn/preprocess.hpp"
#include "socialgcn/split.hpp"
#include "socialgcn/synthetic.hpp"
#include "socialgcn/tsv_io.hpp"
#include "test_support.hpp"

namespace sgcn {
namespace {

using sgcn_test::TempDir;
using sgcn_test::write_text;

std::vector<Id> ids(std::span<const Id> s) { return {s.begin(), s.end()}; }

template <typename Fn>
std::string error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(InteractionMatrix, EncodesBothDirections) {
  InteractionMatrix m(2, 2, {{0, 0}, {0, 1}, {1, 0}});
  EXPECT_EQ(ids(m.items_of(0)), (std::vector<Id>{0, 1}));
  EXPECT_EQ(ids(m.items_of(1)), (std::vector<Id>{0}));
  EXPECT_EQ(ids(m.users_of(0)), (std::vector<Id>{0, 1}));
  EXPECT_EQ(ids(m.users_of(1)), (std::vector<Id>{0}));
  EXPECT_TRUE(m.contains(1, 0));
  EXPECT_FALSE(m.contains(1, 1));
}

TEST(InteractionMatrix, RejectsOutOfRange) {
  EXPECT_THROW(InteractionMatrix(2, 2, {{2, 0}}), DataError);
  EXPECT_THROW(InteractionMatrix(2, 2, {{0, 2}}), DataError);
}

TEST(InteractionMatrix, DirectionsAgreeOnRandomInput) {
  std::mt19937_64 rng(5);
  std::vector<Edge> edges;
  for (int k = 0; k < 300; ++k) edges.push_back({Id(rng() % 20), Id(rng() % 15)});
  InteractionMatrix m(20, 15, edges);
  std::size_t by_item = 0;
  for (Id i = 0; i < 15; ++i) {
    for (Id a : m.users_of(i)) {
      EXPECT_TRUE(m.contains(a, i));
      ++by_item;
    }
  }
  EXPECT_EQ(by_item, m.num_edges());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  EXPECT_EQ(m.edges(), edges);
}

TEST(LoadInteractions, ParsesLines) {
  std::istringstream in("0\t0\n0\t1\n1\t0\n");
  const InteractionMatrix m = read_interactions(in, "t");
  EXPECT_EQ(m.num_users(), 2u);
  EXPECT_EQ(ids(m.items_of(0)), (std::vector<Id>{0, 1}));
  EXPECT_EQ(ids(m.items_of(1)), (std::vector<Id>{0}));
}

TEST(LoadInteractions, CollapsesDuplicates) {
  std::istringstream in("0\t0\n0\t0\n");
  EXPECT_EQ(read_interactions(in, "t").num_edges(), 1u);
}

TEST(LoadInteractions, ReportsMalformedLine) {
  std::istringstream in("a\t3\n");
  const std::string msg = error_of([&] { read_interactions(in, "ratings.tsv"); });
  EXPECT_NE(msg.find("ratings.tsv:1"), std::string::npos) << msg;
}

TEST(LoadInteractions, HeaderFixesDimensions) {
  std::istringstream in("users=5 items=7\n# comment\n\n0\t1\r\n");
  const InteractionMatrix m = read_interactions(in, "t");
  EXPECT_EQ(m.num_users(), 5u);
  EXPECT_EQ(m.num_items(), 7u);
}

TEST(LoadInteractions, RejectsIdBeyondHeader) {
  std::istringstream in("users=2 items=2\n0\t5\n");
  EXPECT_THROW(read_interactions(in, "t"), DataError);
}

TEST(LoadInteractions, MissingFileIsDataError) {
  EXPECT_THROW(load_interactions("/nonexistent/ratings.tsv"), DataError);
}

TEST(LoadSocial, ParsesEgoNetworks) {
  std::istringstream in("0\t1\n0\t2\n");
  const SocialGraph g = read_social(in, "s");
  EXPECT_EQ(ids(g.followees_of(0)), (std::vector<Id>{1, 2}));
  EXPECT_TRUE(g.followees_of(1).empty());
  EXPECT_TRUE(g.followees_of(2).empty());
}

TEST(LoadSocial, RejectsSelfLoop) {
  std::istringstream in("3\t3\n");
  EXPECT_THROW(read_social(in, "s"), DataError);
}

TEST(LoadSocial, EmptyGraphFromHeader) {
  std::istringstream in("users=4\n");
  const SocialGraph g = read_social(in, "s");
  EXPECT_EQ(g.num_users(), 4u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(LoadFeatures, WellFormed) {
  std::istringstream in("0\t1,2,3\n1\t4,5,6\n");
  const FeatureTable t = read_features(in, "f", 2);
  EXPECT_EQ(t.count(), 2u);
  EXPECT_EQ(t.dim(), 3u);
  EXPECT_EQ(t.values()(2, 1), 6.0);
}

TEST(LoadFeatures, MissingEntityIsNamed) {
  std::istringstream in("0\t1,2,3\n");
  const std::string msg = error_of([&] { read_features(in, "f", 2); });
  EXPECT_NE(msg.find("missing entity 1"), std::string::npos) << msg;
}

TEST(LoadFeatures, RejectsNonFinite) {
  std::istringstream in("0\t1,NaN\n");
  const std::string msg = error_of([&] { read_features(in, "f", 1); });
  EXPECT_NE(msg.find("non-finite"), std::string::npos) << msg;
}

TEST(LoadFeatures, RejectsInconsistentDimension) {
  std::istringstream in("0\t1,2\n1\t1\n");
  EXPECT_THROW(read_features(in, "f", 2), DataError);
}

TEST(TsvIo, RoundTrip) {
  const SyntheticData d = generate_synthetic_data(SyntheticSpec{});
  std::ostringstream a, b, c;
  write_interactions(a, d.interactions);
  write_social(b, d.social);
  write_features(c, d.user_features);
  std::istringstream ra(a.str()), rb(b.str()), rc(c.str());
  EXPECT_EQ(read_interactions(ra, "a"), d.interactions);
  EXPECT_EQ(read_social(rb, "b"), d.social);
  EXPECT_EQ(read_features(rc, "c", d.user_features.count()), d.user_features);
}

TEST(TsvIo, AtomicWriteReplacesWholeFile) {
  TempDir dir;
  const auto path = dir.path() / "f.txt";
  write_file_atomic(path, "first version\n");
  write_file_atomic(path, "second\n");
  EXPECT_EQ(sgcn_test::read_file(path), "second\n");
  EXPECT_FALSE(std::filesystem::exists(dir.path() / "f.txt.tmp"));
  EXPECT_THROW(write_file_atomic(dir.path() / "missing" / "f.txt", "x"), DataError);
}

SocialGraph complete_graph(std::size_t m) {
  std::vector<Edge> e;
  for (Id a = 0; a < m; ++a) {
    for (Id b = 0; b < m; ++b) {
      if (a != b) e.push_back({a, b});
    }
  }
  return SocialGraph(m, e);
}

TEST(Preprocess, UserWithOneRatingIsRemoved) {
  // User 0 has five followees but a single rating.
  InteractionMatrix r(6, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}, {3, 1},
                             {4, 0}, {4, 1}, {5, 0}, {5, 1}});
  const FilterResult f = preprocess_filter(r, complete_graph(6));
  EXPECT_FALSE(f.user_map[0].has_value());
  EXPECT_EQ(f.interactions.num_users(), 5u);
  EXPECT_EQ(*f.user_map[1], 0u);
}

TEST(Preprocess, ItemRatedOnceIsDropped) {
  InteractionMatrix r(3, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
  const FilterResult f = preprocess_filter(r, complete_graph(3));
  EXPECT_FALSE(f.item_map[2].has_value());
  EXPECT_EQ(f.interactions.num_users(), 3u);
  EXPECT_EQ(ids(f.interactions.items_of(0)), (std::vector<Id>{0, 1}));
}

TEST(Preprocess, CascadeReachesFixedPoint) {
  // Pass 1 drops item 2 (one rating); user 2 falls to one rating and goes
  // in pass 2; items 0 and 1 keep two raters each.
  InteractionMatrix r(3, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 1}, {2, 2}});
  FilterThresholds t;
  t.min_links = 0;
  const FilterResult f = preprocess_filter(r, complete_graph(3), t);
  EXPECT_EQ(f.interactions.num_users(), 2u);
  EXPECT_EQ(f.interactions.num_items(), 2u);
  EXPECT_EQ(f.interactions.num_edges(), 4u);
  EXPECT_FALSE(f.user_map[2].has_value());
  EXPECT_FALSE(f.item_map[2].has_value());
  EXPECT_EQ(f.social.num_edges(), 2u);
}

TEST(Preprocess, LinksCountedAmongSurvivors) {
  // User 3 has no ratings; user 4 follows 3 and 0, so it keeps one link.
  InteractionMatrix r(5, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {4, 0}, {4, 1}});
  SocialGraph g(5, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}, {4, 3}, {4, 0}});
  const FilterResult f = preprocess_filter(r, g);
  EXPECT_EQ(f.interactions.num_users(), 3u);
  EXPECT_FALSE(f.user_map[3].has_value());
  EXPECT_FALSE(f.user_map[4].has_value());
  EXPECT_EQ(f.social.num_edges(), 6u);
}

TEST(Preprocess, EverythingRemovedIsDataError) {
  InteractionMatrix r(2, 2, {{0, 0}});
  EXPECT_THROW(preprocess_filter(r, SocialGraph(2, {})), DataError);
}

InteractionMatrix hundred_edges() {
  std::vector<Edge> e;
  for (Id a = 0; a < 10; ++a) {
    for (Id i = 0; i < 10; ++i) e.push_back({a, i});
  }
  return InteractionMatrix(10, 10, e);
}

TEST(Split, FractionsFloor) {
  const DatasetBundle b = split(hundred_edges(), SplitConfig{0.1, 0.1, 7});
  EXPECT_EQ(b.test.num_edges(), 10u);
  EXPECT_EQ(b.validation.num_edges(), 9u);
  EXPECT_EQ(b.train.num_edges(), 81u);
  EXPECT_NO_THROW(b.validate());
}

TEST(Split, Deterministic) {
  const auto a = split(hundred_edges(), SplitConfig{0.1, 0.1, 7});
  const auto b = split(hundred_edges(), SplitConfig{0.1, 0.1, 7});
  const auto c = split(hundred_edges(), SplitConfig{0.1, 0.1, 8});
  EXPECT_EQ(a, b);
  EXPECT_NE(a.test, c.test);
}

TEST(Split, EmptyTestIsError) {
  InteractionMatrix m(5, 5, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}});
  EXPECT_THROW(split(m, SplitConfig{0.1, 0.1, 1}), DataError);
}

TEST(Split, RejectsBadFraction) {
  EXPECT_THROW(split(hundred_edges(), SplitConfig{0.0, 0.1, 1}), ConfigError);
  EXPECT_THROW(split(hundred_edges(), SplitConfig{0.1, 1.0, 1}), ConfigError);
}

double intra_cluster_fraction(const SyntheticData& d) {
  std::size_t intra = 0;
  const auto edges = d.social.edges();
  for (const Edge& e : edges) intra += d.user_cluster[e.from] == d.user_cluster[e.to];
  return static_cast<double>(intra) / static_cast<double>(edges.size());
}

TEST(Synthetic, FullHomophilyKeepsEdgesInCluster) {
  SyntheticSpec s;
  s.homophily = 1.0;
  EXPECT_DOUBLE_EQ(intra_cluster_fraction(generate_synthetic_data(s)), 1.0);
}

TEST(Synthetic, ZeroHomophilyMatchesChance) {
  SyntheticSpec s;
  s.users = 500;
  s.homophily = 0.0;
  s.seed = 11;
  const double frac = intra_cluster_fraction(generate_synthetic_data(s));
  EXPECT_NEAR(frac, 1.0 / static_cast<double>(s.clusters), 0.05);
}

TEST(Synthetic, DeterministicPerSeed) {
  SyntheticSpec s;
  EXPECT_EQ(generate_synthetic(s), generate_synthetic(s));
  SyntheticSpec t = s;
  t.seed = 2;
  EXPECT_NE(generate_synthetic(s).train, generate_synthetic(t).train);
}

TEST(Synthetic, DensityRoughlyAsRequested) {
  SyntheticSpec s;
  s.users = 400;
  s.items = 300;
  const SyntheticData d = generate_synthetic_data(s);
  const double density = static_cast<double>(d.interactions.num_edges()) / (400.0 * 300.0);
  EXPECT_NEAR(density, s.density, 0.01);
  EXPECT_EQ(d.user_features.count(), 400u);
  EXPECT_EQ(d.item_features.dim(), s.dim_item);
}

TEST(Synthetic, RejectsDegenerateSpec) {
  SyntheticSpec s;
  s.density = 0.0;
  EXPECT_THROW(generate_synthetic_data(s), ConfigError);
  s = SyntheticSpec{};
  s.users = 0;
  EXPECT_THROW(generate_synthetic_data(s), ConfigError);
}

TEST(Bundle, ValidateCatchesOverlap) {
  DatasetBundle b;
  b.train = InteractionMatrix(2, 2, {{0, 0}});
  b.validation = InteractionMatrix(2, 2, {});
  b.test = InteractionMatrix(2, 2, {{0, 0}});
  b.social = SocialGraph(2, {});
  EXPECT_THROW(b.validate(), DataError);
  EXPECT_TRUE(rated_anywhere(b, 0, 0));
  EXPECT_FALSE(rated_anywhere(b, 1, 0));
}

TEST(Fingerprint, StableAndSensitive) {
  const DatasetBundle a = generate_synthetic(SyntheticSpec{});
  DatasetBundle b = a;
  EXPECT_EQ(dataset_fingerprint(a), dataset_fingerprint(b));
  EXPECT_EQ(dataset_fingerprint(a).size(), 64u);
  b.social = SocialGraph(a.num_users(), {});
  EXPECT_NE(dataset_fingerprint(a), dataset_fingerprint(b));
}

TEST(Fingerprint, KnownDigest) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace sgcn
