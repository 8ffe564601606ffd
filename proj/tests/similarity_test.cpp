#include <gtest/gtest.h>

#include <cmath>

#include "iaa/similarity.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace iaa;
using testing_support::film;

namespace {

const FuzzyNumber& best() {
  static const auto fz = testing_support::ideal(IdealKind::Best);
  return fz;
}

const FuzzyNumber& worst() {
  static const auto fz = testing_support::ideal(IdealKind::Worst);
  return fz;
}

}  // namespace

TEST(Jaccard, FilmsAgainstIdeals) {
  struct Row {
    const char* film;
    double best, worst;
  };
  const Row rows[] = {{"Film A", 0, 1},          {"Film B", 1.0 / 12, 0}, {"Film C", 0, 0.125},
                      {"Film D", 2.0 / 17, 0},   {"Film E", 0, 1.0 / 17}, {"Film F", 2.0 / 15, 0},
                      {"Film G", 0.25, 0},       {"Film H", 1.0 / 15, 1.0 / 31},
                      {"Film I", 0, 0},          {"Film J", 1, 0}};
  for (const auto& row : rows) {
    EXPECT_NEAR(jaccard(film(row.film), best()), row.best, 1e-12) << row.film;
    EXPECT_NEAR(jaccard(film(row.film), worst()), row.worst, 1e-12) << row.film;
  }
}

TEST(Jaccard, MatchesOracle) {
  testing_support::RandomSets gen(81);
  const ScaleConfig scale(0, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto ba = gen.bounds();
    const auto bb = gen.bounds();
    const auto a = construct_fuzzy(testing_support::to_set("a", ba), scale);
    const auto b = construct_fuzzy(testing_support::to_set("b", bb), scale);
    EXPECT_NEAR(jaccard(a, b), oracle::jaccard(ba, bb), 1e-12);
  }
}

TEST(AttributeSimilarity, SpikeRows) {
  EXPECT_NEAR(attribute_similarity(film("Film A"), best()), 0.6377, 5e-5);
  EXPECT_NEAR(attribute_similarity(film("Film A"), worst()), 1.0, 1e-12);
  EXPECT_NEAR(attribute_similarity(film("Film I"), best()), 0.9195, 5e-5);
  EXPECT_NEAR(attribute_similarity(film("Film I"), worst()), 0.7182, 5e-5);
  EXPECT_NEAR(attribute_similarity(film("Film J"), best()), 1.0, 1e-12);
  EXPECT_NEAR(attribute_similarity(film("Film J"), worst()), 0.6377, 5e-5);
}

TEST(AttributeSimilarity, MatchesOracle) {
  for (const auto& [name, bounds] : testing_support::film_bounds()) {
    const auto o = oracle::attributes(bounds, 1, 10);
    const auto ob = oracle::attributes({{10, 10}}, 1, 10);
    const auto ow = oracle::attributes({{1, 1}}, 1, 10);
    EXPECT_NEAR(attribute_similarity(film(name), best()), oracle::attribute_similarity(o, ob, 9), 1e-9)
        << name;
    EXPECT_NEAR(attribute_similarity(film(name), worst()), oracle::attribute_similarity(o, ow, 9), 1e-9)
        << name;
  }
}

TEST(CombinedSimilarity, AveragesTheTwoMeasures) {
  EXPECT_NEAR(combined_similarity(film("Film A"), best()),
              attribute_similarity(film("Film A"), best()) / 2, 1e-15);
  EXPECT_NEAR(combined_similarity(film("Film A"), best()), 0.31885, 5e-5);
  EXPECT_NEAR(combined_similarity(film("Film G"), best()),
              (0.25 + attribute_similarity(film("Film G"), best())) / 2, 1e-15);
}

TEST(Similarity, SymmetryIdentityRange) {
  testing_support::RandomSets gen(82);
  gen.lattice = false;
  const ScaleConfig scale(0, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = construct_fuzzy(gen.set(), scale);
    const auto b = construct_fuzzy(gen.set(), scale);
    for (auto m : {Measure::Jaccard, Measure::Attribute, Measure::Combined}) {
      const double ab = similarity(m, a, b);
      EXPECT_EQ(ab, similarity(m, b, a)) << to_string(m);
      EXPECT_NEAR(similarity(m, a, a), 1.0, 1e-12) << to_string(m);
      EXPECT_GE(ab, 0.0);
      EXPECT_LE(ab, 1.0);
    }
    EXPECT_GT(combined_similarity(a, b), 0.0);
  }
}

TEST(SimilarityWeights, DefaultHasUnitNorm) {
  EXPECT_NEAR(SimilarityWeights().squared_norm(), 1.0, 1e-4);
  EXPECT_THROW(SimilarityWeights({1, 1, 0, 0, 0, 0}), Error);
  EXPECT_NO_THROW(SimilarityWeights({1, 0, 0, 0, 0, 0}));
  EXPECT_NEAR(attribute_similarity(FeatureVector{1, 1, 1, 1, 1, 1}, SimilarityWeights()),
              1.0 - SimilarityWeights().squared_norm(), 1e-15);
}

TEST(Similarity, ParseMeasure) {
  EXPECT_EQ(parse_measure("jaccard"), Measure::Jaccard);
  EXPECT_EQ(parse_measure("combined"), Measure::Combined);
  EXPECT_THROW(parse_measure("cosine"), Error);
}

TEST(Similarity, ScaleMismatch) {
  const auto other = construct_fuzzy(testing_support::film_set("Film B"), ScaleConfig(0, 10));
  EXPECT_THROW(jaccard(film("Film B"), other), Error);
  EXPECT_THROW(attribute_similarity(film("Film B"), other), Error);
}
