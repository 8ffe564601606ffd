#pragma once

#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include "iaa/attributes.hpp"
#include "iaa/error.hpp"
#include "iaa/fuzzy_number.hpp"

namespace iaa {

enum class Measure { Jaccard, Attribute, Combined };

constexpr std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::Jaccard: return "jaccard";
    case Measure::Attribute: return "attribute";
    case Measure::Combined: return "combined";
  }
  return "unknown";
}

inline Measure parse_measure(std::string_view text) {
  if (text == "jaccard") return Measure::Jaccard;
  if (text == "attribute") return Measure::Attribute;
  if (text == "combined") return Measure::Combined;
  throw Error(ErrorCode::InvalidArgument, "unknown measure '" + std::string(text) + "'");
}

/// Feature weights of the attribute measure. Only their squares are used,
/// so a unit-norm vector keeps the similarity in [0, 1].
class SimilarityWeights {
 public:
  static constexpr std::array<double, 6> kDefault{0.320726, -0.509757, 0.100985,
                                                   -0.461649, 0.444451, -0.465218};
  static constexpr double kNormTolerance = 1e-4;

  SimilarityWeights() : w_(kDefault) {}

  explicit SimilarityWeights(const std::array<double, 6>& w) : w_(w) {
    if (std::abs(squared_norm() - 1.0) > kNormTolerance)
      throw Error(ErrorCode::InvalidArgument, "similarity weights must have unit norm");
  }

  const std::array<double, 6>& values() const noexcept { return w_; }

  double squared_norm() const noexcept {
    double s = 0.0;
    for (double w : w_) s += w * w;
    return s;
  }

 private:
  std::array<double, 6> w_;
};

/// Discrete intersection-over-union at the union of both numbers' source
/// endpoints, with memberships counted directly from the source intervals.
inline double jaccard(const FuzzyNumber& a, const FuzzyNumber& b) {
  double num = 0.0;
  double den = 0.0;
  for (double x : evaluation_points(a, b)) {
    const double ma = membership_at(a.sources(), x);
    const double mb = membership_at(b.sources(), x);
    num += std::min(ma, mb);
    den += std::max(ma, mb);
  }
  if (den <= 0.0)
    throw Error(ErrorCode::EmptyEvaluation,
                "jaccard of '" + a.label() + "' and '" + b.label() + "' has no support");
  return num / den;
}

inline double attribute_similarity(const FeatureVector& f, const SimilarityWeights& weights) {
  double penalty = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double w = weights.values()[i];
    penalty += w * w * f[i];
  }
  return 1.0 - penalty;
}

inline double attribute_similarity(const FuzzyNumber& a, const FuzzyNumber& b,
                                   const SimilarityWeights& weights, const ScaleConfig& scale) {
  return attribute_similarity(feature_vector(a, b, scale), weights);
}

inline double attribute_similarity(const FuzzyNumber& a, const FuzzyNumber& b,
                                   const SimilarityWeights& weights = {}) {
  return attribute_similarity(a, b, weights, a.scale());
}

inline double combined_similarity(const FuzzyNumber& a, const FuzzyNumber& b,
                                  const SimilarityWeights& weights = {}) {
  return (jaccard(a, b) + attribute_similarity(a, b, weights)) / 2.0;
}

inline double similarity(Measure m, const FuzzyNumber& a, const FuzzyNumber& b,
                         const SimilarityWeights& weights = {}) {
  switch (m) {
    case Measure::Jaccard: return jaccard(a, b);
    case Measure::Attribute: return attribute_similarity(a, b, weights);
    case Measure::Combined: return combined_similarity(a, b, weights);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown measure");
}

}  // namespace iaa
