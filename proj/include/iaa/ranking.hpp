#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "iaa/attributes.hpp"
#include "iaa/error.hpp"
#include "iaa/fuzzy_number.hpp"
#include "iaa/interval.hpp"
#include "iaa/similarity.hpp"

namespace iaa {

inline constexpr double kDefaultEpsilon = 1e-9;

enum class Comparison { AGreater, BGreater, Equal };

struct RankedEntry {
  std::string label;
  std::optional<double> score;
  std::size_t rank;   // 1-based, ties share the smaller rank
  std::size_t input;  // position in the ranked input list
};

struct RankingResult {
  std::string method;
  std::vector<RankedEntry> entries;
  std::vector<std::vector<std::string>> ties;

  const RankedEntry* find(const std::string& label) const {
    for (const auto& e : entries)
      if (e.label == label) return &e;
    return nullptr;
  }

  std::vector<std::string> order() const {
    std::vector<std::string> out;
    for (const auto& e : entries) out.push_back(e.label);
    return out;
  }
};

/// |x - y| <= epsilon * max(1, |x|, |y|)
inline bool nearly_equal(double x, double y, double epsilon) noexcept {
  return std::abs(x - y) <= epsilon * std::max({1.0, std::abs(x), std::abs(y)});
}

/// Comparison keys of the universal ranking relation.
struct UniversalKey {
  double centroid_x;
  double perimeter;
  double centroid_y;
};

inline UniversalKey universal_key(const FuzzyNumber& fz) {
  const auto c = centroid(fz);
  return {c.x, perimeter(fz), c.y};
}

/// Greater centroid x wins; then lower perimeter; then greater centroid y.
inline Comparison universal_compare(const UniversalKey& a, const UniversalKey& b,
                                    double epsilon = kDefaultEpsilon) {
  if (!nearly_equal(a.centroid_x, b.centroid_x, epsilon))
    return a.centroid_x > b.centroid_x ? Comparison::AGreater : Comparison::BGreater;
  if (!nearly_equal(a.perimeter, b.perimeter, epsilon))
    return a.perimeter < b.perimeter ? Comparison::AGreater : Comparison::BGreater;
  if (!nearly_equal(a.centroid_y, b.centroid_y, epsilon))
    return a.centroid_y > b.centroid_y ? Comparison::AGreater : Comparison::BGreater;
  return Comparison::Equal;
}

inline Comparison universal_compare(const FuzzyNumber& a, const FuzzyNumber& b,
                                    double epsilon = kDefaultEpsilon) {
  if (epsilon < 0.0) throw Error(ErrorCode::InvalidArgument, "epsilon must be >= 0");
  require_same_scale(a, b);
  return universal_compare(universal_key(a), universal_key(b), epsilon);
}

namespace detail {

inline void require_shared_scale(const std::vector<FuzzyNumber>& items) {
  for (const auto& fz : items) require_same_scale(items.front(), fz);
}

/// Assigns competition ranks to an already sorted permutation. `tied(i, j)`
/// says whether sorted neighbours i and j (input indices) compare equal.
template <typename Tied>
RankingResult assign_ranks(std::string method, const std::vector<std::size_t>& order,
                           const std::vector<std::string>& labels,
                           const std::vector<std::optional<double>>& scores, Tied tied) {
  RankingResult result{std::move(method), {}, {}};
  std::vector<std::string> group;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto idx = order[pos];
    std::size_t rank = pos + 1;
    if (pos > 0 && tied(order[pos - 1], idx)) {
      rank = result.entries.back().rank;
      if (group.empty()) group.push_back(labels[order[pos - 1]]);
      group.push_back(labels[idx]);
    } else if (!group.empty()) {
      result.ties.push_back(std::move(group));
      group.clear();
    }
    result.entries.push_back({labels[idx], scores[idx], rank, idx});
  }
  if (!group.empty()) result.ties.push_back(std::move(group));
  return result;
}

inline std::vector<std::string> labels_of(const std::vector<FuzzyNumber>& items) {
  std::vector<std::string> out;
  for (const auto& fz : items) out.push_back(fz.label());
  return out;
}

}  // namespace detail

inline RankingResult rank_universal(const std::vector<FuzzyNumber>& items,
                                    double epsilon = kDefaultEpsilon) {
  if (items.empty()) throw Error(ErrorCode::InvalidArgument, "nothing to rank");
  if (epsilon < 0.0) throw Error(ErrorCode::InvalidArgument, "epsilon must be >= 0");
  detail::require_shared_scale(items);
  std::vector<UniversalKey> keys;
  for (const auto& fz : items) keys.push_back(universal_key(fz));

  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return universal_compare(keys[a], keys[b], epsilon) == Comparison::AGreater;
  });
  return detail::assign_ranks(
      "universal", order, detail::labels_of(items),
      std::vector<std::optional<double>>(items.size()), [&](std::size_t a, std::size_t b) {
        return universal_compare(keys[a], keys[b], epsilon) == Comparison::Equal;
      });
}

/// S(fz, best) / (S(fz, best) + S(fz, worst)); higher ranks higher.
inline double ideal_ratio(const FuzzyNumber& fz, const FuzzyNumber& ideal_best,
                          const FuzzyNumber& ideal_worst, Measure measure,
                          const SimilarityWeights& weights = {}) {
  const double to_best = similarity(measure, fz, ideal_best, weights);
  const double to_worst = similarity(measure, fz, ideal_worst, weights);
  const double total = to_best + to_worst;
  if (total == 0.0) throw UndefinedRatio(fz.label());
  return to_best / total;
}

/// Descending ideal ratio; exactly equal scores fall back to the universal
/// relation and are reported as ties only if that also finds them equal.
inline RankingResult rank_by_ideal_ratio(const std::vector<FuzzyNumber>& items,
                                         const FuzzyNumber& ideal_best,
                                         const FuzzyNumber& ideal_worst, Measure measure,
                                         double epsilon = kDefaultEpsilon,
                                         const SimilarityWeights& weights = {}) {
  if (items.empty()) throw Error(ErrorCode::InvalidArgument, "nothing to rank");
  detail::require_shared_scale(items);
  require_same_scale(items.front(), ideal_best);
  require_same_scale(items.front(), ideal_worst);

  std::vector<double> scores;
  std::vector<UniversalKey> keys;
  for (const auto& fz : items) {
    scores.push_back(ideal_ratio(fz, ideal_best, ideal_worst, measure, weights));
    keys.push_back(universal_key(fz));
  }
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return universal_compare(keys[a], keys[b], epsilon) == Comparison::AGreater;
  });
  std::vector<std::optional<double>> recorded(scores.begin(), scores.end());
  return detail::assign_ranks(
      "ideal_ratio(" + std::string(to_string(measure)) + ")", order, detail::labels_of(items),
      recorded, [&](std::size_t a, std::size_t b) {
        return scores[a] == scores[b] &&
               universal_compare(keys[a], keys[b], epsilon) == Comparison::Equal;
      });
}

/// Traditional baseline: descending mean of interval midpoints.
inline RankingResult rank_baseline_mean(const std::vector<IntervalSet>& sets,
                                        double epsilon = kDefaultEpsilon) {
  if (sets.empty()) throw Error(ErrorCode::InvalidArgument, "nothing to rank");
  std::vector<double> means;
  std::vector<std::string> labels;
  for (const auto& s : sets) {
    means.push_back(midpoint_mean(s));
    labels.push_back(s.label());
  }
  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return means[a] > means[b] && !nearly_equal(means[a], means[b], epsilon);
  });
  std::vector<std::optional<double>> recorded(means.begin(), means.end());
  return detail::assign_ranks("baseline_mean", order, labels, recorded,
                              [&](std::size_t a, std::size_t b) {
                                return nearly_equal(means[a], means[b], epsilon);
                              });
}

}  // namespace iaa
