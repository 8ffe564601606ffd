#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iaa/dataset.hpp"
#include "iaa/error.hpp"
#include "iaa/fuzzy_number.hpp"
#include "iaa/ranking.hpp"
#include "iaa/similarity.hpp"

// TOPSIS over fuzzy-number cells: per-criterion ideals are picked among the
// alternatives with the universal ranking, and the distance to an ideal is
// the dissimilarity 1 - S under the chosen measure.

namespace iaa {

enum class Direction { Benefit, Cost };

inline Direction parse_direction(std::string_view text) {
  if (text == "b" || text == "benefit") return Direction::Benefit;
  if (text == "c" || text == "cost") return Direction::Cost;
  throw Error(ErrorCode::InvalidArgument, "unknown direction '" + std::string(text) + "'");
}

class DecisionMatrix {
 public:
  /// Empty `weights` means equal weights; empty `directions` means all benefit.
  DecisionMatrix(const MultiCriteriaDataset& data, std::vector<double> weights = {},
                 std::vector<Direction> directions = {})
      : alternatives_(data.alternatives()),
        criteria_(data.criteria()),
        directions_(std::move(directions)) {
    const auto k = criteria_.size();
    if (weights.empty()) weights.assign(k, 1.0);
    if (directions_.empty()) directions_.assign(k, Direction::Benefit);
    if (weights.size() != k)
      throw Error(ErrorCode::InvalidArgument,
                  "expected " + std::to_string(k) + " weights, got " + std::to_string(weights.size()));
    if (directions_.size() != k)
      throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(k) +
                                                  " directions, got " +
                                                  std::to_string(directions_.size()));
    double sum = 0.0;
    for (double w : weights) {
      if (!(w >= 0.0) || !std::isfinite(w))
        throw Error(ErrorCode::InvalidArgument, "criterion weights must be finite and >= 0");
      sum += w;
    }
    if (!(sum > 0.0)) throw Error(ErrorCode::InvalidArgument, "criterion weights sum to zero");
    for (double w : weights) weights_.push_back(w / sum);

    for (std::size_t a = 0; a < alternatives_.size(); ++a) {
      std::vector<FuzzyNumber> row;
      for (std::size_t c = 0; c < k; ++c) row.push_back(construct_fuzzy(data.cell(a, c), data.scale()));
      cells_.push_back(std::move(row));
    }
  }

  const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  const std::vector<std::string>& criteria() const noexcept { return criteria_; }
  /// Normalized to sum to one.
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<Direction>& directions() const noexcept { return directions_; }
  const FuzzyNumber& cell(std::size_t alternative, std::size_t criterion) const {
    return cells_.at(alternative).at(criterion);
  }

  std::vector<FuzzyNumber> column(std::size_t criterion) const {
    std::vector<FuzzyNumber> out;
    for (const auto& row : cells_) out.push_back(row.at(criterion));
    return out;
  }

 private:
  std::vector<std::string> alternatives_;
  std::vector<std::string> criteria_;
  std::vector<double> weights_;
  std::vector<Direction> directions_;
  std::vector<std::vector<FuzzyNumber>> cells_;
};

struct CriterionIdeals {
  std::size_t positive;  // alternative index of the PIS
  std::size_t negative;  // alternative index of the NIS
  bool degenerate;       // PIS and NIS compare equal
};

inline std::vector<CriterionIdeals> select_ideals(const DecisionMatrix& m,
                                                  double epsilon = kDefaultEpsilon) {
  std::vector<CriterionIdeals> out;
  for (std::size_t c = 0; c < m.criteria().size(); ++c) {
    const auto column = m.column(c);
    const auto ranking = rank_universal(column, epsilon);
    std::size_t top = ranking.entries.front().input;
    std::size_t bottom = ranking.entries.back().input;
    if (m.directions()[c] == Direction::Cost) std::swap(top, bottom);
    const bool degenerate =
        universal_compare(column[top], column[bottom], epsilon) == Comparison::Equal;
    out.push_back({top, bottom, degenerate});
  }
  return out;
}

struct Separation {
  double d_plus;
  double d_minus;
};

inline void require_topsis_measure(Measure measure) {
  if (measure == Measure::Jaccard)
    throw Error(ErrorCode::InvalidArgument, "TOPSIS supports the attribute or combined measure");
}

inline std::vector<Separation> separations(const DecisionMatrix& m,
                                           const std::vector<CriterionIdeals>& ideals,
                                           Measure measure,
                                           const SimilarityWeights& weights = {}) {
  require_topsis_measure(measure);
  if (ideals.size() != m.criteria().size())
    throw Error(ErrorCode::InvalidArgument, "one ideal pair per criterion required");
  std::vector<Separation> out;
  for (std::size_t a = 0; a < m.alternatives().size(); ++a) {
    Separation s{0.0, 0.0};
    for (std::size_t c = 0; c < m.criteria().size(); ++c) {
      const auto& cell = m.cell(a, c);
      const double w = m.weights()[c];
      s.d_plus += w * (1.0 - similarity(measure, cell, m.cell(ideals[c].positive, c), weights));
      s.d_minus += w * (1.0 - similarity(measure, cell, m.cell(ideals[c].negative, c), weights));
    }
    out.push_back(s);
  }
  return out;
}

struct TopsisEntry {
  std::string label;
  double d_plus;
  double d_minus;
  double closeness;
  std::size_t rank;
  bool degenerate;  // D+ + D- == 0, closeness pinned to 0.5
};

struct TopsisIdealReport {
  std::string criterion;
  std::string positive;
  std::string negative;
  bool degenerate;
};

struct TopsisResult {
  Measure measure;
  std::vector<TopsisEntry> entries;  // alternative order of the matrix
  std::vector<std::size_t> order;    // entry indices, best first
  std::vector<TopsisIdealReport> ideals;
  std::vector<std::vector<std::string>> ties;
};

struct TopsisOptions {
  double epsilon = kDefaultEpsilon;
  /// Criterion whose universal relation breaks exact closeness ties.
  std::optional<std::size_t> tie_break_criterion;
  SimilarityWeights weights;
};

inline TopsisResult topsis_rank(const DecisionMatrix& m, Measure measure,
                                const TopsisOptions& options = {}) {
  require_topsis_measure(measure);
  if (options.tie_break_criterion && *options.tie_break_criterion >= m.criteria().size())
    throw Error(ErrorCode::InvalidArgument, "tie-break criterion out of range");
  const auto ideals = select_ideals(m, options.epsilon);
  const auto seps = separations(m, ideals, measure, options.weights);

  TopsisResult result{measure, {}, {}, {}, {}};
  for (std::size_t c = 0; c < ideals.size(); ++c)
    result.ideals.push_back({m.criteria()[c], m.alternatives()[ideals[c].positive],
                             m.alternatives()[ideals[c].negative], ideals[c].degenerate});

  std::vector<std::optional<double>> scores;
  for (std::size_t a = 0; a < seps.size(); ++a) {
    const double total = seps[a].d_plus + seps[a].d_minus;
    const bool degenerate = !(total > 0.0);
    const double cc = degenerate ? 0.5 : seps[a].d_minus / total;
    result.entries.push_back({m.alternatives()[a], seps[a].d_plus, seps[a].d_minus, cc, 0, degenerate});
    scores.push_back(cc);
  }

  auto tie_break = [&](std::size_t a, std::size_t b) {
    if (!options.tie_break_criterion) return Comparison::Equal;
    const auto c = *options.tie_break_criterion;
    return universal_compare(m.cell(a, c), m.cell(b, c), options.epsilon);
  };
  std::vector<std::size_t> order(result.entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ca = result.entries[a].closeness;
    const double cb = result.entries[b].closeness;
    if (ca != cb) return ca > cb;
    return tie_break(a, b) == Comparison::AGreater;
  });
  auto ranking = detail::assign_ranks(
      "topsis", order, m.alternatives(), scores, [&](std::size_t a, std::size_t b) {
        return result.entries[a].closeness == result.entries[b].closeness &&
               tie_break(a, b) == Comparison::Equal;
      });
  for (const auto& e : ranking.entries) result.entries[e.input].rank = e.rank;
  result.order = std::move(order);
  result.ties = std::move(ranking.ties);
  return result;
}

}  // namespace iaa
