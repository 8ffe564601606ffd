#pragma once

#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "iaa/iaa.hpp"
#include "oracle.hpp"

#ifndef IAA_DATA_DIR
#define IAA_DATA_DIR "data"
#endif
#ifndef IAA_TEST_DATA_DIR
#define IAA_TEST_DATA_DIR "tests/data"
#endif

namespace testing_support {

inline const iaa::ScaleConfig kFilmScale{1.0, 10.0};

/// Synthetic film review dataset, five critics per film.
inline const std::vector<std::pair<std::string, oracle::Bounds>>& film_bounds() {
  static const std::vector<std::pair<std::string, oracle::Bounds>> films{
      {"Film A", {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}},
      {"Film B", {{5, 6}, {6, 7}, {10, 10}, {3, 4}, {5, 5}}},
      {"Film C", {{2, 3}, {1, 3}, {4, 7}, {1, 3}, {4, 5}}},
      {"Film D", {{6, 6}, {6, 10}, {8, 10}, {5, 9}, {2, 3}}},
      {"Film E", {{1, 4}, {2, 3}, {7, 8}, {3, 3}, {2, 4.4}}},
      {"Film F", {{7, 7}, {8, 9.2}, {9, 10}, {8, 9}, {9, 10}}},
      {"Film G", {{8, 9}, {9, 10}, {9.5, 9.5}, {9, 10}, {10, 10}}},
      {"Film H", {{1.5, 6.5}, {3, 10}, {1, 10}, {2, 9.3}, {8, 8.8}}},
      {"Film I", {{8, 8}, {8, 8}, {8, 8}, {8, 8}, {8, 8}}},
      {"Film J", {{10, 10}, {10, 10}, {10, 10}, {10, 10}, {10, 10}}},
  };
  return films;
}

inline iaa::IntervalSet to_set(const std::string& label, const oracle::Bounds& b) {
  std::vector<iaa::Interval> ivs;
  for (const auto& [l, r] : b) ivs.emplace_back(l, r);
  return iaa::IntervalSet(label, std::move(ivs));
}

inline oracle::Bounds to_bounds(const iaa::IntervalSet& s) {
  oracle::Bounds b;
  for (const auto& iv : s) b.emplace_back(iv.left(), iv.right());
  return b;
}

inline iaa::IntervalSet film_set(const std::string& label) {
  for (const auto& [name, b] : film_bounds())
    if (name == label) return to_set(name, b);
  throw std::out_of_range(label);
}

inline iaa::FuzzyNumber film(const std::string& label) {
  return iaa::construct_fuzzy(film_set(label), kFilmScale);
}

inline std::vector<iaa::FuzzyNumber> all_films() {
  std::vector<iaa::FuzzyNumber> out;
  for (const auto& [name, b] : film_bounds()) out.push_back(iaa::construct_fuzzy(to_set(name, b), kFilmScale));
  return out;
}

inline iaa::FuzzyNumber ideal(iaa::IdealKind kind, const iaa::ScaleConfig& scale = kFilmScale,
                              std::size_t n = 5) {
  return iaa::construct_fuzzy(iaa::ideal_interval_set(scale, n, kind), scale);
}

/// Random interval sets on [lo, hi]: n in [1, max_n], ~20% point intervals,
/// bounds on a 0.5 lattice so that coincident endpoints are common.
struct RandomSets {
  std::mt19937_64 rng;
  double lo = 0.0;
  double hi = 10.0;
  std::size_t max_n = 8;
  double point_share = 0.2;
  bool lattice = true;

  explicit RandomSets(std::uint64_t seed) : rng(seed) {}

  double draw() {
    if (lattice) {
      std::uniform_int_distribution<int> d(0, static_cast<int>((hi - lo) * 2));
      return lo + d(rng) * 0.5;
    }
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
  }

  oracle::Bounds bounds() {
    std::uniform_int_distribution<std::size_t> nd(1, max_n);
    std::bernoulli_distribution point(point_share);
    oracle::Bounds b;
    const auto n = nd(rng);
    for (std::size_t i = 0; i < n; ++i) {
      double x = draw();
      if (point(rng)) {
        b.emplace_back(x, x);
      } else {
        double y = draw();
        if (x > y) std::swap(x, y);
        b.emplace_back(x, y);
      }
    }
    return b;
  }

  iaa::IntervalSet set(const std::string& label = "rand") { return to_set(label, bounds()); }

  /// A film-like fixture: `k` alternatives with `n` sources each.
  std::vector<iaa::FuzzyNumber> fixture(const iaa::ScaleConfig& scale, std::size_t k = 10,
                                        std::size_t n = 5) {
    const auto saved = std::make_tuple(lo, hi, max_n);
    lo = scale.min();
    hi = scale.max();
    std::vector<iaa::FuzzyNumber> out;
    for (std::size_t i = 0; i < k; ++i) {
      oracle::Bounds b;
      while (b.size() < n) {
        max_n = n - b.size();
        for (const auto& iv : bounds()) b.push_back(iv);
      }
      out.push_back(iaa::construct_fuzzy(to_set("alt" + std::to_string(i), b), scale));
    }
    std::tie(lo, hi, max_n) = saved;
    return out;
  }
};

}  // namespace testing_support
