#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "iaa/error.hpp"
#include "iaa/fuzzy_number.hpp"

namespace iaa {

/// Below this, areas and widths are treated as zero.
inline constexpr double kDegenerateTolerance = 1e-12;

struct Centroid {
  double x;
  double y;
};

/// Geometric attributes of one fuzzy number.
struct AttributeVector {
  std::array<double, 5> quartiles;
  double centroid_x;
  double centroid_y;
  double area;
  double height;
  double perimeter;
  double agreement_ratio;
};

/// Per-feature differences between two attribute vectors, each in [0, 1].
/// Order: quartile, centroid, area, height, perimeter, agreement ratio.
using FeatureVector = std::array<double, 6>;

struct Vertex {
  double x;
  double mu;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Closed outline of the membership profile, one polyline per connected
/// piece of support. Each piece starts and ends on the baseline; jumps are
/// two vertices at the same x and a spike is an up-and-down triplet.
inline std::vector<std::vector<Vertex>> profile_outline(const McList& regions) {
  std::vector<double> xs;
  for (const auto& reg : regions) {
    xs.push_back(reg.l);
    xs.push_back(reg.r);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto point = [&regions](double x) {
    double best = 0.0;
    for (const auto& reg : regions)
      if (reg.contains(x)) best = std::max(best, reg.h);
    return best;
  };
  auto segment = [&regions](double a, double b) {
    double best = 0.0;
    for (const auto& reg : regions)
      if (!reg.is_line() && reg.l <= a && b <= reg.r) best = std::max(best, reg.h);
    return best;
  };

  std::vector<std::vector<Vertex>> pieces;
  std::vector<Vertex> cur;
  auto push = [&cur](Vertex v) {
    if (cur.empty() || !(cur.back() == v)) cur.push_back(v);
  };
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double left = k > 0 ? segment(xs[k - 1], xs[k]) : 0.0;
    const double right = k + 1 < xs.size() ? segment(xs[k], xs[k + 1]) : 0.0;
    const double p = point(xs[k]);
    if (p <= 0.0) continue;
    push({xs[k], left});
    push({xs[k], p});
    push({xs[k], right});
    if (right <= 0.0) {
      pieces.push_back(std::move(cur));
      cur.clear();
    }
  }
  return pieces;
}

/// Height-weighted average of region midpoints; mean half-height over
/// non-zero regions.
inline Centroid centroid(const McList& regions) {
  double weighted = 0.0;
  double heights = 0.0;
  double half_heights = 0.0;
  std::size_t nonzero = 0;
  for (const auto& reg : regions) {
    weighted += reg.h * reg.l + reg.h * reg.r;
    heights += 2.0 * reg.h;
    half_heights += reg.h / 2.0;
    if (reg.h > 0.0) ++nonzero;
  }
  if (nonzero == 0 || heights <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "centroid of an empty fuzzy number");
  return {weighted / heights, half_heights / static_cast<double>(nonzero)};
}

inline double area(const McList& regions) {
  double sum = 0.0;
  for (const auto& reg : regions) sum += reg.h * reg.width();
  return sum;
}

inline double height(const McList& regions) {
  double best = 0.0;
  for (const auto& reg : regions) best = std::max(best, reg.h);
  return best;
}

/// Outline length including the baseline under each piece of support.
inline double perimeter(const McList& regions) {
  double total = 0.0;
  for (const auto& piece : profile_outline(regions)) {
    for (std::size_t i = 1; i < piece.size(); ++i)
      total += std::abs(piece[i].x - piece[i - 1].x) + std::abs(piece[i].mu - piece[i - 1].mu);
    total += piece.back().x - piece.front().x;
  }
  return total;
}

inline double support_min(const McList& regions) { return regions.front().l; }

inline double support_max(const McList& regions) {
  double hi = regions.front().r;
  for (const auto& reg : regions) hi = std::max(hi, reg.r);
  return hi;
}

/// Positions where the cumulative area fraction reaches 0, 1/4, 1/2, 3/4, 1.
/// Pure-spike numbers fall back to the height-weighted distribution of
/// spike positions.
inline std::array<double, 5> quartile_points(const McList& regions) {
  std::array<double, 5> q{};
  q[0] = support_min(regions);
  q[4] = support_max(regions);
  const double total = area(regions);
  constexpr std::array<double, 3> fractions{0.25, 0.5, 0.75};

  if (total > kDegenerateTolerance) {
    for (std::size_t k = 0; k < fractions.size(); ++k) {
      const double target = fractions[k] * total;
      double cumulative = 0.0;
      double at = q[4];
      for (const auto& reg : regions) {
        if (reg.is_line()) continue;
        const double mass = reg.h * reg.width();
        // Leftmost position when the target falls on a gap in the support.
        if (cumulative + mass >= target - kDegenerateTolerance * total) {
          at = std::clamp(reg.l + (target - cumulative) / reg.h, reg.l, reg.r);
          break;
        }
        cumulative += mass;
      }
      q[k + 1] = at;
    }
    return q;
  }

  double weight = 0.0;
  for (const auto& reg : regions) weight += reg.h;
  for (std::size_t k = 0; k < fractions.size(); ++k) {
    const double target = fractions[k] * weight;
    double cumulative = 0.0;
    double at = q[4];
    for (const auto& reg : regions) {
      cumulative += reg.h;
      if (cumulative >= target) {
        at = reg.l;
        break;
      }
    }
    q[k + 1] = at;
  }
  return q;
}

/// Mean membership over the positive-width support; zero for pure spikes.
inline double agreement_ratio(const McList& regions) {
  double support = 0.0;
  for (const auto& reg : regions) support += reg.width();
  if (support <= kDegenerateTolerance) return 0.0;
  return area(regions) / support;
}

inline AttributeVector compute_attributes(const McList& regions) {
  if (regions.empty())
    throw Error(ErrorCode::InvalidArgument, "attributes of an empty fuzzy number");
  const auto c = centroid(regions);
  return {quartile_points(regions), c.x, c.y, area(regions), height(regions),
          perimeter(regions), agreement_ratio(regions)};
}

inline Centroid centroid(const FuzzyNumber& fz) { return centroid(fz.regions()); }
inline double area(const FuzzyNumber& fz) { return area(fz.regions()); }
inline double height(const FuzzyNumber& fz) { return height(fz.regions()); }
inline double perimeter(const FuzzyNumber& fz) { return perimeter(fz.regions()); }
inline double support_min(const FuzzyNumber& fz) { return support_min(fz.regions()); }
inline double support_max(const FuzzyNumber& fz) { return support_max(fz.regions()); }
inline std::array<double, 5> quartile_points(const FuzzyNumber& fz) {
  return quartile_points(fz.regions());
}
inline double agreement_ratio(const FuzzyNumber& fz) { return agreement_ratio(fz.regions()); }
inline AttributeVector compute_attributes(const FuzzyNumber& fz) {
  return compute_attributes(fz.regions());
}

namespace detail {

inline double relative_difference(double a, double b) {
  const double m = std::max(a, b);
  return m > 0.0 ? std::abs(a - b) / m : 0.0;
}

}  // namespace detail

inline FeatureVector feature_vector(const AttributeVector& a, const AttributeVector& b,
                                    const ScaleConfig& scale) {
  const double range = scale.range();
  double quartile_spread = 0.0;
  for (std::size_t i = 0; i < 5; ++i) quartile_spread += std::abs(a.quartiles[i] - b.quartiles[i]);
  const double dx = a.centroid_x - b.centroid_x;
  const double dy = a.centroid_y - b.centroid_y;
  return {
      quartile_spread / (5.0 * range),
      std::sqrt(dx * dx + dy * dy) / std::sqrt(range * range + 0.25),
      detail::relative_difference(a.area, b.area),
      std::abs(a.height - b.height),
      detail::relative_difference(a.perimeter, b.perimeter),
      std::abs(a.agreement_ratio - b.agreement_ratio),
  };
}

inline FeatureVector feature_vector(const FuzzyNumber& a, const FuzzyNumber& b,
                                    const ScaleConfig& scale) {
  require_same_scale(a, b);
  if (!(a.scale() == scale))
    throw Error(ErrorCode::ScaleMismatch, "feature scale differs from the numbers' scale");
  return feature_vector(compute_attributes(a), compute_attributes(b), scale);
}

}  // namespace iaa
