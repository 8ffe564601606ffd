#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <string>
#include <vector>

#include "iaa/error.hpp"
#include "iaa/interval.hpp"

namespace iaa {

/// One constant-membership region of an MC-list. l == r is a line (spike).
struct Region {
  double l;
  double r;
  double h;

  bool is_line() const noexcept { return l == r; }
  double width() const noexcept { return r - l; }
  bool contains(double x) const noexcept { return l <= x && x <= r; }

  friend bool operator==(const Region&, const Region&) = default;
};

using McList = std::vector<Region>;

/// Type-1 fuzzy number aggregated from an interval set by counting agreement.
///
/// The MC-list is canonical: regions sorted by l with disjoint interiors,
/// no zero-height spans, a line region only where a point's membership
/// exceeds both neighbouring segments, and equal-height neighbours merged
/// whenever the shared point carries the same membership. Membership at x
/// is the largest height among regions containing x.
class FuzzyNumber {
 public:
  const std::string& label() const noexcept { return sources_.label(); }
  std::size_t n() const noexcept { return sources_.size(); }
  const ScaleConfig& scale() const noexcept { return scale_; }
  const McList& regions() const noexcept { return regions_; }
  const std::vector<double>& endpoints() const noexcept { return endpoints_; }
  const IntervalSet& sources() const noexcept { return sources_; }

  /// Membership reconstructed from the MC-list.
  double membership(double x) const noexcept {
    double best = 0.0;
    for (const auto& reg : regions_) {
      if (reg.l > x) break;
      if (x <= reg.r) best = std::max(best, reg.h);
    }
    return best;
  }

  friend bool operator==(const FuzzyNumber&, const FuzzyNumber&) = default;

 private:
  FuzzyNumber(IntervalSet sources, ScaleConfig scale, McList regions)
      : sources_(std::move(sources)),
        scale_(scale),
        regions_(std::move(regions)),
        endpoints_(sources_.endpoints()) {}

  friend FuzzyNumber construct_fuzzy(const IntervalSet&, const ScaleConfig&);

  IntervalSet sources_;
  ScaleConfig scale_;
  McList regions_;
  std::vector<double> endpoints_;
};

/// Fraction of intervals containing x.
inline double membership_at(const IntervalSet& set, double x) noexcept {
  return static_cast<double>(set.count_containing(x)) / static_cast<double>(set.size());
}

namespace detail {

/// Emits the canonical MC-list over sorted breakpoints `xs` given the
/// membership at each breakpoint and on each open gap between neighbours.
template <typename PointFn, typename SegmentFn>
McList emit_canonical(const std::vector<double>& xs, PointFn point, SegmentFn segment) {
  McList out;
  if (xs.empty()) return out;
  std::vector<double> seg(xs.size() - 1);
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) seg[k] = segment(xs[k], xs[k + 1]);

  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double p = point(xs[k]);
    const double left = k > 0 ? seg[k - 1] : 0.0;
    const double right = k + 1 < xs.size() ? seg[k] : 0.0;
    if (p > left && p > right) out.push_back({xs[k], xs[k], p});
    if (k + 1 == xs.size() || right <= 0.0) continue;

    if (!out.empty()) {
      auto& last = out.back();
      if (!last.is_line() && last.r == xs[k] && last.h == right && p == right) {
        last.r = xs[k + 1];
        continue;
      }
    }
    out.push_back({xs[k], xs[k + 1], right});
  }
  return out;
}

}  // namespace detail

/// Canonical form of an arbitrary region list under the max rule.
inline McList canonicalize(const McList& regions) {
  std::vector<double> xs;
  xs.reserve(2 * regions.size());
  for (const auto& reg : regions) {
    xs.push_back(reg.l);
    xs.push_back(reg.r);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  auto max_at = [&regions](double x) {
    double best = 0.0;
    for (const auto& reg : regions)
      if (reg.contains(x)) best = std::max(best, reg.h);
    return best;
  };
  return detail::emit_canonical(
      xs, max_at, [&](double a, double b) { return max_at(a + (b - a) / 2.0); });
}

inline FuzzyNumber construct_fuzzy(const IntervalSet& set, const ScaleConfig& scale) {
  for (const auto& iv : set)
    if (!scale.contains(iv))
      throw Error(ErrorCode::OutOfScale, "interval " + format_interval(iv) + " of '" +
                                             set.label() + "' lies outside the scale");
  auto regions = detail::emit_canonical(
      set.endpoints(), [&set](double x) { return membership_at(set, x); },
      [&set](double a, double b) { return membership_at(set, a + (b - a) / 2.0); });
  return FuzzyNumber(set, scale, std::move(regions));
}

inline void require_same_scale(const FuzzyNumber& a, const FuzzyNumber& b) {
  if (!(a.scale() == b.scale()))
    throw Error(ErrorCode::ScaleMismatch,
                "fuzzy numbers '" + a.label() + "' and '" + b.label() + "' use different scales");
}

/// Sorted union of both numbers' source endpoints.
inline std::vector<double> evaluation_points(const FuzzyNumber& a, const FuzzyNumber& b) {
  require_same_scale(a, b);
  std::vector<double> out;
  out.reserve(a.endpoints().size() + b.endpoints().size());
  std::set_union(a.endpoints().begin(), a.endpoints().end(), b.endpoints().begin(),
                 b.endpoints().end(), std::back_inserter(out));
  return out;
}

}  // namespace iaa
