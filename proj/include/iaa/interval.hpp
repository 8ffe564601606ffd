#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "iaa/error.hpp"

namespace iaa {

/// Closed crisp interval [left, right]. Point intervals (left == right) are legal.
class Interval {
 public:
  Interval(double left, double right) : left_(left), right_(right) {
    if (!std::isfinite(left) || !std::isfinite(right))
      throw Error(ErrorCode::NonFinite, "interval bounds must be finite");
    if (left > right)
      throw Error(ErrorCode::InvertedBounds,
                  "interval left bound exceeds right bound");
  }

  static Interval point(double v) { return Interval(v, v); }

  double left() const noexcept { return left_; }
  double right() const noexcept { return right_; }
  double width() const noexcept { return right_ - left_; }
  double midpoint() const noexcept { return (left_ + right_) / 2.0; }
  bool is_point() const noexcept { return left_ == right_; }
  bool contains(double x) const noexcept { return left_ <= x && x <= right_; }

  Interval shifted(double delta) const { return Interval(left_ + delta, right_ + delta); }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double left_;
  double right_;
};

/// Measurement scale shared by every interval of a criterion.
class ScaleConfig {
 public:
  ScaleConfig(double min, double max) : min_(min), max_(max) {
    if (!std::isfinite(min) || !std::isfinite(max) || !(min < max))
      throw Error(ErrorCode::InvalidScale, "scale requires finite min < max");
  }

  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  double range() const noexcept { return max_ - min_; }
  bool contains(const Interval& iv) const noexcept {
    return min_ <= iv.left() && iv.right() <= max_;
  }

  friend bool operator==(const ScaleConfig&, const ScaleConfig&) = default;

 private:
  double min_;
  double max_;
};

/// Multiset of intervals from n >= 1 sources (experts, observations).
class IntervalSet {
 public:
  IntervalSet(std::string label, std::vector<Interval> intervals)
      : label_(std::move(label)), intervals_(std::move(intervals)) {
    if (intervals_.empty())
      throw Error(ErrorCode::ZeroSources,
                  "interval set '" + label_ + "' needs at least one source");
  }

  const std::string& label() const noexcept { return label_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_.size(); }

  auto begin() const noexcept { return intervals_.begin(); }
  auto end() const noexcept { return intervals_.end(); }

  /// Number of intervals containing x (closed on both ends).
  std::size_t count_containing(double x) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        intervals_.begin(), intervals_.end(),
        [x](const Interval& iv) { return iv.contains(x); }));
  }

  /// Sorted, deduplicated list of every left and right bound.
  std::vector<double> endpoints() const {
    std::vector<double> xs;
    xs.reserve(2 * intervals_.size());
    for (const auto& iv : intervals_) {
      xs.push_back(iv.left());
      xs.push_back(iv.right());
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  }

  IntervalSet shifted(double delta) const {
    std::vector<Interval> out;
    out.reserve(intervals_.size());
    for (const auto& iv : intervals_) out.push_back(iv.shifted(delta));
    return IntervalSet(label_, std::move(out));
  }

  IntervalSet relabeled(std::string label) const {
    return IntervalSet(std::move(label), intervals_);
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::string label_;
  std::vector<Interval> intervals_;
};

namespace detail {

inline std::string_view trim(std::string_view s) noexcept {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

/// Parses a decimal literal; the whole (trimmed) token must be consumed.
inline bool parse_double(std::string_view text, double& out) noexcept {
  text = trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out, std::chars_format::general);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

/// Shortest representation that reads back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace detail

/// Accepts `L:R`, `[L,R]` or a bare `V` (the point interval [V,V]).
inline Interval parse_interval(std::string_view text) {
  const auto malformed = [&] {
    return Error(ErrorCode::MalformedInterval,
                 "cannot parse interval '" + std::string(text) + "'");
  };
  auto body = detail::trim(text);
  std::string_view lhs;
  std::string_view rhs;
  if (!body.empty() && body.front() == '[') {
    if (body.size() < 2 || body.back() != ']') throw malformed();
    body = body.substr(1, body.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
      throw malformed();
    lhs = body.substr(0, comma);
    rhs = body.substr(comma + 1);
  } else if (const auto colon = body.find(':'); colon != std::string_view::npos) {
    lhs = body.substr(0, colon);
    rhs = body.substr(colon + 1);
  } else {
    lhs = rhs = body;
  }
  double l = 0.0;
  double r = 0.0;
  if (!detail::parse_double(lhs, l) || !detail::parse_double(rhs, r)) throw malformed();
  return Interval(l, r);
}

inline std::string format_interval(const Interval& iv) {
  return detail::format_double(iv.left()) + ":" + detail::format_double(iv.right());
}

enum class IdealKind { Best, Worst };

/// n identical point intervals at the top (best) or bottom (worst) of the scale.
inline IntervalSet ideal_interval_set(const ScaleConfig& scale, std::size_t n,
                                      IdealKind which) {
  if (n == 0) throw Error(ErrorCode::ZeroSources, "ideal set needs n >= 1");
  const double v = which == IdealKind::Best ? scale.max() : scale.min();
  return IntervalSet(which == IdealKind::Best ? "ideal_best" : "ideal_worst",
                     std::vector<Interval>(n, Interval::point(v)));
}

/// Traditional baseline: mean of interval midpoints.
inline double midpoint_mean(const IntervalSet& set) {
  double sum = 0.0;
  for (const auto& iv : set) sum += iv.left() + iv.right();
  return sum / (2.0 * static_cast<double>(set.size()));
}

}  // namespace iaa
