#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "iaa/error.hpp"
#include "iaa/interval.hpp"

namespace iaa {

/// Alternatives x criteria grid of interval sets on one scale.
///
/// Alternatives and criteria keep first-appearance order from the input;
/// the intervals of each cell are ordered by source label.
class MultiCriteriaDataset {
 public:
  MultiCriteriaDataset(std::vector<std::string> alternatives,
                       std::vector<std::string> criteria,
                       std::vector<std::vector<IntervalSet>> cells, ScaleConfig scale,
                       std::vector<std::string> warnings = {})
      : alternatives_(std::move(alternatives)),
        criteria_(std::move(criteria)),
        cells_(std::move(cells)),
        scale_(scale),
        warnings_(std::move(warnings)) {
    if (alternatives_.empty() || criteria_.empty())
      throw Error(ErrorCode::EmptyDataset, "dataset has no alternatives or criteria");
    if (cells_.size() != alternatives_.size())
      throw Error(ErrorCode::MissingCell, "cell grid does not match alternatives");
    for (const auto& row : cells_) {
      if (row.size() != criteria_.size())
        throw Error(ErrorCode::MissingCell, "cell grid does not match criteria");
      for (const auto& set : row)
        for (const auto& iv : set)
          if (!scale_.contains(iv))
            throw Error(ErrorCode::OutOfScale,
                        "interval " + format_interval(iv) + " of '" + set.label() +
                            "' lies outside the scale");
    }
  }

  const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  const std::vector<std::string>& criteria() const noexcept { return criteria_; }
  const ScaleConfig& scale() const noexcept { return scale_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  const IntervalSet& cell(std::size_t alternative, std::size_t criterion) const {
    return cells_.at(alternative).at(criterion);
  }

  std::optional<std::size_t> alternative_index(std::string_view label) const {
    return index_of(alternatives_, label);
  }
  std::optional<std::size_t> criterion_index(std::string_view label) const {
    return index_of(criteria_, label);
  }

  /// Interval sets of one criterion, in alternative order.
  std::vector<IntervalSet> column(std::size_t criterion) const {
    std::vector<IntervalSet> out;
    out.reserve(cells_.size());
    for (const auto& row : cells_) out.push_back(row.at(criterion));
    return out;
  }

  /// Copy without the named criteria. Unknown labels are an error.
  MultiCriteriaDataset without_criteria(const std::vector<std::string>& excluded) const {
    for (const auto& label : excluded)
      if (!criterion_index(label))
        throw Error(ErrorCode::InvalidArgument, "unknown criterion '" + label + "'");
    std::vector<std::size_t> keep;
    std::vector<std::string> criteria;
    for (std::size_t j = 0; j < criteria_.size(); ++j)
      if (std::find(excluded.begin(), excluded.end(), criteria_[j]) == excluded.end()) {
        keep.push_back(j);
        criteria.push_back(criteria_[j]);
      }
    if (criteria.empty())
      throw Error(ErrorCode::EmptyDataset, "every criterion was excluded");
    std::vector<std::vector<IntervalSet>> cells;
    for (const auto& row : cells_) {
      std::vector<IntervalSet> r;
      for (auto j : keep) r.push_back(row[j]);
      cells.push_back(std::move(r));
    }
    return MultiCriteriaDataset(alternatives_, std::move(criteria), std::move(cells),
                                scale_, warnings_);
  }

  friend bool operator==(const MultiCriteriaDataset&, const MultiCriteriaDataset&) = default;

 private:
  static std::optional<std::size_t> index_of(const std::vector<std::string>& v,
                                             std::string_view label) {
    auto it = std::find(v.begin(), v.end(), label);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  }

  std::vector<std::string> alternatives_;
  std::vector<std::string> criteria_;
  std::vector<std::vector<IntervalSet>> cells_;
  ScaleConfig scale_;
  std::vector<std::string> warnings_;
};

namespace detail {

struct RawRow {
  std::string alternative;
  std::string criterion;
  std::string source;
  double left;
  double right;
  std::string where;  // "file:line" for messages
};

/// Splits one CSV record; double quotes may wrap fields and "" escapes a quote.
inline std::optional<std::vector<std::string>> split_csv(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      if (!std::string(trim(cur)).empty()) return std::nullopt;
      cur.clear();
      quoted = was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? cur : std::string(trim(cur)));
      cur.clear();
      was_quoted = false;
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) return std::nullopt;
  fields.push_back(was_quoted ? cur : std::string(trim(cur)));
  return fields;
}

inline MultiCriteriaDataset assemble(const std::vector<RawRow>& rows, const ScaleConfig& scale,
                                     const std::string& name) {
  if (rows.empty()) throw Error(ErrorCode::EmptyDataset, name + ": dataset has no rows");

  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  auto intern = [](std::vector<std::string>& v, const std::string& s) {
    auto it = std::find(v.begin(), v.end(), s);
    if (it != v.end()) return static_cast<std::size_t>(it - v.begin());
    v.push_back(s);
    return v.size() - 1;
  };

  struct Entry {
    std::string source;
    Interval interval;
  };
  std::vector<std::vector<std::vector<Entry>>> grid;
  for (const auto& row : rows) {
    if (row.left > row.right)
      throw Error(ErrorCode::InvertedBounds, row.where + ": left " +
                                                 format_double(row.left) + " exceeds right " +
                                                 format_double(row.right));
    Interval iv(row.left, row.right);
    if (!scale.contains(iv))
      throw Error(ErrorCode::OutOfScale,
                  row.where + ": interval " + format_interval(iv) + " outside scale [" +
                      format_double(scale.min()) + "," + format_double(scale.max()) + "]");
    const auto a = intern(alternatives, row.alternative);
    const auto c = intern(criteria, row.criterion);
    if (grid.size() < alternatives.size()) grid.resize(alternatives.size());
    for (auto& r : grid)
      if (r.size() < criteria.size()) r.resize(criteria.size());
    grid[a][c].push_back({row.source, iv});
  }

  std::vector<std::vector<IntervalSet>> cells;
  std::vector<std::string> warnings;
  for (std::size_t a = 0; a < alternatives.size(); ++a) {
    std::vector<IntervalSet> row;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
      auto& entries = grid[a][c];
      if (entries.empty())
        throw Error(ErrorCode::MissingCell, name + ": no intervals for alternative '" +
                                                alternatives[a] + "', criterion '" +
                                                criteria[c] + "'");
      std::stable_sort(entries.begin(), entries.end(),
                       [](const Entry& x, const Entry& y) { return x.source < y.source; });
      std::vector<Interval> ivs;
      ivs.reserve(entries.size());
      for (const auto& e : entries) ivs.push_back(e.interval);
      row.emplace_back(alternatives[a], std::move(ivs));
    }
    const auto n0 = row.front().size();
    if (std::any_of(row.begin(), row.end(),
                    [n0](const IntervalSet& s) { return s.size() != n0; }))
      warnings.push_back("RaggedCell: alternative '" + alternatives[a] +
                         "' has differing source counts across criteria");
    cells.push_back(std::move(row));
  }
  return MultiCriteriaDataset(std::move(alternatives), std::move(criteria), std::move(cells),
                              scale, std::move(warnings));
}

}  // namespace detail

/// Long-format CSV: header `alternative,criterion,source,left,right`.
inline MultiCriteriaDataset parse_dataset_csv(std::istream& in, const ScaleConfig& scale,
                                              const std::string& name = "<csv>") {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::vector<detail::RawRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (detail::trim(line).empty()) continue;
    const std::string where = name + ":" + std::to_string(lineno);
    auto fields = detail::split_csv(line);
    if (!fields) throw Error(ErrorCode::MalformedRow, where + ": unbalanced quotes");
    if (!have_header) {
      const std::vector<std::string> expected{"alternative", "criterion", "source", "left",
                                              "right"};
      if (*fields != expected)
        throw Error(ErrorCode::MalformedRow,
                    where + ": expected header alternative,criterion,source,left,right");
      have_header = true;
      continue;
    }
    if (fields->size() != 5)
      throw Error(ErrorCode::MalformedRow, where + ": expected 5 fields, got " +
                                               std::to_string(fields->size()));
    detail::RawRow row{(*fields)[0], (*fields)[1], (*fields)[2], 0.0, 0.0, where};
    if (row.alternative.empty() || row.criterion.empty())
      throw Error(ErrorCode::MalformedRow, where + ": empty alternative or criterion");
    if (!detail::parse_double((*fields)[3], row.left) ||
        !detail::parse_double((*fields)[4], row.right))
      throw Error(ErrorCode::MalformedRow, where + ": left/right are not decimal numbers");
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw Error(ErrorCode::IoError, name + ": read failure");
  return detail::assemble(rows, scale, name);
}

/// JSON mirror of the CSV: an array of row objects with the same field names.
inline MultiCriteriaDataset parse_dataset_json(std::string_view text, const ScaleConfig& scale,
                                               const std::string& name = "<json>") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedRow, name + ": invalid JSON: " + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::MalformedRow, name + ": expected an array of rows");
  std::vector<detail::RawRow> rows;
  std::size_t index = 0;
  for (const auto& obj : doc) {
    const std::string where = name + ": row " + std::to_string(++index);
    if (!obj.is_object()) throw Error(ErrorCode::MalformedRow, where + ": not an object");
    auto text_field = [&](const char* key) -> std::string {
      if (!obj.contains(key)) throw Error(ErrorCode::MalformedRow, where + ": missing " + key);
      const auto& v = obj.at(key);
      if (v.is_string()) return v.get<std::string>();
      if (v.is_number()) return v.dump();
      throw Error(ErrorCode::MalformedRow, where + ": bad " + key);
    };
    auto number_field = [&](const char* key) -> double {
      if (!obj.contains(key)) throw Error(ErrorCode::MalformedRow, where + ": missing " + key);
      const auto& v = obj.at(key);
      double out = 0.0;
      if (v.is_number()) return v.get<double>();
      if (v.is_string() && detail::parse_double(v.get<std::string>(), out)) return out;
      throw Error(ErrorCode::MalformedRow, where + ": " + key + " is not a decimal number");
    };
    detail::RawRow row{text_field("alternative"), text_field("criterion"), text_field("source"),
                       number_field("left"), number_field("right"), where};
    if (row.alternative.empty() || row.criterion.empty())
      throw Error(ErrorCode::MalformedRow, where + ": empty alternative or criterion");
    rows.push_back(std::move(row));
  }
  return detail::assemble(rows, scale, name);
}

/// Loads a dataset; `.json` files use the JSON mirror, anything else is CSV.
inline MultiCriteriaDataset load_dataset(const std::filesystem::path& path,
                                         const ScaleConfig& scale) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, path.string() + ": cannot open file");
  if (path.extension() == ".json") {
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::IoError, path.string() + ": read failure");
    return parse_dataset_json(buf.str(), scale, path.string());
  }
  return parse_dataset_csv(in, scale, path.string());
}

}  // namespace iaa
