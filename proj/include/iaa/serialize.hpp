#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "iaa/attributes.hpp"
#include "iaa/fuzzy_number.hpp"
#include "iaa/ranking.hpp"
#include "iaa/similarity.hpp"
#include "iaa/topsis.hpp"

namespace iaa {

/// Four decimals, as in text output.
inline std::string fixed4(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(4) << v;
  auto s = os.str();
  if (s == "-0.0000") s = "0.0000";
  return s;
}

inline nlohmann::json to_json(const FuzzyNumber& fz) {
  nlohmann::json regions = nlohmann::json::array();
  for (const auto& r : fz.regions()) regions.push_back({r.l, r.r, r.h});
  return {{"label", fz.label()}, {"n", fz.n()}, {"regions", regions},
          {"endpoints", fz.endpoints()}};
}

inline nlohmann::json to_json(const AttributeVector& a) {
  return {{"quartiles", a.quartiles},
          {"centroid_x", a.centroid_x},
          {"centroid_y", a.centroid_y},
          {"area", a.area},
          {"height", a.height},
          {"perimeter", a.perimeter},
          {"agreement_ratio", a.agreement_ratio}};
}

inline nlohmann::json to_json(const RankingResult& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json j{{"label", e.label}, {"rank", e.rank}};
    j["score"] = e.score ? nlohmann::json(*e.score) : nlohmann::json(nullptr);
    entries.push_back(std::move(j));
  }
  return {{"method", r.method}, {"entries", entries}, {"ties", r.ties}};
}

inline nlohmann::json to_json(const TopsisResult& r) {
  nlohmann::json alternatives = nlohmann::json::array();
  for (auto idx : r.order) {
    const auto& e = r.entries[idx];
    alternatives.push_back({{"label", e.label},
                            {"d_plus", e.d_plus},
                            {"d_minus", e.d_minus},
                            {"closeness", e.closeness},
                            {"rank", e.rank},
                            {"degenerate", e.degenerate}});
  }
  nlohmann::json ideals = nlohmann::json::array();
  for (const auto& i : r.ideals)
    ideals.push_back({{"criterion", i.criterion},
                      {"pis", i.positive},
                      {"nis", i.negative},
                      {"degenerate", i.degenerate}});
  return {{"method", "topsis-similarity (reconstructed)"},
          {"measure", std::string(to_string(r.measure))},
          {"alternatives", alternatives},
          {"ideals", ideals},
          {"ties", r.ties}};
}

}  // namespace iaa
