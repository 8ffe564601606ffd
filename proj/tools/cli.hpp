#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iaa/iaa.hpp"

namespace iaa::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIoOrParse = 2,
  kValidation = 3,
  kUndefinedRanking = 4,
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError:
    case ErrorCode::MalformedRow:
    case ErrorCode::MalformedInterval:
      return kIoOrParse;
    case ErrorCode::DivisionByZero:
      return kUndefinedRanking;
    default:
      return kValidation;
  }
}

struct RunConfig {
  std::string input;
  double scale_min = 0.0;
  double scale_max = 0.0;
  std::string format = "text";
  std::string output;
  double epsilon = kDefaultEpsilon;

  std::string criterion;
  // similarity
  std::string measure;
  std::vector<std::string> pair;
  bool matrix = false;
  // rank
  std::string method = "universal";
  std::string ideal = "auto";
  // topsis
  std::vector<double> weights;
  std::vector<std::string> directions;
  std::vector<std::string> excluded;
  std::string tie_break;
};

namespace detail {

inline std::size_t pick_criterion(const MultiCriteriaDataset& data, const std::string& label) {
  if (label.empty()) return 0;
  auto idx = data.criterion_index(label);
  if (!idx) throw Error(ErrorCode::InvalidArgument, "unknown criterion '" + label + "'");
  return *idx;
}

inline std::vector<FuzzyNumber> build_column(const MultiCriteriaDataset& data, std::size_t c) {
  std::vector<FuzzyNumber> out;
  for (const auto& set : data.column(c)) out.push_back(construct_fuzzy(set, data.scale()));
  return out;
}

inline const FuzzyNumber& find_label(const std::vector<FuzzyNumber>& items,
                                     const std::string& label) {
  for (const auto& fz : items)
    if (fz.label() == label) return fz;
  throw Error(ErrorCode::InvalidArgument, "unknown alternative '" + label + "'");
}

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

inline std::size_t label_width(const std::vector<std::string>& labels, std::size_t min = 12) {
  std::size_t w = min;
  for (const auto& l : labels) w = std::max(w, l.size() + 2);
  return w;
}

inline void cmd_build(const RunConfig& cfg, const MultiCriteriaDataset& data, std::ostream& out) {
  for (std::size_t a = 0; a < data.alternatives().size(); ++a)
    for (std::size_t c = 0; c < data.criteria().size(); ++c) {
      const auto fz = construct_fuzzy(data.cell(a, c), data.scale());
      const auto& crit = data.criteria()[c];
      if (cfg.format == "json") {
        auto j = to_json(fz);
        j["criterion"] = crit;
        out << j.dump() << '\n';
      } else if (cfg.format == "csv") {
        if (a == 0 && c == 0) out << "alternative,criterion,l,r,h\n";
        for (const auto& r : fz.regions())
          out << fz.label() << ',' << crit << ',' << iaa::detail::format_double(r.l) << ','
              << iaa::detail::format_double(r.r) << ',' << iaa::detail::format_double(r.h)
              << '\n';
      } else {
        out << fz.label() << " [" << crit << "] n=" << fz.n() << '\n';
        for (const auto& r : fz.regions())
          out << "  [" << fixed4(r.l) << ", " << fixed4(r.r) << "]  " << fixed4(r.h) << '\n';
      }
    }
}

inline void cmd_attributes(const RunConfig& cfg, const MultiCriteriaDataset& data, std::ostream& out) {
  const auto w = label_width(data.alternatives());
  if (cfg.format == "text")
    out << pad("alternative", w) << pad("criterion", 12)
        << "a1      a2      a3      a4      a5      Cx      Cy      area    height  "
           "perim   AR\n";
  if (cfg.format == "csv")
    out << "alternative,criterion,a1,a2,a3,a4,a5,centroid_x,centroid_y,area,height,"
           "perimeter,agreement_ratio\n";
  for (std::size_t a = 0; a < data.alternatives().size(); ++a)
    for (std::size_t c = 0; c < data.criteria().size(); ++c) {
      const auto fz = construct_fuzzy(data.cell(a, c), data.scale());
      const auto attr = compute_attributes(fz);
      const auto& crit = data.criteria()[c];
      const std::vector<double> values{attr.quartiles[0], attr.quartiles[1], attr.quartiles[2],
                                       attr.quartiles[3], attr.quartiles[4], attr.centroid_x,
                                       attr.centroid_y,    attr.area,         attr.height,
                                       attr.perimeter,     attr.agreement_ratio};
      if (cfg.format == "json") {
        auto j = to_json(attr);
        j["label"] = fz.label();
        j["criterion"] = crit;
        out << j.dump() << '\n';
      } else if (cfg.format == "csv") {
        out << fz.label() << ',' << crit;
        for (double v : values) out << ',' << iaa::detail::format_double(v);
        out << '\n';
      } else {
        out << pad(fz.label(), w) << pad(crit, 12);
        for (std::size_t i = 0; i < values.size(); ++i)
          out << (i + 1 < values.size() ? pad(fixed4(values[i]), 8) : fixed4(values[i]));
        out << '\n';
      }
    }
}

inline void cmd_similarity(const RunConfig& cfg, const MultiCriteriaDataset& data, std::ostream& out) {
  const auto measure = parse_measure(cfg.measure.empty() ? "combined" : cfg.measure);
  const auto c = pick_criterion(data, cfg.criterion);
  const auto items = build_column(data, c);
  if (cfg.matrix == !cfg.pair.empty())
    throw Error(ErrorCode::InvalidArgument, "give either two alternative labels or --matrix");

  if (!cfg.matrix) {
    if (cfg.pair.size() != 2)
      throw Error(ErrorCode::InvalidArgument, "similarity needs exactly two alternative labels");
    const auto s = similarity(measure, find_label(items, cfg.pair[0]), find_label(items, cfg.pair[1]));
    if (cfg.format == "json")
      out << nlohmann::json{{"measure", std::string(to_string(measure))},
                            {"criterion", data.criteria()[c]},
                            {"a", cfg.pair[0]},
                            {"b", cfg.pair[1]},
                            {"similarity", s}}
                 .dump()
          << '\n';
    else if (cfg.format == "csv")
      out << "a,b,measure,similarity\n"
          << cfg.pair[0] << ',' << cfg.pair[1] << ',' << to_string(measure) << ','
          << iaa::detail::format_double(s) << '\n';
    else
      out << to_string(measure) << "(" << cfg.pair[0] << ", " << cfg.pair[1]
          << ") = " << fixed4(s) << '\n';
    return;
  }

  std::vector<std::vector<double>> m(items.size(), std::vector<double>(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j)
      m[i][j] = similarity(measure, items[i], items[j]);
  const auto& labels = data.alternatives();
  if (cfg.format == "json") {
    out << nlohmann::json{{"measure", std::string(to_string(measure))},
                          {"criterion", data.criteria()[c]},
                          {"labels", labels},
                          {"matrix", m}}
               .dump()
        << '\n';
  } else if (cfg.format == "csv") {
    out << "label";
    for (const auto& l : labels) out << ',' << l;
    out << '\n';
    for (std::size_t i = 0; i < items.size(); ++i) {
      out << labels[i];
      for (double v : m[i]) out << ',' << iaa::detail::format_double(v);
      out << '\n';
    }
  } else {
    const auto w = label_width(labels);
    out << pad("", w);
    for (const auto& l : labels) out << pad(l, w);
    out << '\n';
    for (std::size_t i = 0; i < items.size(); ++i) {
      out << pad(labels[i], w);
      for (double v : m[i]) out << pad(fixed4(v), w);
      out << '\n';
    }
  }
}

inline std::pair<FuzzyNumber, FuzzyNumber> resolve_ideals(const RunConfig& cfg,
                                                          const MultiCriteriaDataset& data,
                                                          std::size_t c) {
  if (cfg.ideal == "auto") {
    const auto n = data.cell(0, c).size();
    return {construct_fuzzy(ideal_interval_set(data.scale(), n, IdealKind::Best), data.scale()),
            construct_fuzzy(ideal_interval_set(data.scale(), n, IdealKind::Worst), data.scale())};
  }
  const auto ideals = load_dataset(cfg.ideal, data.scale());
  const auto ic = ideals.criterion_index(data.criteria()[c]).value_or(0);
  auto get = [&](const char* label) {
    const auto a = ideals.alternative_index(label);
    if (!a)
      throw Error(ErrorCode::MissingCell,
                  cfg.ideal + ": ideal file needs an alternative named '" + label + "'");
    return construct_fuzzy(ideals.cell(*a, ic), data.scale());
  };
  return {get("best"), get("worst")};
}

inline void cmd_rank(const RunConfig& cfg, const MultiCriteriaDataset& data, std::ostream& out) {
  const auto c = pick_criterion(data, cfg.criterion);
  RankingResult result;
  if (cfg.method == "baseline") {
    result = rank_baseline_mean(data.column(c), cfg.epsilon);
  } else if (cfg.method == "universal") {
    result = rank_universal(build_column(data, c), cfg.epsilon);
  } else if (cfg.method == "ideal-ratio") {
    const auto measure = parse_measure(cfg.measure.empty() ? "combined" : cfg.measure);
    const auto [best, worst] = resolve_ideals(cfg, data, c);
    result = rank_by_ideal_ratio(build_column(data, c), best, worst, measure, cfg.epsilon);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown method '" + cfg.method + "'");
  }

  if (cfg.format == "json") {
    auto j = to_json(result);
    j["criterion"] = data.criteria()[c];
    out << j.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "label,score,rank\n";
    for (const auto& e : result.entries)
      out << e.label << ',' << (e.score ? iaa::detail::format_double(*e.score) : "") << ','
          << e.rank << '\n';
  } else {
    const auto w = label_width(data.alternatives());
    out << "method: " << result.method << "  criterion: " << data.criteria()[c] << '\n';
    out << pad("alternative", w) << pad("score", 10) << "rank\n";
    for (const auto& e : result.entries)
      out << pad(e.label, w) << pad(e.score ? fixed4(*e.score) : "-", 10) << e.rank << '\n';
    for (const auto& group : result.ties) {
      out << "tie:";
      for (const auto& l : group) out << ' ' << l;
      out << '\n';
    }
  }
}

inline void cmd_topsis(const RunConfig& cfg, const MultiCriteriaDataset& full, std::ostream& out) {
  const auto measure = parse_measure(cfg.measure.empty() ? "combined" : cfg.measure);
  const auto data = cfg.excluded.empty() ? full : full.without_criteria(cfg.excluded);
  std::vector<Direction> directions;
  for (const auto& d : cfg.directions) directions.push_back(parse_direction(d));
  const DecisionMatrix matrix(data, cfg.weights, directions);
  TopsisOptions options;
  options.epsilon = cfg.epsilon;
  if (!cfg.tie_break.empty()) options.tie_break_criterion = pick_criterion(data, cfg.tie_break);
  const auto result = topsis_rank(matrix, measure, options);

  if (cfg.format == "json") {
    out << to_json(result).dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "label,d_plus,d_minus,closeness,rank,degenerate\n";
    for (auto idx : result.order) {
      const auto& e = result.entries[idx];
      out << e.label << ',' << iaa::detail::format_double(e.d_plus) << ','
          << iaa::detail::format_double(e.d_minus) << ','
          << iaa::detail::format_double(e.closeness) << ',' << e.rank << ','
          << (e.degenerate ? "true" : "false") << '\n';
    }
  } else {
    const auto w = label_width(data.alternatives());
    out << "TOPSIS (similarity-based reconstruction), measure: " << to_string(measure) << '\n';
    out << pad("alternative", w) << pad("D+", 10) << pad("D-", 10) << pad("CC", 10) << "rank\n";
    for (auto idx : result.order) {
      const auto& e = result.entries[idx];
      out << pad(e.label, w) << pad(fixed4(e.d_plus), 10) << pad(fixed4(e.d_minus), 10)
          << pad(fixed4(e.closeness), 10) << e.rank << (e.degenerate ? "  (degenerate)" : "")
          << '\n';
    }
    const auto cw = label_width(data.criteria());
    out << '\n' << pad("criterion", cw) << pad("PIS", w) << "NIS\n";
    for (const auto& i : result.ideals)
      out << pad(i.criterion, cw) << pad(i.positive, w) << i.negative
          << (i.degenerate ? "  (degenerate)" : "") << '\n';
  }
}

inline void cmd_plotdata(const RunConfig& cfg, const MultiCriteriaDataset& data, std::ostream& out) {
  if (cfg.format != "json") out << "alternative,criterion,piece,x,mu\n";
  for (std::size_t a = 0; a < data.alternatives().size(); ++a)
    for (std::size_t c = 0; c < data.criteria().size(); ++c) {
      const auto fz = construct_fuzzy(data.cell(a, c), data.scale());
      const auto pieces = profile_outline(fz.regions());
      if (cfg.format == "json") {
        nlohmann::json js = nlohmann::json::array();
        for (const auto& piece : pieces) {
          nlohmann::json p = nlohmann::json::array();
          for (const auto& v : piece) p.push_back({v.x, v.mu});
          js.push_back(std::move(p));
        }
        out << nlohmann::json{{"label", fz.label()},
                              {"criterion", data.criteria()[c]},
                              {"pieces", js}}
                   .dump()
            << '\n';
        continue;
      }
      for (std::size_t p = 0; p < pieces.size(); ++p)
        for (const auto& v : pieces[p])
          out << fz.label() << ',' << data.criteria()[c] << ',' << p << ','
              << iaa::detail::format_double(v.x) << ',' << iaa::detail::format_double(v.mu)
              << '\n';
    }
}

}  // namespace detail

/// Runs the command line; never calls exit(). Returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval agreement fuzzy numbers: build, compare and rank"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--input", cfg.input, "Dataset (CSV, or JSON by extension)")->required();
  app.add_option("--scale-min", cfg.scale_min, "Lower bound of the measurement scale")->required();
  app.add_option("--scale-max", cfg.scale_max, "Upper bound of the measurement scale")->required();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", cfg.output, "Write to this file instead of standard output");
  app.add_option("--epsilon", cfg.epsilon, "Relative tie tolerance")
      ->check(CLI::NonNegativeNumber);

  auto* build = app.add_subcommand("build", "Construct the fuzzy number of every cell");
  auto* attrs = app.add_subcommand("attributes", "Geometric attributes of every cell");

  auto* sim = app.add_subcommand("similarity", "Similarity between alternatives");
  sim->add_option("--measure", cfg.measure)->check(CLI::IsMember({"jaccard", "attribute", "combined"}));
  sim->add_option("--criterion", cfg.criterion);
  sim->add_flag("--matrix", cfg.matrix, "Full pairwise matrix");
  sim->add_option("labels", cfg.pair, "Two alternative labels");

  auto* rank = app.add_subcommand("rank", "Rank alternatives of one criterion");
  rank->add_option("--method", cfg.method)
      ->check(CLI::IsMember({"universal", "ideal-ratio", "baseline"}));
  rank->add_option("--measure", cfg.measure)
      ->check(CLI::IsMember({"jaccard", "attribute", "combined"}));
  rank->add_option("--ideal", cfg.ideal, "auto, or a dataset file with 'best' and 'worst'");
  rank->add_option("--criterion", cfg.criterion);

  auto* topsis = app.add_subcommand("topsis", "Multi-criteria TOPSIS ranking");
  topsis->add_option("--measure", cfg.measure)->check(CLI::IsMember({"attribute", "combined"}));
  topsis->add_option("--weights", cfg.weights)->delimiter(',');
  topsis->add_option("--directions", cfg.directions)->delimiter(',');
  topsis->add_option("--exclude-criterion", cfg.excluded);
  topsis->add_option("--tie-break", cfg.tie_break, "Criterion used to break exact CC ties");

  auto* plot = app.add_subcommand("plotdata", "Membership outline vertices for plotting");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const ScaleConfig scale(cfg.scale_min, cfg.scale_max);
    const auto data = load_dataset(cfg.input, scale);
    for (const auto& w : data.warnings()) err << "warning: " << w << '\n';

    std::ostringstream buffer;
    if (build->parsed()) detail::cmd_build(cfg, data, buffer);
    else if (attrs->parsed()) detail::cmd_attributes(cfg, data, buffer);
    else if (sim->parsed()) detail::cmd_similarity(cfg, data, buffer);
    else if (rank->parsed()) detail::cmd_rank(cfg, data, buffer);
    else if (topsis->parsed()) detail::cmd_topsis(cfg, data, buffer);
    else if (plot->parsed()) detail::cmd_plotdata(cfg, data, buffer);

    if (cfg.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!(file << buffer.str()))
        throw Error(ErrorCode::IoError, cfg.output + ": cannot write output");
    }
    return kOk;
  } catch (const UndefinedRatio& e) {
    err << "error: UNDEF: ideal ratio undefined for '" << e.label()
        << "' (similarity to both ideals is 0)\n";
    return kUndefinedRanking;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace iaa::cli
