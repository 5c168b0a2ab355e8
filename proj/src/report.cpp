// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "nlohmann/json.hpp"

#include "mcq/dataset.hpp"
#include "mcq/util/strings.hpp"

namespace mcq {

using nlohmann::json;

namespace {

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << content;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  write_text(tmp, content);
  std::filesystem::rename(tmp, path);
}

std::string csv_header(const char* table, const RunInfo& info) {
  std::ostringstream out;
  out << "# mcqeval " << table << " schema=1\n";
  out << "# config_hash=" << info.config_hash << " dataset_hash=" << info.dataset_hash << "\n";
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted += "\"";
  return quoted;
}

}  // namespace

std::string render_accuracy_csv(const std::vector<ConditionAccuracy>& rows, const RunInfo& info) {
  std::ostringstream out;
  out << csv_header("accuracy-by-condition", info);
  out << "condition,method,score_kind,n_items,n_correct,accuracy,chance\n";
  for (const auto& r : rows) {
    out << csv_field(r.condition) << ',' << csv_field(r.method) << ',' << csv_field(r.score_kind)
        << ',' << r.n_items << ',' << r.n_correct << ',' << fmt_double(r.accuracy) << ','
        << fmt_double(r.chance) << '\n';
  }
  return out.str();
}

std::string render_fits_csv(const std::vector<FitResult>& fits, const RunInfo& info) {
  std::ostringstream out;
  out << csv_header("fits", info);
  out << "condition,method,score_kind,target_rate,smoothed_p,human_target_count,human_total,"
         "log_likelihood,delta_ll\n";
  for (const auto& f : fits) {
    out << csv_field(f.condition) << ',' << csv_field(f.method) << ',' << csv_field(f.score_kind)
        << ',' << fmt_double(f.target_rate) << ',' << fmt_double(f.smoothed_p) << ','
        << f.human_target_count << ',' << f.human_total << ','
        << fmt_double(f.log_likelihood) << ',' << fmt_double(f.delta_ll) << '\n';
  }
  return out.str();
}

std::string render_robustness_json(const RobustnessReport& report, const RunInfo& info) {
  auto matrix_json = [](const AgreementMatrix& m) {
    return json{{"columns", m.columns},
                {"raw_agreement", m.raw},
                {"kappa", m.kappa},
                {"flip_count", m.flip_count},
                {"n_items", m.n_items}};
  };
  json per_condition = json::object();
  for (const auto& [condition, m] : report.per_condition)
    per_condition[condition] = matrix_json(m);
  json per_item = json::object();
  for (const auto& [item_id, choices] : report.per_item) {
    json row = json::object();
    for (const auto& [column, choice] : choices)
      row[column] = choice ? json(*choice) : json(nullptr);
    per_item[item_id] = std::move(row);
  }
  json j{{"schema", 1},
         {"config_hash", info.config_hash},
         {"dataset_hash", info.dataset_hash},
         {"overall", matrix_json(report.overall)},
         {"per_condition", std::move(per_condition)},
         {"per_item", std::move(per_item)}};
  return j.dump(2) + "\n";
}

std::string render_accuracy_svg(const std::vector<ConditionAccuracy>& rows,
                                const std::vector<Item>& items) {
  // One panel per condition; bars are the method-averaged accuracies.
  const double panel_w = 560.0, bar_area_h = 100.0, panel_gap = 48.0;
  const double left = 40.0, top0 = 24.0;

  std::vector<std::string> conditions = condition_names(items);
  std::sort(conditions.begin(), conditions.end());

  std::map<std::string, std::vector<const ConditionAccuracy*>> averaged;
  std::map<std::string, double> chance;
  for (const auto& r : rows) {
    if (r.score_kind == "averaged") averaged[r.condition].push_back(&r);
    chance[r.condition] = r.chance;
  }

  std::ostringstream svg;
  const double height = top0 + conditions.size() * (bar_area_h + panel_gap);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_double(left + panel_w + 20)
      << "\" height=\"" << fmt_double(height) << "\">\n";
  double top = top0;
  for (const auto& condition : conditions) {
    svg << "<text x=\"" << fmt_double(left) << "\" y=\"" << fmt_double(top - 8)
        << "\" font-size=\"12\">" << xml_escape(condition) << "</text>\n";
    // axis
    svg << "<line x1=\"" << fmt_double(left) << "\" y1=\"" << fmt_double(top + bar_area_h)
        << "\" x2=\"" << fmt_double(left + panel_w) << "\" y2=\"" << fmt_double(top + bar_area_h)
        << "\" stroke=\"black\"/>\n";
    auto it = averaged.find(condition);
    if (it != averaged.end()) {
      auto bars = it->second;
      std::sort(bars.begin(), bars.end(), [](const auto* a, const auto* b) {
        return a->method < b->method;
      });
      const double slot = panel_w / static_cast<double>(bars.size());
      const double bar_w = slot * 0.6;
      for (size_t i = 0; i < bars.size(); ++i) {
        const double h = bars[i]->accuracy * bar_area_h;
        const double x = left + slot * static_cast<double>(i) + (slot - bar_w) / 2.0;
        svg << "<rect class=\"bar\" data-method=\"" << xml_escape(bars[i]->method)
            << "\" data-accuracy=\"" << fmt_double(bars[i]->accuracy) << "\" x=\""
            << fmt_double(x) << "\" y=\"" << fmt_double(top + bar_area_h - h) << "\" width=\""
            << fmt_double(bar_w) << "\" height=\"" << fmt_double(h)
            << "\" fill=\"#4878a8\"/>\n";
        svg << "<text x=\"" << fmt_double(x) << "\" y=\"" << fmt_double(top + bar_area_h + 12)
            << "\" font-size=\"9\">" << xml_escape(bars[i]->method) << "</text>\n";
      }
    }
    auto ch = chance.find(condition);
    if (ch != chance.end()) {
      const double y = top + (1.0 - ch->second) * bar_area_h;
      svg << "<line class=\"chance\" data-condition=\"" << xml_escape(condition)
          << "\" data-chance=\"" << fmt_double(ch->second) << "\" x1=\"" << fmt_double(left)
          << "\" y1=\"" << fmt_double(y) << "\" x2=\"" << fmt_double(left + panel_w)
          << "\" y2=\"" << fmt_double(y) << "\" stroke=\"#222\" stroke-dasharray=\"4 3\"/>\n";
    }
    top += bar_area_h + panel_gap;
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_results_jsonl(const std::filesystem::path& path, const ResultStore& store) {
  std::ostringstream out;
  for (const auto& u : store.units) {
    json rec{{"unit", {{"item_id", u.unit.item_id},
                       {"method", u.unit.method()},
                       {"score_kind", u.unit.kind.name()}}},
             {"ok", u.ok}};
    if (u.ok) {
      rec["result"] = method_result_to_json(u.result);
    } else {
      rec["result"] = nullptr;
      rec["error"] = u.error;
    }
    out << rec.dump() << "\n";
  }
  write_text_atomic(path, out.str());
}

ResultStore read_results_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open results: " + path.string());
  ResultStore store;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    UnitResult u;
    u.unit.item_id = rec.at("unit").at("item_id").get<std::string>();
    u.unit.kind = ScoreKind::from_name(rec.at("unit").at("score_kind").get<std::string>());
    u.ok = rec.at("ok").get<bool>();
    if (u.ok) u.result = method_result_from_json(rec.at("result"));
    else u.error = rec.value("error", "");
    if (!u.ok) ++store.n_failed;
    store.units.push_back(std::move(u));
  }
  return store;
}

void write_manifest(const std::filesystem::path& outdir, const RunInfo& info) {
  json j{{"schema", 1},
         {"software", std::string("mcqeval")},
         {"config_hash", info.config_hash},
         {"dataset_hash", info.dataset_hash},
         {"dataset_path", info.dataset_path},
         {"backend", {{"id", info.backend_id}, {"version", info.backend_version}}},
         {"seed", info.seed},
         {"cache", {{"hits", info.cache_hits}, {"misses", info.cache_misses}}},
         {"n_units", info.n_units},
         {"n_failed", info.n_failed},
         {"started_at", info.started_at},
         {"finished_at", info.finished_at}};
  write_text_atomic(outdir / "manifest.json", j.dump(2) + "\n");
}

RunInfo read_manifest(const std::filesystem::path& outdir) {
  std::ifstream in(outdir / "manifest.json");
  if (!in) throw ConfigError("cannot open manifest: " + (outdir / "manifest.json").string());
  json j = json::parse(in);
  RunInfo info;
  info.config_hash = j.at("config_hash").get<std::string>();
  info.dataset_hash = j.at("dataset_hash").get<std::string>();
  info.dataset_path = j.at("dataset_path").get<std::string>();
  info.backend_id = j.at("backend").at("id").get<std::string>();
  info.backend_version = j.at("backend").at("version").get<std::string>();
  info.seed = j.at("seed").get<uint64_t>();
  info.cache_hits = j.at("cache").at("hits").get<int64_t>();
  info.cache_misses = j.at("cache").at("misses").get<int64_t>();
  info.n_units = j.at("n_units").get<int64_t>();
  info.n_failed = j.at("n_failed").get<int64_t>();
  info.started_at = j.at("started_at").get<std::string>();
  info.finished_at = j.at("finished_at").get<std::string>();
  return info;
}

namespace {

// Per-condition fits with deltas, then per-(method, score) totals as
// condition "ALL" rows. The log-likelihood of a triple sums its
// condition-level fits.
std::vector<FitResult> assemble_fit_rows(const std::vector<MethodResult>& ok_results,
                                         const std::vector<Item>& items) {
  std::vector<FitResult> fits = fit_by_condition(ok_results, items);
  if (fits.empty()) return fits;
  fits = delta_ll(fits);

  struct Total {
    double ll = 0.0;
    double rate_sum = 0.0;
    int64_t k = 0, n = 0, rows = 0;
  };
  std::map<std::pair<std::string, std::string>, Total> totals;
  for (const auto& f : fits) {
    Total& t = totals[{f.method, f.score_kind}];
    t.ll += f.log_likelihood;
    t.rate_sum += f.target_rate;
    t.k += f.human_target_count;
    t.n += f.human_total;
    ++t.rows;
  }
  double min_total = 0.0;
  bool first = true;
  for (const auto& [key, t] : totals) {
    if (first || t.ll < min_total) min_total = t.ll;
    first = false;
  }
  for (const auto& [key, t] : totals) {
    FitResult row;
    row.condition = "ALL";
    row.method = key.first;
    row.score_kind = key.second;
    row.target_rate = t.rate_sum / static_cast<double>(t.rows);
    row.smoothed_p = row.target_rate;
    row.human_target_count = t.k;
    row.human_total = t.n;
    row.log_likelihood = t.ll;
    row.delta_ll = t.ll - min_total;
    fits.push_back(std::move(row));
  }
  std::sort(fits.begin(), fits.end(), [](const FitResult& a, const FitResult& b) {
    return std::tie(a.condition, a.method, a.score_kind) <
           std::tie(b.condition, b.method, b.score_kind);
  });
  return fits;
}

}  // namespace

void write_reports(const std::filesystem::path& outdir, const ResultStore& store,
                   const std::vector<Item>& items, const RunInfo& info, bool emit_svg) {
  std::filesystem::create_directories(outdir);
  write_results_jsonl(outdir / "results.jsonl", store);

  const std::vector<MethodResult> ok = store.ok_results();
  std::vector<ConditionAccuracy> accuracy;
  std::vector<FitResult> fits;
  RobustnessReport rob;
  if (!ok.empty()) {
    accuracy = accuracy_by_condition(ok, items);
    fits = assemble_fit_rows(ok, items);
    rob = robustness(ok, items);
  }
  write_text_atomic(outdir / "accuracy_by_condition.csv", render_accuracy_csv(accuracy, info));
  write_text_atomic(outdir / "fits.csv", render_fits_csv(fits, info));
  write_text_atomic(outdir / "robustness.json", render_robustness_json(rob, info));
  if (emit_svg)
    write_text_atomic(outdir / "accuracy.svg", render_accuracy_svg(accuracy, items));
  write_manifest(outdir, info);
}

}  // namespace mcq
