// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "mcq/dataset.hpp"
#include "mcq/util/errors.hpp"

namespace mcq {

namespace {

std::map<std::string, const Item*> index_items(const std::vector<Item>& items) {
  std::map<std::string, const Item*> out;
  for (const auto& it : items) out[it.id] = &it;
  return out;
}

const Item* find_item(const std::map<std::string, const Item*>& index, const std::string& id) {
  auto it = index.find(id);
  if (it == index.end())
    throw ValidationError("result references unknown item id '" + id + "'");
  return it->second;
}

}  // namespace

std::vector<ConditionAccuracy> accuracy_by_condition(const std::vector<MethodResult>& results,
                                                     const std::vector<Item>& items) {
  auto index = index_items(items);
  std::map<std::string, double> chance_by_condition;
  for (const auto& condition : condition_names(items))
    chance_by_condition[condition] = chance_accuracy(items_of_condition(items, condition)).value();

  struct Cell {
    int64_t n = 0;
    int64_t correct = 0;
  };
  // (condition, method, score_kind) -> tally
  std::map<std::tuple<std::string, std::string, std::string>, Cell> cells;
  for (const auto& r : results) {
    const Item* item = find_item(index, r.item_id);
    const std::string method = method_name(method_of(r.score_kind.kind));
    Cell& cell = cells[{item->condition, method, r.score_kind.name()}];
    ++cell.n;
    if (r.chosen_index && *r.chosen_index == item->target_index) ++cell.correct;
  }

  std::vector<ConditionAccuracy> out;
  // method-level averages over score kinds, per (condition, method)
  std::map<std::pair<std::string, std::string>, std::vector<double>> method_accs;
  for (const auto& [key, cell] : cells) {
    ConditionAccuracy row;
    row.condition = std::get<0>(key);
    row.method = std::get<1>(key);
    row.score_kind = std::get<2>(key);
    row.n_items = cell.n;
    row.n_correct = cell.correct;
    row.accuracy = cell.n ? static_cast<double>(cell.correct) / static_cast<double>(cell.n) : 0.0;
    row.chance = chance_by_condition.at(row.condition);
    method_accs[{row.condition, row.method}].push_back(row.accuracy);
    out.push_back(std::move(row));
  }
  for (const auto& [key, accs] : method_accs) {
    ConditionAccuracy row;
    row.condition = key.first;
    row.method = key.second;
    row.score_kind = "averaged";
    row.n_items = 0;
    row.n_correct = 0;
    double sum = 0.0;
    for (double a : accs) sum += a;
    row.accuracy = sum / static_cast<double>(accs.size());
    row.chance = chance_by_condition.at(row.condition);
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end(), [](const ConditionAccuracy& a, const ConditionAccuracy& b) {
    return std::tie(a.condition, a.method, a.score_kind) <
           std::tie(b.condition, b.method, b.score_kind);
  });
  return out;
}

double binomial_log_likelihood(int64_t k, int64_t n, double p_raw, double eps) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("binomial_log_likelihood: need 0 <= k <= n");
  if (!(p_raw >= 0.0 && p_raw <= 1.0))
    throw std::invalid_argument("binomial_log_likelihood: p_raw outside [0, 1]");
  if (n == 0) return 0.0;  // empty product
  double p = p_raw;
  if (eps > 0.0) p = std::clamp(p, eps, 1.0 - eps);
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double log_choose = std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) -
                            std::lgamma(nd - kd + 1.0);
  return log_choose + kd * std::log(p) + (nd - kd) * std::log1p(-p);
}

std::vector<FitResult> fit_by_condition(const std::vector<MethodResult>& results,
                                        const std::vector<Item>& items) {
  auto index = index_items(items);

  // Pooled human counts per condition; conditions with any item lacking
  // counts are skipped (no usable human data).
  struct Human {
    int64_t target = 0;
    int64_t total = 0;
    int64_t n_items = 0;
    bool complete = true;
  };
  std::map<std::string, Human> human;
  for (const auto& it : items) {
    Human& h = human[it.condition];
    ++h.n_items;
    if (!it.human_counts) {
      h.complete = false;
      continue;
    }
    h.target += (*it.human_counts)[it.target_index];
    for (int64_t c : *it.human_counts) h.total += c;
  }

  struct Cell {
    int64_t n = 0;
    int64_t correct = 0;
  };
  std::map<std::tuple<std::string, std::string, std::string>, Cell> cells;
  for (const auto& r : results) {
    const Item* item = find_item(index, r.item_id);
    const std::string method = method_name(method_of(r.score_kind.kind));
    Cell& cell = cells[{item->condition, method, r.score_kind.name()}];
    ++cell.n;
    if (r.chosen_index && *r.chosen_index == item->target_index) ++cell.correct;
  }

  std::vector<FitResult> out;
  for (const auto& [key, cell] : cells) {
    const std::string& condition = std::get<0>(key);
    const Human& h = human.at(condition);
    if (!h.complete || h.total == 0) continue;
    FitResult fit;
    fit.condition = condition;
    fit.method = std::get<1>(key);
    fit.score_kind = std::get<2>(key);
    fit.target_rate =
        cell.n ? static_cast<double>(cell.correct) / static_cast<double>(cell.n) : 0.0;
    const double eps = 1.0 / (2.0 * static_cast<double>(h.n_items));
    fit.smoothed_p = std::clamp(fit.target_rate, eps, 1.0 - eps);
    fit.human_target_count = h.target;
    fit.human_total = h.total;
    fit.log_likelihood = binomial_log_likelihood(h.target, h.total, fit.target_rate, eps);
    out.push_back(std::move(fit));
  }
  std::sort(out.begin(), out.end(), [](const FitResult& a, const FitResult& b) {
    return std::tie(a.condition, a.method, a.score_kind) <
           std::tie(b.condition, b.method, b.score_kind);
  });
  return out;
}

std::vector<FitResult> delta_ll(std::vector<FitResult> fits, BaselineRule rule) {
  if (fits.empty()) throw std::invalid_argument("delta_ll: empty fit list");
  (void)rule;  // a single rule exists today

  // Total ll per (method, score_kind); the minimum is the baseline.
  std::map<std::pair<std::string, std::string>, double> totals;
  for (const auto& f : fits) totals[{f.method, f.score_kind}] += f.log_likelihood;
  auto baseline = std::min_element(totals.begin(), totals.end(),
                                   [](const auto& a, const auto& b) {
                                     if (a.second != b.second) return a.second < b.second;
                                     return a.first < b.first;  // deterministic tie-break
                                   })
                      ->first;

  std::map<std::string, double> baseline_by_condition;
  for (const auto& f : fits)
    if (f.method == baseline.first && f.score_kind == baseline.second)
      baseline_by_condition[f.condition] = f.log_likelihood;

  for (auto& f : fits) {
    auto it = baseline_by_condition.find(f.condition);
    if (it == baseline_by_condition.end())
      throw std::invalid_argument("delta_ll: baseline has no fit for condition '" + f.condition +
                                  "'");
    f.delta_ll = f.log_likelihood - it->second;
  }
  return fits;
}

std::string result_column(const MethodResult& r) {
  return method_name(method_of(r.score_kind.kind)) + ":" + r.score_kind.name();
}

double cohen_kappa(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cohen_kappa: length mismatch");
  if (a.empty()) return 0.0;
  const double n = static_cast<double>(a.size());
  std::map<int, double> pa, pb;
  double agree = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    pa[a[i]] += 1.0;
    pb[b[i]] += 1.0;
    if (a[i] == b[i]) agree += 1.0;
  }
  const double po = agree / n;
  double pe = 0.0;
  for (const auto& [cat, ca] : pa) {
    auto it = pb.find(cat);
    if (it != pb.end()) pe += (ca / n) * (it->second / n);
  }
  if (pe >= 1.0) return po >= 1.0 ? 1.0 : 0.0;
  return (po - pe) / (1.0 - pe);
}

namespace {

AgreementMatrix build_matrix(const std::vector<std::string>& columns,
                             const std::map<std::string, std::map<std::string, std::optional<int>>>&
                                 per_item,
                             const std::set<std::string>& item_filter) {
  AgreementMatrix m;
  m.columns = columns;
  const size_t c = columns.size();
  m.raw.assign(c, std::vector<double>(c, 1.0));
  m.kappa.assign(c, std::vector<double>(c, 1.0));

  for (const auto& [item_id, choices] : per_item) {
    if (!item_filter.empty() && !item_filter.count(item_id)) continue;
    ++m.n_items;
    std::set<int> decided;
    for (const auto& [col, choice] : choices)
      if (choice) decided.insert(*choice);
    if (decided.size() > 1) ++m.flip_count;
  }

  for (size_t i = 0; i < c; ++i) {
    for (size_t j = i + 1; j < c; ++j) {
      std::vector<int> a, b;
      for (const auto& [item_id, choices] : per_item) {
        if (!item_filter.empty() && !item_filter.count(item_id)) continue;
        auto ia = choices.find(columns[i]);
        auto ib = choices.find(columns[j]);
        if (ia == choices.end() || ib == choices.end()) continue;
        if (!ia->second || !ib->second) continue;  // co-decided items only
        a.push_back(*ia->second);
        b.push_back(*ib->second);
      }
      double raw = 0.0, kappa = 0.0;
      if (!a.empty()) {
        int agree = 0;
        for (size_t t = 0; t < a.size(); ++t)
          if (a[t] == b[t]) ++agree;
        raw = static_cast<double>(agree) / static_cast<double>(a.size());
        kappa = cohen_kappa(a, b);
      }
      m.raw[i][j] = m.raw[j][i] = raw;
      m.kappa[i][j] = m.kappa[j][i] = kappa;
    }
  }
  return m;
}

}  // namespace

RobustnessReport robustness(const std::vector<MethodResult>& results,
                            const std::vector<Item>& items) {
  auto index = index_items(items);
  RobustnessReport report;

  std::set<std::string> column_set;
  for (const auto& r : results) {
    find_item(index, r.item_id);  // validates the reference
    column_set.insert(result_column(r));
    report.per_item[r.item_id][result_column(r)] = r.chosen_index;
  }
  std::vector<std::string> columns(column_set.begin(), column_set.end());

  report.overall = build_matrix(columns, report.per_item, {});
  for (const auto& condition : condition_names(items)) {
    std::set<std::string> filter;
    for (const auto& it : items)
      if (it.condition == condition && report.per_item.count(it.id)) filter.insert(it.id);
    if (filter.empty()) continue;
    report.per_condition[condition] = build_matrix(columns, report.per_item, filter);
  }
  return report;
}

}  // namespace mcq
