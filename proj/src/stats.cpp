#include "mpg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mpg {

double quantile(std::vector<double> values, double p) {
  if (values.empty()) throw std::invalid_argument("quantile: empty sample");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("quantile: p outside [0, 1]");
  std::sort(values.begin(), values.end());
  const double pos = p * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0) return values[lo];
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

std::vector<SummaryStats> summarize(const std::vector<RunRecord>& records) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const RunRecord*>> cells;
  for (const RunRecord& r : records) {
    auto [it, inserted] = cells.try_emplace(r.cell_key());
    if (inserted) order.push_back(r.cell_key());
    it->second.push_back(&r);
  }

  std::vector<SummaryStats> out;
  out.reserve(order.size());
  for (const std::string& key : order) {
    const auto& runs = cells[key];
    SummaryStats s;
    const RunRecord& first = *runs.front();
    s.instance_L = first.instance_L;
    s.instance_n = first.instance_n;
    s.height_mode = first.height_mode;
    s.instance_seed = first.instance_seed;
    s.algorithm_id = first.algorithm_id;
    s.goal = first.goal;
    s.count = runs.size();

    std::vector<double> evals;
    double restarts_sum = 0.0;
    for (const RunRecord* r : runs) {
      if (!r->success) continue;
      evals.push_back(static_cast<double>(r->evals));
      restarts_sum += static_cast<double>(r->restarts_or_generations);
    }
    s.successes = evals.size();
    s.success_rate = s.count == 0 ? 0.0
                                  : static_cast<double>(s.successes) /
                                        static_cast<double>(s.count);
    if (!evals.empty()) {
      double sum = 0.0;
      for (double e : evals) sum += e;
      s.mean = sum / static_cast<double>(evals.size());
      s.min = quantile(evals, 0.0);
      s.q1 = quantile(evals, 0.25);
      s.median = quantile(evals, 0.5);
      s.q3 = quantile(evals, 0.75);
      s.max = quantile(evals, 1.0);
      s.mean_restarts = restarts_sum / static_cast<double>(evals.size());
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace mpg
