#include "jobham/eval.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

#include "jobham/error.h"
#include "jobham/metrics.h"

namespace jobham {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

template <typename Fn>
void ForEachDataLine(std::string_view contents, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    std::size_t eol = contents.find('\n', pos);
    if (eol == std::string_view::npos) eol = contents.size();
    std::string_view line = contents.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    fn(line, line_no);
  }
}

[[noreturn]] void LineError(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line_no) + ": " + what);
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

Run ParseRun(std::string_view contents) {
  Run run;
  ForEachDataLine(contents, [&](std::string_view line, std::size_t line_no) {
    auto fields = SplitTabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      LineError(line_no, "expected query_id<TAB>ranked ids");
    }
    auto& ranked = run[std::string(fields[0])];
    std::size_t start = 0;
    while (start <= fields[1].size()) {
      std::size_t comma = fields[1].find(',', start);
      if (comma == std::string_view::npos) comma = fields[1].size();
      std::string_view id = fields[1].substr(start, comma - start);
      if (id.empty()) LineError(line_no, "empty id in ranked list");
      ranked.emplace_back(id);
      start = comma + 1;
    }
  });
  return run;
}

Qrels ParseQrels(std::string_view contents) {
  Qrels qrels;
  ForEachDataLine(contents, [&](std::string_view line, std::size_t line_no) {
    auto fields = SplitTabs(line);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      LineError(line_no, "expected query_id<TAB>id<TAB>grade");
    }
    double grade = 0.0;
    auto [ptr, ec] = std::from_chars(fields[2].data(),
                                     fields[2].data() + fields[2].size(), grade);
    if (ec != std::errc() || ptr != fields[2].data() + fields[2].size() ||
        !std::isfinite(grade) || grade < 0) {
      LineError(line_no, "grade must be a non-negative number");
    }
    qrels[std::string(fields[0])][std::string(fields[1])] = grade;
  });
  return qrels;
}

EvalReport Evaluate(const Run& run, const Qrels& qrels, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  EvalReport report;
  report.k = k;
  for (const auto& [qid, ranked] : run) {
    if (!qrels.contains(qid)) {
      report.warnings.push_back("query '" + qid + "' has no judgments; skipped");
    }
  }

  std::vector<std::optional<std::int64_t>> first_hits;
  double recall_sum = 0.0;
  std::size_t recall_n = 0;
  for (const auto& [qid, judged] : qrels) {
    static const std::vector<std::string> kEmpty;
    auto it = run.find(qid);
    const std::vector<std::string>& ranked = it == run.end() ? kEmpty : it->second;

    QueryMetrics m;
    m.query_id = qid;
    std::vector<double> gains;
    std::optional<std::int64_t> first_hit;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      auto g = judged.find(ranked[i]);
      double grade = g == judged.end() ? 0.0 : g->second;
      gains.push_back(grade);
      if (!first_hit && grade > 0) first_hit = static_cast<std::int64_t>(i + 1);
    }
    first_hits.push_back(first_hit);
    const std::optional<std::int64_t> one[] = {first_hit};
    m.reciprocal_rank = MeanReciprocalRank(one);

    std::vector<double> ideal;
    std::set<std::string> relevant;
    for (const auto& [id, grade] : judged) {
      ideal.push_back(grade);
      if (grade > 0) relevant.insert(id);
    }
    std::sort(ideal.begin(), ideal.end(), std::greater<>());
    const double idcg = Dcg(ideal, k);
    m.ndcg = idcg == 0.0 ? 0.0 : Dcg(gains, k) / idcg;

    ConfusionCounts c;
    const std::size_t cut = std::min(k, ranked.size());
    std::set<std::string> hits;
    for (std::size_t i = 0; i < cut; ++i) {
      if (relevant.contains(ranked[i])) hits.insert(ranked[i]);
    }
    c.tp = static_cast<std::int64_t>(hits.size());
    // P@k divides by k even when fewer than k ids were returned.
    c.fp = static_cast<std::int64_t>(k) - c.tp;
    c.fn = static_cast<std::int64_t>(relevant.size()) - c.tp;
    m.precision = Precision(c);
    m.f1 = F1(c);
    if (!relevant.empty()) {
      m.recall = RecallAtK(ranked, relevant, k);
      recall_sum += *m.recall;
      ++recall_n;
    } else {
      report.warnings.push_back("query '" + qid + "' has no relevant ids");
    }
    report.queries.push_back(std::move(m));
  }

  report.mean.query_id = "all";
  if (!report.queries.empty()) {
    const double n = static_cast<double>(report.queries.size());
    report.mean.reciprocal_rank = MeanReciprocalRank(first_hits);
    for (const auto& q : report.queries) {
      report.mean.ndcg += q.ndcg / n;
      report.mean.precision += q.precision / n;
      report.mean.f1 += q.f1 / n;
    }
    if (recall_n > 0) report.mean.recall = recall_sum / static_cast<double>(recall_n);
  }
  return report;
}

void PrintReport(const EvalReport& report, std::ostream& out) {
  const std::string k = std::to_string(report.k);
  out << "query\tMRR\tnDCG@" << k << "\tP@" << k << "\tR@" << k << "\tF1@" << k
      << "\n";
  auto row = [&](const QueryMetrics& m) {
    out << m.query_id << '\t' << Fixed(m.reciprocal_rank) << '\t'
        << Fixed(m.ndcg) << '\t' << Fixed(m.precision) << '\t'
        << (m.recall ? Fixed(*m.recall) : std::string("n/a")) << '\t'
        << Fixed(m.f1) << "\n";
  };
  for (const auto& q : report.queries) row(q);
  row(report.mean);
}

}  // namespace jobham
