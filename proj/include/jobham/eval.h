#ifndef JOBHAM_EVAL_H_
#define JOBHAM_EVAL_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace jobham {

// query id -> ids in rank order.
using Run = std::map<std::string, std::vector<std::string>>;
// query id -> (id -> grade).
using Qrels = std::map<std::string, std::map<std::string, double>>;

// Run file lines: `query_id<TAB>id` (file order is rank order) or
// `query_id<TAB>id1,id2,...`. Throws Error(kParseError) with the line number.
Run ParseRun(std::string_view contents);
// Qrels lines: `query_id<TAB>id<TAB>grade`.
Qrels ParseQrels(std::string_view contents);

struct QueryMetrics {
  std::string query_id;
  double reciprocal_rank = 0.0;
  double ndcg = 0.0;
  double precision = 0.0;
  std::optional<double> recall;  // absent when the query has no relevant ids
  double f1 = 0.0;
};

struct EvalReport {
  std::size_t k = 10;
  std::vector<QueryMetrics> queries;
  QueryMetrics mean;  // query_id "all"
  std::vector<std::string> warnings;
};

// Judged queries only; a judged query missing from the run counts as an
// empty ranking. nDCG's ideal ordering is taken over all judged ids.
EvalReport Evaluate(const Run& run, const Qrels& qrels, std::size_t k);

void PrintReport(const EvalReport& report, std::ostream& out);

}  // namespace jobham

#endif  // JOBHAM_EVAL_H_
