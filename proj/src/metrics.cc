#include "jobham/metrics.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "jobham/error.h"

namespace jobham {
namespace {

double SafeRatio(std::int64_t num, std::int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

void RequireK(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
}

}  // namespace

double Accuracy(const ConfusionCounts& c) {
  if (c.tp < 0 || c.tn < 0 || c.fp < 0 || c.fn < 0) {
    throw Error(ErrorCode::kInvalidArgument, "confusion counts must be >= 0");
  }
  const std::int64_t total = c.tp + c.tn + c.fp + c.fn;
  if (total == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "accuracy is undefined for all-zero counts");
  }
  return SafeRatio(c.tp + c.tn, total);
}

double Precision(const ConfusionCounts& c) { return SafeRatio(c.tp, c.tp + c.fp); }

double Recall(const ConfusionCounts& c) { return SafeRatio(c.tp, c.tp + c.fn); }

double F1(const ConfusionCounts& c) {
  const double p = Precision(c);
  const double r = Recall(c);
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

double MeanReciprocalRank(std::span<const std::optional<std::int64_t>> ranks) {
  if (ranks.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "MRR needs at least one query");
  }
  double sum = 0.0;
  for (const auto& rank : ranks) {
    if (!rank) continue;
    if (*rank < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "rank must be >= 1, got " + std::to_string(*rank));
    }
    sum += 1.0 / static_cast<double>(*rank);
  }
  return sum / static_cast<double>(ranks.size());
}

double Dcg(std::span<const double> relevance, std::size_t k) {
  RequireK(k);
  const std::size_t n = std::min(k, relevance.size());
  double dcg = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    dcg += relevance[i - 1] / std::log2(static_cast<double>(i) + 1.0);
  }
  return dcg;
}

double Ndcg(std::span<const double> relevance, std::size_t k) {
  RequireK(k);
  std::vector<double> ideal(relevance.begin(), relevance.end());
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  const double idcg = Dcg(ideal, k);
  if (idcg == 0.0) return 0.0;
  return Dcg(relevance, k) / idcg;
}

double RecallAtK(std::span<const std::string> ranked,
                 const std::set<std::string>& relevant, std::size_t k) {
  RequireK(k);
  if (relevant.empty()) {
    throw Error(ErrorCode::kEmptyRelevant, "relevant set is empty");
  }
  const std::size_t n = std::min(k, ranked.size());
  std::set<std::string> hits;
  for (std::size_t i = 0; i < n; ++i) {
    if (relevant.contains(ranked[i])) hits.insert(ranked[i]);
  }
  return static_cast<double>(hits.size()) / static_cast<double>(relevant.size());
}

}  // namespace jobham
