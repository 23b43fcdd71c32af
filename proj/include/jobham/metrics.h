#ifndef JOBHAM_METRICS_H_
#define JOBHAM_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace jobham {

struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t tn = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
};

// (tp + tn) / total. Throws Error(kInvalidArgument) when every count is 0
// or any count is negative.
double Accuracy(const ConfusionCounts& c);
// The 0/0 cases return 0.
double Precision(const ConfusionCounts& c);
double Recall(const ConfusionCounts& c);
double F1(const ConfusionCounts& c);

// Mean of 1/rank over queries; std::nullopt means the query had no hit and
// contributes 0. Throws Error(kInvalidArgument) for a rank below 1 or an
// empty query list.
double MeanReciprocalRank(std::span<const std::optional<std::int64_t>> ranks);

// sum_{i=1}^{min(k,n)} rel_i / log2(i + 1).
double Dcg(std::span<const double> relevance, std::size_t k);
// Dcg / Dcg of the descending-sorted list, both cut at k; 0 when the ideal
// gain is 0. Throws Error(kInvalidArgument) for k < 1.
double Ndcg(std::span<const double> relevance, std::size_t k);

// |top-k of ranked ∩ relevant| / |relevant|. Throws Error(kEmptyRelevant)
// or Error(kInvalidArgument) for k < 1.
double RecallAtK(std::span<const std::string> ranked,
                 const std::set<std::string>& relevant, std::size_t k);

}  // namespace jobham

#endif  // JOBHAM_METRICS_H_
