#ifndef JOBHAM_RANKER_H_
#define JOBHAM_RANKER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jobham/tfidf.h"

namespace jobham {

// A job skill annotated with the TF-IDF term that matched it.
struct ScoredSkill {
  std::string skill;
  double score = 0.0;  // TF-IDF score of `match`
  double ratio = 0.0;  // len(match) / len(skill), in (0, 1]
  std::string match;

  bool operator==(const ScoredSkill&) const = default;
};

// Emits one ScoredSkill per (term, skill) pair where the term occurs inside
// the skill ignoring ASCII case, sorts by ratio descending (then score
// descending, then skill ascending) and keeps the first entry per skill.
std::vector<ScoredSkill> ScoreJobSkills(std::span<const TermScore> terms,
                                        std::span<const std::string> job_skills);

// 100 * |matched| / |job_skills|. Throws Error(kEmptyJobSkills) when the job
// has no skills and Error(kInvalidArgument) when matched is not a subset.
double MatchRatio(std::span<const std::string> matched,
                  std::span<const std::string> job_skills);

struct MatchScore {
  double score = 0.0;
  double match_ratio = 0.0;  // percent
  std::vector<std::string> match_list;
  std::optional<std::string> diagnostic;
};

// match_list: scored skills present in cv_skills (ASCII case-insensitive),
// in scored order. score = sum of their TF-IDF scores * match_ratio / 100.
// An empty scored list yields score 0 with a diagnostic.
MatchScore ComputeMatchScore(std::span<const ScoredSkill> scored,
                             std::span<const std::string> cv_skills);

struct RankedEntry {
  std::string entity_id;
  double score = 0.0;
  double match_ratio = 0.0;
  std::vector<std::string> match_list;
  std::vector<std::string> diagnostics;
};

struct RankedResult {
  std::vector<RankedEntry> entries;
  std::vector<std::string> diagnostics;
};

// Score descending, ties by entity id ascending.
void SortRanked(std::vector<RankedEntry>& entries);

std::string AsciiLower(std::string_view s);

}  // namespace jobham

#endif  // JOBHAM_RANKER_H_
