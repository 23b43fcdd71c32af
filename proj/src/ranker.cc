#include "jobham/ranker.h"

#include <algorithm>
#include <unordered_set>

#include "jobham/error.h"
#include "jobham/textprep.h"

namespace jobham {

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<ScoredSkill> ScoreJobSkills(std::span<const TermScore> terms,
                                        std::span<const std::string> job_skills) {
  std::vector<std::string> lowered_skills;
  lowered_skills.reserve(job_skills.size());
  for (const auto& skill : job_skills) lowered_skills.push_back(AsciiLower(skill));

  std::vector<ScoredSkill> scored;
  for (const TermScore& term : terms) {
    if (term.term.empty()) continue;
    const std::string needle = AsciiLower(term.term);
    for (std::size_t i = 0; i < job_skills.size(); ++i) {
      if (lowered_skills[i].find(needle) == std::string::npos) continue;
      scored.push_back({job_skills[i], term.score,
                        static_cast<double>(Utf8Length(term.term)) /
                            static_cast<double>(Utf8Length(job_skills[i])),
                        term.term});
    }
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const ScoredSkill& a, const ScoredSkill& b) {
                     if (a.ratio != b.ratio) return a.ratio > b.ratio;
                     if (a.score != b.score) return a.score > b.score;
                     return a.skill < b.skill;
                   });
  std::unordered_set<std::string> seen;
  std::erase_if(scored, [&](const ScoredSkill& s) {
    return !seen.insert(s.skill).second;
  });
  return scored;
}

double MatchRatio(std::span<const std::string> matched,
                  std::span<const std::string> job_skills) {
  if (job_skills.empty()) {
    throw Error(ErrorCode::kEmptyJobSkills, "job has no extractable skills");
  }
  for (const auto& m : matched) {
    if (std::find(job_skills.begin(), job_skills.end(), m) == job_skills.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "matched skill '" + m + "' is not a job skill");
    }
  }
  return 100.0 * static_cast<double>(matched.size()) /
         static_cast<double>(job_skills.size());
}

MatchScore ComputeMatchScore(std::span<const ScoredSkill> scored,
                             std::span<const std::string> cv_skills) {
  MatchScore result;
  if (scored.empty()) {
    result.diagnostic = "job has no extractable skills";
    return result;
  }
  std::unordered_set<std::string> cv;
  for (const auto& s : cv_skills) cv.insert(AsciiLower(s));

  std::vector<std::string> job_skills;
  job_skills.reserve(scored.size());
  double scored_sum = 0.0;
  for (const ScoredSkill& s : scored) {
    job_skills.push_back(s.skill);
    if (cv.contains(AsciiLower(s.skill))) {
      result.match_list.push_back(s.skill);
      scored_sum += s.score;
    }
  }
  result.match_ratio = MatchRatio(result.match_list, job_skills);
  result.score = scored_sum * result.match_ratio / 100.0;
  return result;
}

void SortRanked(std::vector<RankedEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.entity_id < b.entity_id;
            });
}

}  // namespace jobham
