#ifndef JOBHAM_MATCHER_H_
#define JOBHAM_MATCHER_H_

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jobham/extract.h"
#include "jobham/ranker.h"
#include "jobham/store.h"
#include "jobham/tfidf.h"

namespace jobham {

using TermScoreSource = std::function<std::vector<TermScore>(const JobPosting&)>;

// Both ranking directions over one store snapshot. Skills always come from
// the extractor; TF-IDF terms come from `term_scores`.
class Matcher {
 public:
  Matcher(const StoreSnapshot& snapshot, const SkillExtractor& extractor,
          TermScoreSource term_scores);

  // Throws Error(kNotFound) for an unknown job.
  std::vector<ScoredSkill> ScoredSkillsFor(std::string_view job_id) const;

  // Unknown applicant ids are skipped with a result diagnostic; applicants
  // without resume text score 0 with an entry diagnostic. Duplicate ids in
  // the input are ranked once. Throws Error(kNotFound) for an unknown job.
  RankedResult RankApplicants(std::string_view job_id,
                              std::span<const std::string> applicant_ids) const;

  // Mirror of RankApplicants. Throws Error(kNotFound) for an unknown
  // applicant.
  RankedResult RankJobs(std::string_view applicant_id,
                        std::span<const std::string> job_ids) const;

 private:
  std::vector<ScoredSkill> ScoredSkillsFor(const JobPosting& job) const;

  const StoreSnapshot& snapshot_;
  const SkillExtractor& extractor_;
  TermScoreSource term_scores_;
};

}  // namespace jobham

#endif  // JOBHAM_MATCHER_H_
