#include "jobham/matcher.h"

#include <set>

namespace jobham {
namespace {

constexpr std::string_view kNoResume = "applicant has no resume text";

std::vector<std::string> UniqueInOrder(std::span<const std::string> ids) {
  std::vector<std::string> out;
  std::set<std::string_view> seen;
  for (const auto& id : ids) {
    if (seen.insert(id).second) out.push_back(id);
  }
  return out;
}

RankedEntry ToEntry(std::string id, MatchScore m) {
  RankedEntry e;
  e.entity_id = std::move(id);
  e.score = m.score;
  e.match_ratio = m.match_ratio;
  e.match_list = std::move(m.match_list);
  if (m.diagnostic) e.diagnostics.push_back(std::move(*m.diagnostic));
  return e;
}

}  // namespace

Matcher::Matcher(const StoreSnapshot& snapshot, const SkillExtractor& extractor,
                 TermScoreSource term_scores)
    : snapshot_(snapshot),
      extractor_(extractor),
      term_scores_(std::move(term_scores)) {}

std::vector<ScoredSkill> Matcher::ScoredSkillsFor(const JobPosting& job) const {
  const std::vector<TermScore> terms = term_scores_(job);
  const std::vector<std::string> skills = extractor_.JobSkills(job.description);
  return ScoreJobSkills(terms, skills);
}

std::vector<ScoredSkill> Matcher::ScoredSkillsFor(std::string_view job_id) const {
  return ScoredSkillsFor(snapshot_.GetJob(job_id));
}

RankedResult Matcher::RankApplicants(
    std::string_view job_id, std::span<const std::string> applicant_ids) const {
  const JobPosting& job = snapshot_.GetJob(job_id);
  const std::vector<ScoredSkill> scored = ScoredSkillsFor(job);

  RankedResult result;
  for (std::string& id : UniqueInOrder(applicant_ids)) {
    const ApplicantProfile* applicant = snapshot_.FindApplicant(id);
    if (applicant == nullptr) {
      result.diagnostics.push_back("unknown applicant '" + id + "' skipped");
      continue;
    }
    if (applicant->resume_text.empty()) {
      RankedEntry e;
      e.entity_id = std::move(id);
      e.diagnostics.emplace_back(kNoResume);
      result.entries.push_back(std::move(e));
      continue;
    }
    const ResumeProfile profile = extractor_.Resume(applicant->resume_text);
    result.entries.push_back(
        ToEntry(std::move(id), ComputeMatchScore(scored, profile.skills)));
  }
  SortRanked(result.entries);
  return result;
}

RankedResult Matcher::RankJobs(std::string_view applicant_id,
                               std::span<const std::string> job_ids) const {
  const ApplicantProfile& applicant = snapshot_.GetApplicant(applicant_id);
  const bool has_resume = !applicant.resume_text.empty();
  std::vector<std::string> cv_skills;
  if (has_resume) cv_skills = extractor_.Resume(applicant.resume_text).skills;

  RankedResult result;
  if (!has_resume) result.diagnostics.emplace_back(kNoResume);
  for (std::string& id : UniqueInOrder(job_ids)) {
    const JobPosting* job = snapshot_.FindJob(id);
    if (job == nullptr) {
      result.diagnostics.push_back("unknown job '" + id + "' skipped");
      continue;
    }
    if (!has_resume) {
      RankedEntry e;
      e.entity_id = std::move(id);
      e.diagnostics.emplace_back(kNoResume);
      result.entries.push_back(std::move(e));
      continue;
    }
    result.entries.push_back(ToEntry(
        std::move(id), ComputeMatchScore(ScoredSkillsFor(*job), cv_skills)));
  }
  SortRanked(result.entries);
  return result;
}

}  // namespace jobham
