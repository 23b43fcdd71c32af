#include "jobham/engine.h"

#include "jobham/error.h"
#include "jobham/matcher.h"
#include "jobham/textprep.h"

namespace jobham {

CorpusScope ParseCorpusScope(std::string_view name) {
  if (name == "corpus" || name == "job-corpus") return CorpusScope::kJobCorpus;
  if (name == "single-doc-sentences") return CorpusScope::kSingleDocSentences;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown corpus scope '" + std::string(name) +
                  "' (expected corpus or single-doc-sentences)");
}

Engine::Engine(Store& store, std::shared_ptr<const SkillExtractor> extractor,
               StopwordSet stopwords, EngineOptions options)
    : store_(store),
      extractor_(std::move(extractor)),
      stopwords_(std::move(stopwords)),
      options_(options) {
  if (!extractor_) {
    throw Error(ErrorCode::kInvalidArgument, "engine needs an extractor");
  }
}

std::string Engine::IngestJob(JobPosting job) {
  job.skills = extractor_->JobSkills(job.description);
  return store_.UpsertJob(std::move(job));
}

void Engine::IngestJobs(std::vector<JobPosting> jobs) {
  for (auto& job : jobs) job.skills = extractor_->JobSkills(job.description);
  store_.UpsertJobs(std::move(jobs));
}

ApplicantProfile Engine::IngestResume(std::string_view applicant_id,
                                      std::string resume_text) {
  ValidateId(applicant_id, "applicant_id");
  auto snap = store_.Snapshot();
  ApplicantProfile applicant;
  if (const ApplicantProfile* existing = snap->FindApplicant(applicant_id)) {
    applicant = *existing;
  } else {
    applicant.applicant_id = std::string(applicant_id);
  }
  ResumeProfile profile = extractor_->Resume(resume_text);
  if (applicant.name.empty() && profile.name) applicant.name = *profile.name;
  if (applicant.email.empty() && profile.email) applicant.email = *profile.email;
  applicant.resume_text = std::move(resume_text);
  applicant.resume_profile = std::move(profile);
  store_.UpsertApplicant(applicant);
  return applicant;
}

std::shared_ptr<const TfidfModel> Engine::ModelFor(
    const StoreSnapshot& snap) const {
  // Held across the fit so concurrent first requests fit once.
  std::lock_guard lock(model_mu_);
  if (model_ && model_version_ == snap.jobs_version()) return model_;

  std::vector<CorpusDoc> corpus;
  corpus.reserve(snap.jobs().size());
  for (const auto& [id, job] : snap.jobs()) {
    corpus.push_back({id, NormalizeText(job->description)});
  }
  auto model = std::make_shared<const TfidfModel>(
      TfidfModel::Fit(corpus, options_.mode));
  ++fit_count_;
  if (!model_ || snap.jobs_version() >= model_version_) {
    model_ = model;
    model_version_ = snap.jobs_version();
  }
  return model;
}

std::vector<TermScore> Engine::TermScoresFor(const StoreSnapshot& snap,
                                             const JobPosting& job) const {
  if (options_.corpus == CorpusScope::kSingleDocSentences) {
    return SentenceCorpusScores(job.description, options_.mode);
  }
  return ModelFor(snap)->TermScores(job.job_id);
}

RankedResult Engine::RankApplicants(
    std::string_view job_id, std::span<const std::string> applicant_ids) const {
  auto snap = store_.Snapshot();
  Matcher matcher(*snap, *extractor_, [&](const JobPosting& job) {
    return TermScoresFor(*snap, job);
  });
  return matcher.RankApplicants(job_id, applicant_ids);
}

RankedResult Engine::RankJobs(std::string_view applicant_id,
                              std::span<const std::string> job_ids) const {
  auto snap = store_.Snapshot();
  Matcher matcher(*snap, *extractor_, [&](const JobPosting& job) {
    return TermScoresFor(*snap, job);
  });
  return matcher.RankJobs(applicant_id, job_ids);
}

std::vector<ScoredSkill> Engine::JobSkills(std::string_view job_id) const {
  auto snap = store_.Snapshot();
  Matcher matcher(*snap, *extractor_, [&](const JobPosting& job) {
    return TermScoresFor(*snap, job);
  });
  std::vector<ScoredSkill> scored = matcher.ScoredSkillsFor(job_id);
  if (scored.size() > options_.job2skill_limit) {
    scored.resize(options_.job2skill_limit);
  }
  return scored;
}

FrequencyTable Engine::WordCloud(std::string_view job_id) const {
  auto snap = store_.Snapshot();
  return TopN(WordFrequencies(snap->GetJob(job_id).description, stopwords_),
              options_.wordcloud_limit);
}

std::vector<TermScore> Engine::TermScores(std::string_view job_id) const {
  auto snap = store_.Snapshot();
  return TermScoresFor(*snap, snap->GetJob(job_id));
}

}  // namespace jobham
