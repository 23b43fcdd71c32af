#ifndef JOBHAM_ENGINE_H_
#define JOBHAM_ENGINE_H_

#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jobham/extract.h"
#include "jobham/ranker.h"
#include "jobham/stats.h"
#include "jobham/store.h"
#include "jobham/tfidf.h"

namespace jobham {

// Which documents the TF-IDF statistics are computed over.
//  kJobCorpus: every stored job description is one document.
//  kSingleDocSentences: each job is scored against its own sentences.
enum class CorpusScope { kJobCorpus, kSingleDocSentences };

CorpusScope ParseCorpusScope(std::string_view name);

struct EngineOptions {
  TfidfMode mode = TfidfMode::kSmooth;
  CorpusScope corpus = CorpusScope::kJobCorpus;
  std::size_t job2skill_limit = 20;
  std::size_t wordcloud_limit = 100;
};

// Glue between the store, the extractor and the scoring code. Every query
// works on a single store snapshot. The job-corpus TF-IDF model is fitted
// lazily and refitted after the job collection changes.
class Engine {
 public:
  Engine(Store& store, std::shared_ptr<const SkillExtractor> extractor,
         StopwordSet stopwords, EngineOptions options = {});

  Store& store() { return store_; }
  const SkillExtractor& extractor() const { return *extractor_; }
  const EngineOptions& options() const { return options_; }

  // Fills `skills` from the description before storing.
  std::string IngestJob(JobPosting job);
  void IngestJobs(std::vector<JobPosting> jobs);
  // Creates the applicant when missing; name/email default from the
  // extracted profile.
  ApplicantProfile IngestResume(std::string_view applicant_id,
                                std::string resume_text);

  RankedResult RankApplicants(std::string_view job_id,
                              std::span<const std::string> applicant_ids) const;
  RankedResult RankJobs(std::string_view applicant_id,
                        std::span<const std::string> job_ids) const;

  // Scored skills capped at options().job2skill_limit.
  std::vector<ScoredSkill> JobSkills(std::string_view job_id) const;
  // Top options().wordcloud_limit words of the description.
  FrequencyTable WordCloud(std::string_view job_id) const;
  std::vector<TermScore> TermScores(std::string_view job_id) const;

  // Number of job-corpus fits performed so far.
  std::size_t fit_count() const { return fit_count_.load(); }

 private:
  std::shared_ptr<const TfidfModel> ModelFor(const StoreSnapshot& snap) const;
  std::vector<TermScore> TermScoresFor(const StoreSnapshot& snap,
                                       const JobPosting& job) const;

  Store& store_;
  std::shared_ptr<const SkillExtractor> extractor_;
  StopwordSet stopwords_;
  EngineOptions options_;

  mutable std::mutex model_mu_;
  mutable std::shared_ptr<const TfidfModel> model_;
  mutable std::uint64_t model_version_ = 0;
  mutable std::atomic<std::size_t> fit_count_{0};
};

}  // namespace jobham

#endif  // JOBHAM_ENGINE_H_
