#ifndef JOBHAM_STORE_H_
#define JOBHAM_STORE_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jobham/extract.h"

namespace jobham {

enum class JobType { kFullTime, kPartTime };

struct JobPosting {
  std::string job_id;
  std::string title;
  std::string company;
  std::string location;
  JobType job_type = JobType::kFullTime;
  std::string description;
  std::string salary;
  std::string deadline;  // YYYY-MM-DD
  std::vector<std::string> skills;

  bool operator==(const JobPosting&) const = default;
};

struct ApplicantProfile {
  std::string applicant_id;
  std::string name;
  std::string email;
  std::string resume_text;
  std::optional<ResumeProfile> resume_profile;
  std::vector<std::string> apply_list;
  std::vector<std::string> saved_list;

  bool operator==(const ApplicantProfile&) const = default;
};

enum class ApplicationStatus { kApplied, kInterview, kOffer, kRejected };

struct ApplicantStatus {
  std::string applicant_id;
  ApplicationStatus status = ApplicationStatus::kApplied;

  bool operator==(const ApplicantStatus&) const = default;
};

struct ApplicationRecord {
  std::string job_id;
  std::vector<ApplicantStatus> applicants;  // insertion order

  bool operator==(const ApplicationRecord&) const = default;
};

// Ids are opaque, case-sensitive, non-empty, and may not contain ',', '/'
// or control characters (they travel in URL path segments).
void ValidateId(std::string_view id, std::string_view what);
void ValidateJob(const JobPosting& job);
void ValidateApplicant(const ApplicantProfile& applicant);
bool IsCalendarDate(std::string_view date);

// Immutable view of the whole store. Safe to share across threads.
class StoreSnapshot {
 public:
  const std::map<std::string, std::shared_ptr<const JobPosting>>& jobs() const {
    return jobs_;
  }
  const std::map<std::string, std::shared_ptr<const ApplicantProfile>>&
  applicants() const {
    return applicants_;
  }
  const std::map<std::string, ApplicationRecord>& applications() const {
    return applications_;
  }
  // Bumped whenever the job collection changes.
  std::uint64_t jobs_version() const { return jobs_version_; }

  const JobPosting* FindJob(std::string_view job_id) const;
  const ApplicantProfile* FindApplicant(std::string_view applicant_id) const;
  // Throw Error(kNotFound).
  const JobPosting& GetJob(std::string_view job_id) const;
  const ApplicantProfile& GetApplicant(std::string_view applicant_id) const;

  // References to missing jobs/applicants, one human-readable line each.
  std::vector<std::string> DanglingReferences() const;

 private:
  friend class Store;

  std::map<std::string, std::shared_ptr<const JobPosting>> jobs_;
  std::map<std::string, std::shared_ptr<const ApplicantProfile>> applicants_;
  std::map<std::string, ApplicationRecord> applications_;
  std::uint64_t jobs_version_ = 0;
};

struct ApplicationResult {
  ApplicationRecord record;
  bool duplicate = false;
};

struct ApplicantList {
  std::vector<std::string> applicant_ids;
  std::vector<std::string> dangling;  // listed but no longer in the store
};

// File-backed store: `job.jsonl`, `user.jsonl` and `application.jsonl` in
// one directory. Writers serialize on a store-wide mutex and replace each
// collection file via write-temp-then-rename; readers take snapshots.
class Store {
 public:
  inline static constexpr std::string_view kJobFile = "job.jsonl";
  inline static constexpr std::string_view kUserFile = "user.jsonl";
  inline static constexpr std::string_view kApplicationFile = "application.jsonl";

  // Creates the directory if needed and loads any existing collections.
  explicit Store(std::filesystem::path data_dir);

  const std::filesystem::path& data_dir() const { return data_dir_; }
  std::shared_ptr<const StoreSnapshot> Snapshot() const;

  std::string UpsertJob(JobPosting job);
  void UpsertJobs(std::vector<JobPosting> jobs);
  void RemoveJob(std::string_view job_id);
  JobPosting GetJob(std::string_view job_id) const;

  std::string UpsertApplicant(ApplicantProfile applicant);
  void RemoveApplicant(std::string_view applicant_id);
  ApplicantProfile GetApplicant(std::string_view applicant_id) const;
  void SaveJob(std::string_view applicant_id, std::string_view job_id);

  ApplicationResult RecordApplication(std::string_view job_id,
                                      std::string_view applicant_id);
  void SetApplicationStatus(std::string_view job_id,
                            std::string_view applicant_id,
                            ApplicationStatus status);
  ApplicantList ListApplicantsForJob(std::string_view job_id) const;

  // Next free id of the form `<prefix><n>` (CLI convenience).
  std::string NextJobId(std::string_view prefix = "job-") const;

  // Called with the temp file path after it is written and before it is
  // renamed over the collection file.
  void SetBeforeRenameHookForTesting(
      std::function<void(const std::filesystem::path&)> hook);

 private:
  enum Collection : unsigned { kJobs = 1, kUsers = 2, kApplications = 4 };

  void Load();
  void Commit(std::shared_ptr<StoreSnapshot> next, unsigned collections);
  void WriteCollection(std::string_view file, const std::string& contents);
  std::shared_ptr<StoreSnapshot> CopyForWrite() const;

  std::filesystem::path data_dir_;
  mutable std::mutex write_mu_;
  mutable std::mutex snapshot_mu_;
  std::shared_ptr<const StoreSnapshot> snapshot_;
  std::function<void(const std::filesystem::path&)> before_rename_hook_;
};

}  // namespace jobham

#endif  // JOBHAM_STORE_H_
