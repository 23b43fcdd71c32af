#include "jobham/store.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <fstream>
#include <set>

#include "jobham/error.h"
#include "jobham/records.h"

namespace jobham {
namespace fs = std::filesystem;

namespace {

bool Contains(const std::vector<std::string>& list, std::string_view id) {
  return std::find(list.begin(), list.end(), id) != list.end();
}

void RequireUnique(const std::vector<std::string>& list, std::string_view what) {
  std::set<std::string_view> seen;
  for (const auto& id : list) {
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::kInvalidField,
                  std::string(what) + " contains duplicate id '" + id + "'");
    }
  }
}

[[noreturn]] void ThrowIo(const std::string& what, const fs::path& path) {
  throw Error(ErrorCode::kStorageIo,
              what + " " + path.string() + ": " + std::strerror(errno));
}

template <typename Fn>
void ForEachLine(const fs::path& path, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (!fs::exists(path)) return;
    ThrowIo("cannot open", path);
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      fn(Json::parse(line));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParseError, path.filename().string() + ":" +
                                              std::to_string(line_no) + ": " +
                                              e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, path.filename().string() + ":" +
                                              std::to_string(line_no) + ": " +
                                              e.what());
    }
  }
}

}  // namespace

void ValidateId(std::string_view id, std::string_view what) {
  if (id.empty()) {
    throw Error(ErrorCode::kInvalidField, std::string(what) + " is empty");
  }
  for (char c : id) {
    if (c == ',' || c == '/' || static_cast<unsigned char>(c) < 0x20 ||
        c == 0x7f) {
      throw Error(ErrorCode::kInvalidField,
                  std::string(what) + " '" + std::string(id) +
                      "' contains a comma, slash or control character");
    }
  }
}

bool IsCalendarDate(std::string_view date) {
  if (date.size() != 10 || date[4] != '-' || date[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (date[i] < '0' || date[i] > '9') return false;
  }
  auto num = [&](std::size_t pos, std::size_t len) {
    int v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (date[i] - '0');
    return v;
  };
  const std::chrono::year_month_day ymd{
      std::chrono::year{num(0, 4)},
      std::chrono::month{static_cast<unsigned>(num(5, 2))},
      std::chrono::day{static_cast<unsigned>(num(8, 2))}};
  return ymd.ok();
}

void ValidateJob(const JobPosting& job) {
  ValidateId(job.job_id, "job_id");
  if (job.description.empty()) {
    throw Error(ErrorCode::kInvalidField,
                "job '" + job.job_id + "' has an empty description");
  }
  if (!IsCalendarDate(job.deadline)) {
    throw Error(ErrorCode::kInvalidField,
                "job '" + job.job_id + "' deadline '" + job.deadline +
                    "' is not a YYYY-MM-DD calendar date");
  }
}

void ValidateApplicant(const ApplicantProfile& applicant) {
  ValidateId(applicant.applicant_id, "applicant_id");
  RequireUnique(applicant.apply_list, "apply_list");
  RequireUnique(applicant.saved_list, "saved_list");
  if (applicant.resume_profile && applicant.resume_profile->years_experience &&
      *applicant.resume_profile->years_experience < 0) {
    throw Error(ErrorCode::kInvalidField, "years_experience is negative");
  }
}

const JobPosting* StoreSnapshot::FindJob(std::string_view job_id) const {
  auto it = jobs_.find(std::string(job_id));
  return it == jobs_.end() ? nullptr : it->second.get();
}

const ApplicantProfile* StoreSnapshot::FindApplicant(
    std::string_view applicant_id) const {
  auto it = applicants_.find(std::string(applicant_id));
  return it == applicants_.end() ? nullptr : it->second.get();
}

const JobPosting& StoreSnapshot::GetJob(std::string_view job_id) const {
  if (const JobPosting* job = FindJob(job_id)) return *job;
  throw Error(ErrorCode::kNotFound, "job '" + std::string(job_id) + "' not found");
}

const ApplicantProfile& StoreSnapshot::GetApplicant(
    std::string_view applicant_id) const {
  if (const ApplicantProfile* a = FindApplicant(applicant_id)) return *a;
  throw Error(ErrorCode::kNotFound,
              "applicant '" + std::string(applicant_id) + "' not found");
}

std::vector<std::string> StoreSnapshot::DanglingReferences() const {
  std::vector<std::string> out;
  for (const auto& [id, applicant] : applicants_) {
    for (const auto& job_id : applicant->apply_list) {
      if (!jobs_.contains(job_id)) {
        out.push_back("applicant '" + id + "' apply_list references missing job '" +
                      job_id + "'");
      }
    }
    for (const auto& job_id : applicant->saved_list) {
      if (!jobs_.contains(job_id)) {
        out.push_back("applicant '" + id + "' saved_list references missing job '" +
                      job_id + "'");
      }
    }
  }
  for (const auto& [job_id, record] : applications_) {
    if (!jobs_.contains(job_id)) {
      out.push_back("application record references missing job '" + job_id + "'");
    }
    for (const auto& a : record.applicants) {
      if (!applicants_.contains(a.applicant_id)) {
        out.push_back("job '" + job_id + "' lists missing applicant '" +
                      a.applicant_id + "'");
      }
    }
  }
  return out;
}

Store::Store(fs::path data_dir) : data_dir_(std::move(data_dir)) {
  std::error_code ec;
  fs::create_directories(data_dir_, ec);
  if (ec) {
    throw Error(ErrorCode::kStorageIo,
                "cannot create data directory " + data_dir_.string() + ": " +
                    ec.message());
  }
  Load();
}

void Store::Load() {
  auto state = std::make_shared<StoreSnapshot>();
  ForEachLine(data_dir_ / kJobFile, [&](const Json& j) {
    JobPosting job = JobFromJson(j);
    ValidateJob(job);
    std::string id = job.job_id;
    if (!state->jobs_.emplace(id, std::make_shared<JobPosting>(std::move(job)))
             .second) {
      throw Error(ErrorCode::kInvalidField, "duplicate job id '" + id + "'");
    }
  });

  std::map<std::string, ApplicantProfile> users;
  ForEachLine(data_dir_ / kUserFile, [&](const Json& j) {
    ApplicantProfile a = ApplicantFromJson(j);
    ValidateApplicant(a);
    std::string id = a.applicant_id;
    if (!users.emplace(id, std::move(a)).second) {
      throw Error(ErrorCode::kInvalidField, "duplicate applicant id '" + id + "'");
    }
  });

  ForEachLine(data_dir_ / kApplicationFile, [&](const Json& j) {
    ApplicationRecord r = ApplicationFromJson(j);
    std::string id = r.job_id;
    std::set<std::string> seen;
    std::erase_if(r.applicants, [&](const ApplicantStatus& a) {
      return !seen.insert(a.applicant_id).second;
    });
    if (!state->applications_.emplace(id, std::move(r)).second) {
      throw Error(ErrorCode::kInvalidField,
                  "duplicate application record for job '" + id + "'");
    }
  });

  // The application file is renamed before the user file; heal an
  // interrupted RecordApplication by replaying the record into apply_list.
  for (const auto& [job_id, record] : state->applications_) {
    for (const auto& a : record.applicants) {
      auto it = users.find(a.applicant_id);
      if (it != users.end() && !Contains(it->second.apply_list, job_id)) {
        it->second.apply_list.push_back(job_id);
      }
    }
  }
  for (auto& [id, a] : users) {
    state->applicants_.emplace(id,
                               std::make_shared<ApplicantProfile>(std::move(a)));
  }

  std::lock_guard lock(snapshot_mu_);
  snapshot_ = std::move(state);
}

std::shared_ptr<const StoreSnapshot> Store::Snapshot() const {
  std::lock_guard lock(snapshot_mu_);
  return snapshot_;
}

std::shared_ptr<StoreSnapshot> Store::CopyForWrite() const {
  return std::make_shared<StoreSnapshot>(*Snapshot());
}

void Store::SetBeforeRenameHookForTesting(
    std::function<void(const fs::path&)> hook) {
  std::lock_guard lock(write_mu_);
  before_rename_hook_ = std::move(hook);
}

void Store::WriteCollection(std::string_view file, const std::string& contents) {
  const fs::path target = data_dir_ / file;
  fs::path tmp = target;
  tmp += ".tmp";

  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) ThrowIo("cannot create", tmp);
  const char* data = contents.data();
  std::size_t left = contents.size();
  while (left > 0) {
    ssize_t n = ::write(fd, data, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      int saved = errno;
      ::close(fd);
      errno = saved;
      ThrowIo("cannot write", tmp);
    }
    data += n;
    left -= static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) {
    int saved = errno;
    ::close(fd);
    errno = saved;
    ThrowIo("cannot fsync", tmp);
  }
  ::close(fd);

  if (before_rename_hook_) before_rename_hook_(tmp);

  if (::rename(tmp.c_str(), target.c_str()) != 0) ThrowIo("cannot rename", tmp);
  int dir_fd = ::open(data_dir_.c_str(), O_RDONLY | O_DIRECTORY | O_CLOEXEC);
  if (dir_fd >= 0) {
    ::fsync(dir_fd);
    ::close(dir_fd);
  }
}

void Store::Commit(std::shared_ptr<StoreSnapshot> next, unsigned collections) {
  if (collections & kJobs) {
    std::string out;
    for (const auto& [id, job] : next->jobs_) out += ToJson(*job).dump() + "\n";
    WriteCollection(kJobFile, out);
    ++next->jobs_version_;
  }
  if (collections & kApplications) {
    std::string out;
    for (const auto& [id, r] : next->applications_) out += ToJson(r).dump() + "\n";
    WriteCollection(kApplicationFile, out);
  }
  if (collections & kUsers) {
    std::string out;
    for (const auto& [id, a] : next->applicants_) out += ToJson(*a).dump() + "\n";
    WriteCollection(kUserFile, out);
  }
  std::lock_guard lock(snapshot_mu_);
  snapshot_ = std::move(next);
}

std::string Store::UpsertJob(JobPosting job) {
  std::string id = job.job_id;
  std::vector<JobPosting> batch;
  batch.push_back(std::move(job));
  UpsertJobs(std::move(batch));
  return id;
}

void Store::UpsertJobs(std::vector<JobPosting> jobs) {
  for (const auto& job : jobs) ValidateJob(job);
  std::lock_guard lock(write_mu_);
  auto next = CopyForWrite();
  for (auto& job : jobs) {
    std::string id = job.job_id;
    next->jobs_[id] = std::make_shared<JobPosting>(std::move(job));
  }
  Commit(std::move(next), kJobs);
}

void Store::RemoveJob(std::string_view job_id) {
  std::lock_guard lock(write_mu_);
  auto next = CopyForWrite();
  if (next->jobs_.erase(std::string(job_id)) == 0) {
    throw Error(ErrorCode::kNotFound, "job '" + std::string(job_id) + "' not found");
  }
  Commit(std::move(next), kJobs);
}

JobPosting Store::GetJob(std::string_view job_id) const {
  return Snapshot()->GetJob(job_id);
}

std::string Store::UpsertApplicant(ApplicantProfile applicant) {
  ValidateApplicant(applicant);
  std::lock_guard lock(write_mu_);
  auto next = CopyForWrite();
  std::string id = applicant.applicant_id;
  next->applicants_[id] =
      std::make_shared<ApplicantProfile>(std::move(applicant));
  Commit(std::move(next), kUsers);
  return id;
}

void Store::RemoveApplicant(std::string_view applicant_id) {
  std::lock_guard lock(write_mu_);
  auto next = CopyForWrite();
  if (next->applicants_.erase(std::string(applicant_id)) == 0) {
    throw Error(ErrorCode::kNotFound,
                "applicant '" + std::string(applicant_id) + "' not found");
  }
  Commit(std::move(next), kUsers);
}

ApplicantProfile Store::GetApplicant(std::string_view applicant_id) const {
  return Snapshot()->GetApplicant(applicant_id);
}

void Store::SaveJob(std::string_view applicant_id, std::string_view job_id) {
  std::lock_guard lock(write_mu_);
  auto next = CopyForWrite();
  next->GetJob(job_id);
  ApplicantProfile updated = next->GetApplicant(applicant_id);
  if (Contains(updated.saved_list, job_id)) return;
  updated.saved_list.emplace_back(job_id);
  const std::string key = updated.applicant_id;
  next->applicants_[key] = std::make_shared<ApplicantProfile>(std::move(updated));
  Commit(std::move(next), kUsers);
}

ApplicationResult Store::RecordApplication(std::string_view job_id,
                                           std::string_view applicant_id) {
  std::lock_guard lock(write_mu_);
  auto next = CopyForWrite();
  next->GetJob(job_id);
  ApplicantProfile updated = next->GetApplicant(applicant_id);

  ApplicationRecord& record = next->applications_[std::string(job_id)];
  record.job_id = std::string(job_id);
  const bool listed = std::any_of(
      record.applicants.begin(), record.applicants.end(),
      [&](const ApplicantStatus& a) { return a.applicant_id == applicant_id; });
  const bool in_apply_list = Contains(updated.apply_list, job_id);
  if (listed && in_apply_list) return {record, true};

  unsigned dirty = 0;
  if (!listed) {
    record.applicants.push_back(
        {std::string(applicant_id), ApplicationStatus::kApplied});
    dirty |= kApplications;
  }
  if (!in_apply_list) {
    updated.apply_list.emplace_back(job_id);
    const std::string key = updated.applicant_id;
    next->applicants_[key] = std::make_shared<ApplicantProfile>(std::move(updated));
    dirty |= kUsers;
  }
  ApplicationResult result{record, false};
  Commit(std::move(next), dirty);
  return result;
}

void Store::SetApplicationStatus(std::string_view job_id,
                                 std::string_view applicant_id,
                                 ApplicationStatus status) {
  std::lock_guard lock(write_mu_);
  auto next = CopyForWrite();
  auto it = next->applications_.find(std::string(job_id));
  if (it != next->applications_.end()) {
    for (auto& a : it->second.applicants) {
      if (a.applicant_id == applicant_id) {
        a.status = status;
        Commit(std::move(next), kApplications);
        return;
      }
    }
  }
  throw Error(ErrorCode::kNotFound, "applicant '" + std::string(applicant_id) +
                                        "' has not applied to job '" +
                                        std::string(job_id) + "'");
}

ApplicantList Store::ListApplicantsForJob(std::string_view job_id) const {
  auto snap = Snapshot();
  snap->GetJob(job_id);
  ApplicantList list;
  auto it = snap->applications().find(std::string(job_id));
  if (it == snap->applications().end()) return list;
  for (const auto& a : it->second.applicants) {
    if (snap->FindApplicant(a.applicant_id)) {
      list.applicant_ids.push_back(a.applicant_id);
    } else {
      list.dangling.push_back(a.applicant_id);
    }
  }
  return list;
}

std::string Store::NextJobId(std::string_view prefix) const {
  auto snap = Snapshot();
  std::uint64_t next = 1;
  for (const auto& [id, job] : snap->jobs()) {
    if (!id.starts_with(prefix)) continue;
    std::string_view rest = std::string_view(id).substr(prefix.size());
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) {
          return c >= '0' && c <= '9';
        })) {
      continue;
    }
    next = std::max<std::uint64_t>(next, std::stoull(std::string(rest)) + 1);
  }
  return std::string(prefix) + std::to_string(next);
}

}  // namespace jobham
