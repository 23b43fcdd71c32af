#include "jobham/records.h"

#include "jobham/error.h"

namespace jobham {
namespace {

std::string StringField(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_string()) {
    throw Error(ErrorCode::kParseError,
                std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::optional<std::string> OptionalString(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return StringField(j, key);
}

std::vector<std::string> StringList(const Json& j, const char* key) {
  std::vector<std::string> out;
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw Error(ErrorCode::kParseError,
                std::string("field '") + key + "' must be an array");
  }
  for (const auto& v : *it) {
    if (!v.is_string()) {
      throw Error(ErrorCode::kParseError,
                  std::string("field '") + key + "' must hold strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

Json OptionalToJson(const std::optional<std::string>& v) {
  return v ? Json(*v) : Json(nullptr);
}

void RequireObject(const Json& j, const char* what) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kParseError, std::string(what) + " must be an object");
  }
}

}  // namespace

std::string_view JobTypeName(JobType type) {
  return type == JobType::kFullTime ? "full_time" : "part_time";
}

JobType ParseJobType(std::string_view name) {
  if (name == "full_time" || name.empty()) return JobType::kFullTime;
  if (name == "part_time") return JobType::kPartTime;
  throw Error(ErrorCode::kInvalidField,
              "job_type must be full_time or part_time, got '" +
                  std::string(name) + "'");
}

std::string_view StatusName(ApplicationStatus status) {
  switch (status) {
    case ApplicationStatus::kApplied: return "applied";
    case ApplicationStatus::kInterview: return "interview";
    case ApplicationStatus::kOffer: return "offer";
    case ApplicationStatus::kRejected: return "rejected";
  }
  return "applied";
}

ApplicationStatus ParseStatus(std::string_view name) {
  if (name == "applied") return ApplicationStatus::kApplied;
  if (name == "interview") return ApplicationStatus::kInterview;
  if (name == "offer") return ApplicationStatus::kOffer;
  if (name == "rejected") return ApplicationStatus::kRejected;
  throw Error(ErrorCode::kInvalidField,
              "unknown application status '" + std::string(name) + "'");
}

Json ToJson(const ResumeProfile& profile) {
  Json j;
  j["name"] = OptionalToJson(profile.name);
  j["email"] = OptionalToJson(profile.email);
  j["designation"] = OptionalToJson(profile.designation);
  j["college_name"] = OptionalToJson(profile.college_name);
  j["years_experience"] = profile.years_experience
                              ? Json(*profile.years_experience)
                              : Json(nullptr);
  j["skills"] = profile.skills;
  return j;
}

Json ToJson(const JobPosting& job) {
  Json j;
  j["job_id"] = job.job_id;
  j["title"] = job.title;
  j["company"] = job.company;
  j["location"] = job.location;
  j["job_type"] = JobTypeName(job.job_type);
  j["description"] = job.description;
  j["salary"] = job.salary;
  j["deadline"] = job.deadline;
  j["skills"] = job.skills;
  return j;
}

Json ToJson(const ApplicantProfile& applicant) {
  Json j;
  j["applicant_id"] = applicant.applicant_id;
  j["name"] = applicant.name;
  j["email"] = applicant.email;
  j["resume_text"] = applicant.resume_text;
  j["resume_profile"] = applicant.resume_profile
                            ? ToJson(*applicant.resume_profile)
                            : Json(nullptr);
  j["apply_list"] = applicant.apply_list;
  j["saved_list"] = applicant.saved_list;
  return j;
}

Json ToJson(const ApplicationRecord& record) {
  Json j;
  j["job_id"] = record.job_id;
  Json list = Json::array();
  for (const auto& a : record.applicants) {
    Json e;
    e["applicant_id"] = a.applicant_id;
    e["status"] = StatusName(a.status);
    list.push_back(std::move(e));
  }
  j["applicants"] = std::move(list);
  return j;
}

Json ToJson(const ScoredSkill& skill) {
  Json j;
  j["skill"] = skill.skill;
  j["score"] = skill.score;
  j["ratio"] = skill.ratio;
  j["match"] = skill.match;
  return j;
}

ResumeProfile ResumeProfileFromJson(const Json& j) {
  RequireObject(j, "resume_profile");
  ResumeProfile p;
  p.name = OptionalString(j, "name");
  p.email = OptionalString(j, "email");
  p.designation = OptionalString(j, "designation");
  p.college_name = OptionalString(j, "college_name");
  if (auto it = j.find("years_experience"); it != j.end() && !it->is_null()) {
    if (!it->is_number()) {
      throw Error(ErrorCode::kParseError, "years_experience must be a number");
    }
    p.years_experience = it->get<double>();
  }
  p.skills = StringList(j, "skills");
  return p;
}

JobPosting JobFromJson(const Json& j) {
  RequireObject(j, "job record");
  JobPosting job;
  job.job_id = StringField(j, "job_id");
  job.title = StringField(j, "title");
  job.company = StringField(j, "company");
  job.location = StringField(j, "location");
  job.job_type = ParseJobType(StringField(j, "job_type"));
  job.description = StringField(j, "description");
  job.salary = StringField(j, "salary");
  job.deadline = StringField(j, "deadline");
  job.skills = StringList(j, "skills");
  return job;
}

ApplicantProfile ApplicantFromJson(const Json& j) {
  RequireObject(j, "user record");
  ApplicantProfile a;
  a.applicant_id = StringField(j, "applicant_id");
  a.name = StringField(j, "name");
  a.email = StringField(j, "email");
  a.resume_text = StringField(j, "resume_text");
  if (auto it = j.find("resume_profile"); it != j.end() && !it->is_null()) {
    a.resume_profile = ResumeProfileFromJson(*it);
  }
  a.apply_list = StringList(j, "apply_list");
  a.saved_list = StringList(j, "saved_list");
  return a;
}

ApplicationRecord ApplicationFromJson(const Json& j) {
  RequireObject(j, "application record");
  ApplicationRecord r;
  r.job_id = StringField(j, "job_id");
  auto it = j.find("applicants");
  if (it != j.end() && !it->is_null()) {
    if (!it->is_array()) {
      throw Error(ErrorCode::kParseError, "applicants must be an array");
    }
    for (const auto& e : *it) {
      RequireObject(e, "applicant entry");
      r.applicants.push_back(
          {StringField(e, "applicant_id"), ParseStatus(StringField(e, "status"))});
    }
  }
  return r;
}

}  // namespace jobham
