#ifndef JOBHAM_RECORDS_H_
#define JOBHAM_RECORDS_H_

#include <string_view>

#include "json.hpp"
#include "jobham/extract.h"
#include "jobham/ranker.h"
#include "jobham/store.h"

// JSON encoding of stored records and ranking results. Field order is fixed
// so equal values always serialize to equal bytes.
namespace jobham {

using Json = nlohmann::ordered_json;

std::string_view JobTypeName(JobType type);
JobType ParseJobType(std::string_view name);
std::string_view StatusName(ApplicationStatus status);
ApplicationStatus ParseStatus(std::string_view name);

Json ToJson(const ResumeProfile& profile);
Json ToJson(const JobPosting& job);
Json ToJson(const ApplicantProfile& applicant);
Json ToJson(const ApplicationRecord& record);
Json ToJson(const ScoredSkill& skill);

// Throw Error(kParseError) on missing or mistyped fields.
ResumeProfile ResumeProfileFromJson(const Json& j);
JobPosting JobFromJson(const Json& j);
ApplicantProfile ApplicantFromJson(const Json& j);
ApplicationRecord ApplicationFromJson(const Json& j);

}  // namespace jobham

#endif  // JOBHAM_RECORDS_H_
