#include "jobham/error.h"

namespace jobham {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidField: return "invalid_field";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kStorageIo: return "storage_io";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kDuplicateApplication: return "duplicate_application";
    case ErrorCode::kParseError: return "parse_error";
    case ErrorCode::kDuplicateAlias: return "duplicate_alias";
    case ErrorCode::kEmptyVocabulary: return "empty_vocabulary";
    case ErrorCode::kEmptyCorpus: return "empty_corpus";
    case ErrorCode::kDuplicateDocId: return "duplicate_doc_id";
    case ErrorCode::kUnknownDoc: return "unknown_doc";
    case ErrorCode::kEmptyJobSkills: return "empty_job_skills";
    case ErrorCode::kEmptyRelevant: return "empty_relevant";
    case ErrorCode::kMalformedRequest: return "malformed_request";
  }
  return "unknown";
}

}  // namespace jobham
