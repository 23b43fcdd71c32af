#ifndef JOBHAM_ERROR_H_
#define JOBHAM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace jobham {

enum class ErrorCode {
  kInvalidField,
  kInvalidArgument,
  kStorageIo,
  kNotFound,
  kDuplicateApplication,
  kParseError,
  kDuplicateAlias,
  kEmptyVocabulary,
  kEmptyCorpus,
  kDuplicateDocId,
  kUnknownDoc,
  kEmptyJobSkills,
  kEmptyRelevant,
  kMalformedRequest,
};

// Stable machine-readable name, used in API error bodies.
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jobham

#endif  // JOBHAM_ERROR_H_
