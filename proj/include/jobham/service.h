#ifndef JOBHAM_SERVICE_H_
#define JOBHAM_SERVICE_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jobham/engine.h"
#include "jobham/records.h"

namespace jobham {

struct ApiResponse {
  int http_status = 200;
  Json body;
};

// Splits a comma-separated id path segment. Throws Error(kMalformedRequest)
// for an empty segment or an empty element.
std::vector<std::string> ParseIdList(std::string_view segment);

// Ranked entries keyed by entity id, in rank order.
Json RankedPayload(const RankedResult& result);

// Builds the JSON bodies of the HTTP endpoints. Every body has the shape
// {"status": "ok"|"error", "payload"|"error": ..., "diagnostics": [...]}.
class ApiHandler {
 public:
  explicit ApiHandler(Engine& engine) : engine_(engine) {}

  ApiResponse JobMatchCv(std::string_view job_id,
                         std::string_view applicant_ids) const;
  ApiResponse CvMatchJob(std::string_view applicant_id,
                         std::string_view job_ids) const;
  ApiResponse WordCloud(std::string_view job_id) const;
  ApiResponse Job2Skill(std::string_view job_id) const;

  // Ingestion extension: job record JSON body / plain resume text body.
  ApiResponse PutJob(std::string_view job_id, std::string_view body) const;
  ApiResponse PutResume(std::string_view applicant_id,
                        std::string_view body) const;

 private:
  Engine& engine_;
};

// HTTP/1.1 front end for ApiHandler.
class HttpService {
 public:
  explicit HttpService(Engine& engine, int threads = 32);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Blocks until Stop().
  bool Listen(const std::string& host, int port);
  // Returns the bound port, or -1.
  int BindToAnyPort(const std::string& host);
  bool ListenAfterBind();
  void WaitUntilReady() const;
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace jobham

#endif  // JOBHAM_SERVICE_H_
