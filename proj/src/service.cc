#include "jobham/service.h"

#include "httplib.h"
#include "jobham/error.h"

namespace jobham {
namespace {

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
    case ErrorCode::kUnknownDoc:
      return 404;
    case ErrorCode::kMalformedRequest:
    case ErrorCode::kInvalidField:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kParseError:
      return 400;
    default:
      return 500;
  }
}

ApiResponse Ok(Json payload, std::vector<std::string> diagnostics = {}) {
  ApiResponse r;
  r.body["status"] = "ok";
  r.body["payload"] = std::move(payload);
  r.body["diagnostics"] = std::move(diagnostics);
  return r;
}

ApiResponse Fail(const Error& e) {
  ApiResponse r;
  r.http_status = HttpStatusFor(e.code());
  r.body["status"] = "error";
  r.body["error"] = {{"code", ErrorCodeName(e.code())}, {"message", e.what()}};
  r.body["diagnostics"] = Json::array();
  return r;
}

template <typename Fn>
ApiResponse Guard(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return Fail(e);
  } catch (const std::exception& e) {
    return Fail(Error(ErrorCode::kStorageIo, e.what()));
  }
}

std::vector<std::string> CollectDiagnostics(const RankedResult& result) {
  std::vector<std::string> out = result.diagnostics;
  for (const auto& e : result.entries) {
    for (const auto& d : e.diagnostics) out.push_back(e.entity_id + ": " + d);
  }
  return out;
}

}  // namespace

std::vector<std::string> ParseIdList(std::string_view segment) {
  if (segment.empty()) {
    throw Error(ErrorCode::kMalformedRequest, "id list is empty");
  }
  std::vector<std::string> ids;
  std::size_t start = 0;
  while (start <= segment.size()) {
    std::size_t comma = segment.find(',', start);
    if (comma == std::string_view::npos) comma = segment.size();
    std::string_view id = segment.substr(start, comma - start);
    if (id.empty()) {
      throw Error(ErrorCode::kMalformedRequest,
                  "id list '" + std::string(segment) + "' has an empty element");
    }
    ids.emplace_back(id);
    start = comma + 1;
  }
  return ids;
}

Json RankedPayload(const RankedResult& result) {
  Json payload = Json::object();
  std::size_t rank = 0;
  for (const RankedEntry& e : result.entries) {
    payload[e.entity_id] = {{"rank", ++rank},
                            {"score", e.score},
                            {"match_ratio", e.match_ratio},
                            {"match_list", e.match_list}};
  }
  return payload;
}

ApiResponse ApiHandler::JobMatchCv(std::string_view job_id,
                                   std::string_view applicant_ids) const {
  return Guard([&] {
    const std::vector<std::string> ids = ParseIdList(applicant_ids);
    RankedResult result = engine_.RankApplicants(job_id, ids);
    return Ok(RankedPayload(result), CollectDiagnostics(result));
  });
}

ApiResponse ApiHandler::CvMatchJob(std::string_view applicant_id,
                                   std::string_view job_ids) const {
  return Guard([&] {
    const std::vector<std::string> ids = ParseIdList(job_ids);
    RankedResult result = engine_.RankJobs(applicant_id, ids);
    return Ok(RankedPayload(result), CollectDiagnostics(result));
  });
}

ApiResponse ApiHandler::WordCloud(std::string_view job_id) const {
  return Guard([&] {
    Json list = Json::array();
    for (const WordCount& w : engine_.WordCloud(job_id)) {
      list.push_back({{"token", w.token}, {"count", w.count}});
    }
    return Ok(std::move(list));
  });
}

ApiResponse ApiHandler::Job2Skill(std::string_view job_id) const {
  return Guard([&] {
    Json list = Json::array();
    for (const ScoredSkill& s : engine_.JobSkills(job_id)) {
      list.push_back(ToJson(s));
    }
    return Ok(std::move(list));
  });
}

ApiResponse ApiHandler::PutJob(std::string_view job_id,
                               std::string_view body) const {
  return Guard([&] {
    Json parsed;
    try {
      parsed = Json::parse(body);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
    JobPosting job = JobFromJson(parsed);
    if (job.job_id.empty()) job.job_id = std::string(job_id);
    if (job.job_id != job_id) {
      throw Error(ErrorCode::kInvalidField,
                  "body job_id '" + job.job_id + "' does not match path");
    }
    engine_.IngestJob(std::move(job));
    return Ok(ToJson(engine_.store().GetJob(job_id)));
  });
}

ApiResponse ApiHandler::PutResume(std::string_view applicant_id,
                                  std::string_view body) const {
  return Guard([&] {
    ApplicantProfile a = engine_.IngestResume(applicant_id, std::string(body));
    return Ok(a.resume_profile ? ToJson(*a.resume_profile) : Json(nullptr));
  });
}

struct HttpService::Impl {
  Impl(Engine& engine, int threads) : handler(engine) {
    server.new_task_queue = [threads] {
      return new httplib::ThreadPool(static_cast<std::size_t>(threads));
    };
    auto send = [](httplib::Response& res, const ApiResponse& api) {
      res.status = api.http_status;
      res.set_content(api.body.dump(), "application/json");
    };
    auto malformed = [send](const httplib::Request&, httplib::Response& res) {
      send(res, Fail(Error(ErrorCode::kMalformedRequest,
                           "expected /<Endpoint>/<id>/<comma-separated ids>")));
    };

    server.Get(R"(/JobMatchCV/([^/]+)/([^/]*))",
               [this, send](const httplib::Request& req, httplib::Response& res) {
                 send(res, handler.JobMatchCv(req.matches[1].str(),
                                              req.matches[2].str()));
               });
    server.Get(R"(/CVMATCHJOB/([^/]+)/([^/]*))",
               [this, send](const httplib::Request& req, httplib::Response& res) {
                 send(res, handler.CvMatchJob(req.matches[1].str(),
                                              req.matches[2].str()));
               });
    server.Get(R"(/JobMatchCV/([^/]*))", malformed);
    server.Get(R"(/CVMATCHJOB/([^/]*))", malformed);
    server.Get(R"(/WordCloud/([^/]+))",
               [this, send](const httplib::Request& req, httplib::Response& res) {
                 send(res, handler.WordCloud(req.matches[1].str()));
               });
    server.Get(R"(/Job2Skill/([^/]+))",
               [this, send](const httplib::Request& req, httplib::Response& res) {
                 send(res, handler.Job2Skill(req.matches[1].str()));
               });
    server.Put(R"(/job/([^/]+))",
               [this, send](const httplib::Request& req, httplib::Response& res) {
                 send(res, handler.PutJob(req.matches[1].str(), req.body));
               });
    server.Put(R"(/resume/([^/]+))",
               [this, send](const httplib::Request& req, httplib::Response& res) {
                 send(res, handler.PutResume(req.matches[1].str(), req.body));
               });
  }

  ApiHandler handler;
  httplib::Server server;
};

HttpService::HttpService(Engine& engine, int threads)
    : impl_(std::make_unique<Impl>(engine, threads)) {}

HttpService::~HttpService() { Stop(); }

bool HttpService::Listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int HttpService::BindToAnyPort(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpService::ListenAfterBind() { return impl_->server.listen_after_bind(); }

void HttpService::WaitUntilReady() const { impl_->server.wait_until_ready(); }

void HttpService::Stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace jobham
