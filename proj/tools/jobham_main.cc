// Operator CLI for the job/candidate matching engine.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jobham/engine.h"
#include "jobham/error.h"
#include "jobham/eval.h"
#include "jobham/extract.h"
#include "jobham/records.h"
#include "jobham/service.h"
#include "jobham/stats.h"
#include "jobham/store.h"
#include "jobham/textprep.h"

namespace {

using namespace jobham;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string data_dir = "jobham-data";
  std::string lexicon;
  std::string vocab;
  std::string stopwords;
  std::string titles;
  std::string institutions;
  std::string mode = "smooth";
  std::string corpus = "corpus";
};

std::string ReadWholeFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kStorageIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string FormatScore(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string JoinComma(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ',';
    out += s;
  }
  return out;
}

class Context {
 public:
  explicit Context(const GlobalOptions& opts) : opts_(opts) {}

  Store& store() {
    if (!store_) store_ = std::make_unique<Store>(opts_.data_dir);
    return *store_;
  }

  Engine& engine() {
    if (engine_) return *engine_;
    if (opts_.lexicon.empty()) {
      throw UsageError("a skill lexicon is required (--lexicon or JOBHAM_LEXICON)");
    }
    auto extractor = std::make_shared<RuleExtractor>(
        SkillLexicon::Load(opts_.lexicon),
        opts_.titles.empty() ? PhraseList() : PhraseList::Load(opts_.titles),
        opts_.institutions.empty() ? PhraseList()
                                   : PhraseList::Load(opts_.institutions));
    EngineOptions options;
    options.mode = ParseTfidfMode(opts_.mode);
    options.corpus = ParseCorpusScope(opts_.corpus);
    StopwordSet stopwords;
    if (!opts_.stopwords.empty()) stopwords = LoadStopwords(opts_.stopwords);
    engine_ = std::make_unique<Engine>(store(), std::move(extractor),
                                       std::move(stopwords), options);
    return *engine_;
  }

  Vocabulary vocab() {
    if (opts_.vocab.empty()) {
      throw UsageError("a vocabulary is required (--vocab or JOBHAM_VOCAB)");
    }
    return Vocabulary::Load(opts_.vocab);
  }

 private:
  const GlobalOptions& opts_;
  std::unique_ptr<Store> store_;
  std::unique_ptr<Engine> engine_;
};

void PrintRanking(const RankedResult& result) {
  std::size_t rank = 0;
  for (const RankedEntry& e : result.entries) {
    std::cout << ++rank << '\t' << e.entity_id << '\t' << FormatScore(e.score)
              << '\t' << JoinComma(e.match_list) << '\n';
    for (const auto& d : e.diagnostics) {
      std::cerr << "warning: " << e.entity_id << ": " << d << '\n';
    }
  }
  for (const auto& d : result.diagnostics) std::cerr << "warning: " << d << '\n';
}

int IngestJobs(Context& ctx, const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::kStorageIo, "cannot open " + file);
  Engine& engine = ctx.engine();
  std::string next_id = engine.store().NextJobId();
  std::size_t counter = std::stoull(next_id.substr(4));

  std::vector<JobPosting> jobs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      JobPosting job = JobFromJson(Json::parse(line));
      if (job.job_id.empty()) job.job_id = "job-" + std::to_string(counter++);
      ValidateJob(job);
      jobs.push_back(std::move(job));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParseError,
                  file + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(e.code(), file + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  const std::size_t n = jobs.size();
  engine.IngestJobs(std::move(jobs));
  std::cout << "ingested " << n << " job(s)\n";
  return 0;
}

std::vector<std::string> AllJobIds(const StoreSnapshot& snap) {
  std::vector<std::string> ids;
  for (const auto& [id, job] : snap.jobs()) ids.push_back(id);
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jobham: skill extraction, TF-IDF scoring and job/candidate ranking"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--data-dir", opts.data_dir, "Directory holding the collection files")
      ->envname("JOBHAM_DATA_DIR");
  app.add_option("--lexicon", opts.lexicon, "Skill lexicon (canonical<TAB>aliases)")
      ->envname("JOBHAM_LEXICON");
  app.add_option("--vocab", opts.vocab, "WordPiece vocabulary, one token per line")
      ->envname("JOBHAM_VOCAB");
  app.add_option("--stopwords", opts.stopwords, "Stopword list, one per line")
      ->envname("JOBHAM_STOPWORDS");
  app.add_option("--titles", opts.titles, "Job title list for designation extraction");
  app.add_option("--institutions", opts.institutions,
                 "Institution list for college extraction");
  app.add_option("--mode", opts.mode, "TF-IDF mode")
      ->check(CLI::IsMember({"naive", "smooth"}));
  app.add_option("--corpus", opts.corpus, "TF-IDF corpus scope")
      ->check(CLI::IsMember({"corpus", "single-doc-sentences"}));

  std::string file, id, other_id, run_file, qrels_file, host = "127.0.0.1";
  int port = 8080;
  std::size_t k = 10, max_len = kJobMaxLen;
  bool all = false;

  auto* ingest_jobs = app.add_subcommand("ingest-jobs", "Load job records (JSON lines)");
  ingest_jobs->add_option("file", file)->required();

  auto* ingest_resume = app.add_subcommand("ingest-resume",
                                           "Store resume text for an applicant");
  ingest_resume->add_option("applicant_id", id)->required();
  ingest_resume->add_option("file", file)->required();

  auto* apply = app.add_subcommand("apply", "Record an application");
  apply->add_option("applicant_id", id)->required();
  apply->add_option("job_id", other_id)->required();

  auto* rank_applicants = app.add_subcommand("rank-applicants",
                                             "Rank the applicants of a job");
  rank_applicants->add_option("job_id", id)->required();
  rank_applicants->add_flag("--all", all, "Rank every stored applicant");

  auto* recommend = app.add_subcommand("recommend", "Rank all jobs for an applicant");
  recommend->add_option("applicant_id", id)->required();

  auto* job2skill = app.add_subcommand("job2skill", "Scored skills of a job (top 20)");
  job2skill->add_option("job_id", id)->required();

  auto* wordcloud = app.add_subcommand("wordcloud", "Word frequencies of a job (top 100)");
  wordcloud->add_option("job_id", id)->required();

  auto* tfidf = app.add_subcommand("tfidf", "TF-IDF term scores of a job");
  tfidf->add_option("--doc", id, "Job id")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a run file against relevance judgments");
  eval->add_option("run", run_file)->required();
  eval->add_option("qrels", qrels_file)->required();
  eval->add_option("--k", k, "Cutoff for nDCG/P/R/F1")->check(CLI::PositiveNumber);

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--port", port)->envname("JOBHAM_PORT");
  serve->add_option("--host", host);

  auto* parse_resume = app.add_subcommand("parse-resume", "Print the extracted resume profile");
  parse_resume->add_option("file", file)->required();

  auto* encode = app.add_subcommand("encode", "WordPiece-encode a text file");
  encode->add_option("file", file)->required();
  encode->add_option("--max-len", max_len)->check(CLI::Range(2, 1 << 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  Context ctx(opts);
  try {
    if (*ingest_jobs) return IngestJobs(ctx, file);

    if (*ingest_resume) {
      ApplicantProfile a = ctx.engine().IngestResume(id, ReadWholeFile(file));
      std::cout << "stored resume for " << a.applicant_id << " ("
                << a.resume_profile->skills.size() << " skill(s))\n";
      return 0;
    }

    if (*apply) {
      ApplicationResult r = ctx.store().RecordApplication(other_id, id);
      if (r.duplicate) {
        std::cerr << "warning: " << id << " already applied to " << other_id << '\n';
      } else {
        std::cout << id << " applied to " << other_id << '\n';
      }
      return 0;
    }

    if (*rank_applicants) {
      Engine& engine = ctx.engine();
      std::vector<std::string> ids;
      if (all) {
        for (const auto& [aid, a] : engine.store().Snapshot()->applicants()) {
          ids.push_back(aid);
        }
      } else {
        ApplicantList list = engine.store().ListApplicantsForJob(id);
        for (const auto& d : list.dangling) {
          std::cerr << "warning: dangling applicant id " << d << " skipped\n";
        }
        ids = std::move(list.applicant_ids);
      }
      PrintRanking(engine.RankApplicants(id, ids));
      return 0;
    }

    if (*recommend) {
      Engine& engine = ctx.engine();
      PrintRanking(engine.RankJobs(id, AllJobIds(*engine.store().Snapshot())));
      return 0;
    }

    if (*job2skill) {
      std::size_t rank = 0;
      for (const ScoredSkill& s : ctx.engine().JobSkills(id)) {
        std::cout << ++rank << '\t' << s.skill << '\t' << FormatScore(s.score)
                  << '\t' << FormatScore(s.ratio) << '\t' << s.match << '\n';
      }
      return 0;
    }

    if (*wordcloud) {
      if (opts.stopwords.empty()) {
        std::cerr << "warning: no stopword list given; counting every word\n";
      }
      for (const WordCount& w : ctx.engine().WordCloud(id)) {
        std::cout << w.token << '\t' << w.count << '\n';
      }
      return 0;
    }

    if (*tfidf) {
      for (const TermScore& t : ctx.engine().TermScores(id)) {
        std::cout << t.term << '\t' << FormatScore(t.score) << '\n';
      }
      return 0;
    }

    if (*eval) {
      EvalReport report = Evaluate(ParseRun(ReadWholeFile(run_file)),
                                   ParseQrels(ReadWholeFile(qrels_file)), k);
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
      PrintReport(report, std::cout);
      return 0;
    }

    if (*parse_resume) {
      ResumeProfile p = ctx.engine().extractor().Resume(ReadWholeFile(file));
      std::cout << ToJson(p).dump(2) << '\n';
      return 0;
    }

    if (*encode) {
      Vocabulary vocab = ctx.vocab();
      std::vector<std::string> tokens =
          WordpieceTokenize(NormalizeText(ReadWholeFile(file)), vocab);
      EncodedSequence seq = Encode(tokens, max_len, vocab);
      Json out;
      out["token_count"] = seq.token_count;
      out["input_ids"] = seq.input_ids;
      out["segment_ids"] = seq.segment_ids;
      out["attention_mask"] = seq.attention_mask;
      std::cout << out.dump() << '\n';
      return 0;
    }

    if (*serve) {
      Engine& engine = ctx.engine();
      if (!opts.vocab.empty()) {
        std::cerr << "vocabulary: " << ctx.vocab().size() << " tokens\n";
      }
      HttpService service(engine);
      std::cerr << "listening on " << host << ':' << port << '\n';
      if (!service.Listen(host, port)) {
        std::cerr << "error: cannot listen on " << host << ':' << port << '\n';
        return 1;
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsageError;
}
