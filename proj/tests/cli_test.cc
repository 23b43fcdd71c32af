#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "test_util.h"

namespace {

struct Result {
  int exit_code = -1;
  std::string out;  // stdout and stderr interleaved
};

Result Exec(const std::string& args) {
  const std::string cmd = std::string(JOBHAM_CLI_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  std::string Jobham(const std::string& args) {
    return "--data-dir " + dir_.path().string() + " --lexicon " + Data("skills.tsv") +
           " --stopwords " + Data("stopwords.txt") + " " + args;
  }
  static std::string Data(const std::string& name) {
    return std::string(JOBHAM_DATA_PATH) + "/" + name;
  }

  void LoadDemo() {
    ASSERT_EQ(Exec(Jobham("ingest-jobs " + Data("demo/jobs.jsonl"))).exit_code, 0);
    for (const char* who : {"alice", "bob", "carol"}) {
      ASSERT_EQ(Exec(Jobham(std::string("ingest-resume ") + who + " " +
                           Data(std::string("demo/") + who + ".txt")))
                    .exit_code,
                0);
    }
  }

  jobham::testing::TempDir dir_;
};

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Exec("").exit_code, 2);
  EXPECT_EQ(Exec("no-such-command").exit_code, 2);
  EXPECT_EQ(Exec(Jobham("rank-applicants")).exit_code, 2);
  EXPECT_EQ(Exec(Jobham("--mode fancy tfidf --doc x")).exit_code, 2);
  EXPECT_EQ(Exec("--help").exit_code, 0);
}

TEST_F(CliTest, MissingJobIsAnError) {
  Result r = Exec(Jobham("job2skill nope"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("nope"), std::string::npos);
}

TEST_F(CliTest, RankApplicantsIsDeterministic) {
  LoadDemo();
  ASSERT_EQ(Exec(Jobham("apply alice job-1")).exit_code, 0);
  ASSERT_EQ(Exec(Jobham("apply bob job-1")).exit_code, 0);
  Result dup = Exec(Jobham("apply bob job-1"));
  EXPECT_EQ(dup.exit_code, 0);
  EXPECT_NE(dup.out.find("already applied"), std::string::npos);

  Result first = Exec(Jobham("rank-applicants job-1"));
  ASSERT_EQ(first.exit_code, 0) << first.out;
  EXPECT_EQ(first.out.rfind("1\t", 0), 0u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(Exec(Jobham("rank-applicants job-1")).out, first.out);
  Result everyone = Exec(Jobham("rank-applicants --all job-1"));
  EXPECT_NE(everyone.out.find("carol"), std::string::npos);
}

TEST_F(CliTest, RecommendWithoutResumeWarns) {
  LoadDemo();
  std::ofstream(dir_.path() / "user.jsonl", std::ios::app)
      << R"({"applicant_id":"dave","name":"Dave","email":"d@example.com","resume_text":"","apply_list":[],"saved_list":[]})"
      << "\n";
  Result r = Exec(Jobham("recommend dave"));
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("warning"), std::string::npos);
}

TEST_F(CliTest, Job2SkillWordcloudAndTfidf) {
  LoadDemo();
  Result skills = Exec(Jobham("job2skill job-1"));
  ASSERT_EQ(skills.exit_code, 0) << skills.out;
  EXPECT_FALSE(skills.out.empty());
  Result words = Exec(Jobham("wordcloud job-1"));
  ASSERT_EQ(words.exit_code, 0);
  EXPECT_EQ(words.out.find("the\t"), std::string::npos);
  EXPECT_EQ(Exec(Jobham("--mode naive tfidf --doc job-2")).exit_code, 0);
  EXPECT_EQ(Exec(Jobham("--corpus single-doc-sentences tfidf --doc job-2")).exit_code, 0);
}

TEST_F(CliTest, EvalPrintsTable) {
  std::ofstream(dir_.path() / "run.tsv") << "q1\ta,b,c,d,e\n";
  std::ofstream(dir_.path() / "qrels.tsv") << "q1\te\t1\n";
  Result r = Exec("eval " + (dir_.path() / "run.tsv").string() + " " +
                 (dir_.path() / "qrels.tsv").string() + " --k 5");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("all\t0.2000"), std::string::npos) << r.out;
}

TEST_F(CliTest, EncodeNeedsVocabulary) {
  std::ofstream(dir_.path() / "t.txt") << "python developer";
  const std::string file = (dir_.path() / "t.txt").string();
  EXPECT_EQ(Exec("encode " + file).exit_code, 2);
  Result r = Exec("--vocab " + Data("vocab.txt") + " encode --max-len 8 " + file);
  EXPECT_EQ(r.exit_code, 0) << r.out;
}

}  // namespace
