#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "jobham/error.h"
#include "jobham/matcher.h"
#include "jobham/ranker.h"
#include "jobham/records.h"
#include "jobham/service.h"
#include "jobham/textprep.h"
#include "oracles.h"
#include "test_util.h"

namespace jobham {
namespace {

using testing::MakeApplicant;
using testing::MakeJob;
using testing::TempDir;

TEST(ScoreJobSkillsTest, RatioCountsTheWholeSkillString) {
  std::vector<TermScore> terms{{"python", 0.4}};
  std::vector<std::string> skills{"python programming"};
  auto scored = ScoreJobSkills(terms, skills);
  ASSERT_EQ(scored.size(), 1u);
  EXPECT_NEAR(scored[0].ratio, 6.0 / 18.0, 1e-15);
  EXPECT_DOUBLE_EQ(scored[0].score, 0.4);
  EXPECT_EQ(scored[0].match, "python");
}

TEST(ScoreJobSkillsTest, ExactTermSortsFirstAndSurvivesDedupe) {
  std::vector<TermScore> terms{{"sql", 0.3}, {"postgresql", 0.5}};
  std::vector<std::string> skills{"postgresql"};
  auto scored = ScoreJobSkills(terms, skills);
  ASSERT_EQ(scored.size(), 1u);
  EXPECT_EQ(scored[0].match, "postgresql");
  EXPECT_DOUBLE_EQ(scored[0].ratio, 1.0);
}

TEST(ScoreJobSkillsTest, HandTracedFilterSortDedupe) {
  std::vector<TermScore> terms{{"python", 0.4}, {"sql", 0.3}, {"post", 0.1}};
  std::vector<std::string> skills{"python programming", "postgresql"};
  auto scored = ScoreJobSkills(terms, skills);
  // Pairs: (postgresql, post, 4/10), (python programming, python, 6/18),
  // (postgresql, sql, 3/10); sorted by ratio then deduped on skill.
  std::vector<ScoredSkill> want{{"postgresql", 0.1, 4.0 / 10.0, "post"},
                                {"python programming", 0.4, 6.0 / 18.0, "python"}};
  EXPECT_EQ(scored, want);
}

TEST(ScoreJobSkillsTest, MatchingIgnoresCase) {
  std::vector<TermScore> terms{{"node", 0.2}};
  std::vector<std::string> skills{"Node.js"};
  auto scored = ScoreJobSkills(terms, skills);
  ASSERT_EQ(scored.size(), 1u);
  EXPECT_DOUBLE_EQ(scored[0].ratio, 4.0 / 7.0);
}

TEST(ScoreJobSkillsTest, EmptyInputs) {
  EXPECT_TRUE(ScoreJobSkills({}, std::vector<std::string>{"sql"}).empty());
  std::vector<TermScore> terms{{"sql", 0.3}};
  EXPECT_TRUE(ScoreJobSkills(terms, {}).empty());
}

TEST(ScoreJobSkillsTest, InvariantsOnRandomInputs) {
  const std::vector<std::string> vocab{"go", "sql", "java", "script", "post",
                                       "python", "data", "ml"};
  const std::vector<std::string> skill_pool{
      "golang", "postgresql", "javascript", "java", "python programming",
      "data analysis", "mysql", "html"};
  std::mt19937 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<TermScore> terms;
    for (const auto& t : vocab) {
      if (rng() % 2) terms.push_back({t, (rng() % 100) / 100.0});
    }
    std::vector<std::string> skills;
    for (const auto& s : skill_pool) {
      if (rng() % 2) skills.push_back(s);
    }
    auto scored = ScoreJobSkills(terms, skills);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < scored.size(); ++i) {
      const auto& s = scored[i];
      EXPECT_TRUE(seen.insert(s.skill).second);
      EXPECT_GT(s.ratio, 0.0);
      EXPECT_LE(s.ratio, 1.0);
      EXPECT_NE(oracle::Lower(s.skill).find(oracle::Lower(s.match)), std::string::npos);
      if (i > 0) EXPECT_GE(scored[i - 1].ratio, s.ratio);
    }
    // Each kept entry is the best-ratio term for its skill.
    std::map<std::string, double> term_map;
    for (const auto& t : terms) term_map[t.term] = t.score;
    auto best = oracle::BestTermPerSkill(term_map, skills);
    ASSERT_EQ(best.size(), scored.size());
    for (const auto& s : scored) {
      EXPECT_DOUBLE_EQ(best.at(s.skill).ratio, s.ratio);
      EXPECT_DOUBLE_EQ(best.at(s.skill).score, s.score);
    }
  }
}

TEST(MatchRatioTest, Arithmetic) {
  std::vector<std::string> job{"a", "b", "c", "d"};
  EXPECT_DOUBLE_EQ(MatchRatio(std::vector<std::string>{"a", "c"}, job), 50.0);
  EXPECT_DOUBLE_EQ(MatchRatio(job, job), 100.0);
  EXPECT_DOUBLE_EQ(MatchRatio({}, job), 0.0);
}

TEST(MatchRatioTest, EmptyJobSkillsAndNonSubset) {
  try {
    MatchRatio({}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyJobSkills);
  }
  std::vector<std::string> job{"a"};
  EXPECT_THROW(MatchRatio(std::vector<std::string>{"z"}, job), Error);
}

TEST(MatchScoreTest, HalfMatched) {
  std::vector<ScoredSkill> scored{{"java", 0.4, 1.0, "java"}, {"sql", 0.3, 1.0, "sql"}};
  std::vector<std::string> cv{"java"};
  MatchScore m = ComputeMatchScore(scored, cv);
  EXPECT_EQ(m.match_list, (std::vector<std::string>{"java"}));
  EXPECT_DOUBLE_EQ(m.match_ratio, 50.0);
  EXPECT_NEAR(m.score, 0.2, 1e-15);
}

TEST(MatchScoreTest, DisjointAndSaturated) {
  std::vector<ScoredSkill> scored{{"java", 0.4, 1.0, "java"}, {"sql", 0.3, 1.0, "sql"}};
  std::vector<std::string> none{"rust"};
  MatchScore m = ComputeMatchScore(scored, none);
  EXPECT_EQ(m.score, 0.0);
  EXPECT_TRUE(m.match_list.empty());

  std::vector<std::string> all{"SQL", "Java", "rust"};
  m = ComputeMatchScore(scored, all);
  EXPECT_NEAR(m.score, 0.7, 1e-15);
  EXPECT_DOUBLE_EQ(m.match_ratio, 100.0);
}

TEST(MatchScoreTest, NoScoredSkillsGivesDiagnostic) {
  std::vector<std::string> cv{"java"};
  MatchScore m = ComputeMatchScore({}, cv);
  EXPECT_EQ(m.score, 0.0);
  EXPECT_TRUE(m.diagnostic.has_value());
}

TEST(MatchScoreTest, AddingAMatchedSkillNeverLowersTheScore) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<ScoredSkill> scored;
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int i = 0; i < n; ++i) {
      scored.push_back({"s" + std::to_string(i), (rng() % 1000) / 1000.0, 1.0,
                        "s" + std::to_string(i)});
    }
    std::vector<std::string> cv;
    double prev = ComputeMatchScore(scored, cv).score;
    for (int i = 0; i < n; ++i) {
      cv.push_back("s" + std::to_string(i));
      double next = ComputeMatchScore(scored, cv).score;
      EXPECT_GE(next, prev);
      prev = next;
    }
  }
}

class MatcherTest : public ::testing::Test {
 protected:
  MatcherTest()
      : store_(dir_.path()),
        extractor_(SkillLexicon::Parse("java\nsql\ndocker\nrust\nkafka\nspark\n")) {}

  RankedResult RankApplicants(const std::string& job,
                              std::vector<std::string> ids) {
    auto snap = store_.Snapshot();
    Matcher m(*snap, extractor_, TermsFor(*snap));
    return m.RankApplicants(job, ids);
  }

  RankedResult RankJobs(const std::string& applicant, std::vector<std::string> ids) {
    auto snap = store_.Snapshot();
    Matcher m(*snap, extractor_, TermsFor(*snap));
    return m.RankJobs(applicant, ids);
  }

  static TermScoreSource TermsFor(const StoreSnapshot& snap) {
    std::vector<CorpusDoc> corpus;
    for (const auto& [id, job] : snap.jobs()) {
      corpus.push_back({id, NormalizeText(job->description)});
    }
    auto model = std::make_shared<TfidfModel>(TfidfModel::Fit(corpus));
    return [model](const JobPosting& job) { return model->TermScores(job.job_id); };
  }

  TempDir dir_;
  Store store_;
  RuleExtractor extractor_;
};

TEST_F(MatcherTest, NestedSubsetsRankBySubsetSize) {
  store_.UpsertJob(MakeJob("j", "java sql docker and more words"));
  store_.UpsertJob(MakeJob("other", "rust kafka"));
  store_.UpsertApplicant(MakeApplicant("c3", "java sql docker"));
  store_.UpsertApplicant(MakeApplicant("c2", "java sql"));
  store_.UpsertApplicant(MakeApplicant("c1", "java"));
  RankedResult r = RankApplicants("j", {"c1", "c2", "c3"});
  ASSERT_EQ(r.entries.size(), 3u);
  EXPECT_EQ(r.entries[0].entity_id, "c3");
  EXPECT_EQ(r.entries[1].entity_id, "c2");
  EXPECT_EQ(r.entries[2].entity_id, "c1");
  EXPECT_GT(r.entries[0].score, r.entries[1].score);
  EXPECT_GT(r.entries[1].score, r.entries[2].score);
}

TEST_F(MatcherTest, IdenticalResumesTieByIdAndDuplicatesCollapse) {
  store_.UpsertJob(MakeJob("j", "java sql"));
  store_.UpsertApplicant(MakeApplicant("b", "java"));
  store_.UpsertApplicant(MakeApplicant("a", "java"));
  RankedResult r = RankApplicants("j", {"b", "a", "b"});
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[0].entity_id, "a");
  EXPECT_EQ(r.entries[1].entity_id, "b");
  EXPECT_EQ(r.entries[0].score, r.entries[1].score);
}

TEST_F(MatcherTest, EmptyListUnknownJobAndMissingResume) {
  store_.UpsertJob(MakeJob("j", "java sql"));
  store_.UpsertApplicant(MakeApplicant("blank"));
  EXPECT_TRUE(RankApplicants("j", {}).entries.empty());
  try {
    RankApplicants("nope", {"blank"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
  RankedResult r = RankApplicants("j", {"blank", "ghost"});
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].score, 0.0);
  EXPECT_FALSE(r.entries[0].diagnostics.empty());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_NE(r.diagnostics[0].find("ghost"), std::string::npos);
}

TEST_F(MatcherTest, RankJobsFullMatchComesFirst) {
  store_.UpsertJob(MakeJob("full", "java sql docker"));
  store_.UpsertJob(MakeJob("partial", "java rust kafka spark"));
  store_.UpsertApplicant(MakeApplicant("me", "java sql docker"));
  RankedResult r = RankJobs("me", {"partial", "full"});
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[0].entity_id, "full");
  EXPECT_DOUBLE_EQ(r.entries[0].match_ratio, 100.0);
  EXPECT_DOUBLE_EQ(r.entries[1].match_ratio, 25.0);
  EXPECT_GT(r.entries[0].score, r.entries[1].score);
}

TEST_F(MatcherTest, RankJobsWithoutResume) {
  store_.UpsertJob(MakeJob("a", "java"));
  store_.UpsertJob(MakeJob("b", "sql"));
  store_.UpsertApplicant(MakeApplicant("me"));
  RankedResult r = RankJobs("me", {"a", "b"});
  ASSERT_EQ(r.entries.size(), 2u);
  for (const auto& e : r.entries) EXPECT_EQ(e.score, 0.0);
  EXPECT_FALSE(r.diagnostics.empty());
  EXPECT_THROW(RankJobs("ghost", {"a"}), Error);
}

TEST_F(MatcherTest, PermutationInvariantAndDeterministic) {
  const std::vector<std::string> pool{"java", "sql", "docker", "rust", "kafka", "spark"};
  std::mt19937 rng(17);
  for (int j = 0; j < 4; ++j) {
    std::string d;
    for (int w = 0; w < 6; ++w) d += pool[rng() % pool.size()] + " filler ";
    store_.UpsertJob(MakeJob("job" + std::to_string(j), d));
  }
  std::vector<std::string> ids;
  for (int c = 0; c < 8; ++c) {
    std::string cv;
    for (int w = 0; w < 3; ++w) cv += pool[rng() % pool.size()] + " ";
    ids.push_back("cv" + std::to_string(c));
    store_.UpsertApplicant(MakeApplicant(ids.back(), cv));
  }
  const std::string baseline = RankedPayload(RankApplicants("job0", ids)).dump();
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(ids.begin(), ids.end(), rng);
    EXPECT_EQ(RankedPayload(RankApplicants("job0", ids)).dump(), baseline);
  }
}

// Small random stores against a from-scratch recomputation of the scoring
// formulas (independent TF-IDF, filter and match score).
TEST_F(MatcherTest, MatchesBruteForceOracle) {
  const std::vector<std::string> lexicon{"java", "sql", "docker", "rust", "kafka",
                                         "spark"};
  const std::vector<std::string> words{"java", "sql", "docker", "rust", "kafka",
                                       "spark", "team", "build", "javas"};
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    TempDir dir;
    Store store(dir.path());
    const int n_jobs = std::uniform_int_distribution<int>(1, 4)(rng);
    const int n_cvs = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<std::string> job_texts, job_ids, cv_ids;
    for (int j = 0; j < n_jobs; ++j) {
      std::string d;
      for (int w = std::uniform_int_distribution<int>(1, 10)(rng); w > 0; --w) {
        d += words[rng() % words.size()] + " ";
      }
      job_texts.push_back(d);
      job_ids.push_back("j" + std::to_string(j));
      store.UpsertJob(MakeJob(job_ids.back(), d));
    }
    std::vector<std::vector<std::string>> cv_skills;
    for (int c = 0; c < n_cvs; ++c) {
      std::vector<std::string> skills;
      std::string cv;
      for (const auto& s : lexicon) {
        if (rng() % 2) {
          skills.push_back(s);
          cv += s + " ";
        }
      }
      cv_skills.push_back(skills);
      cv_ids.push_back("c" + std::to_string(c));
      store.UpsertApplicant(MakeApplicant(cv_ids.back(), cv));
    }

    auto snap = store.Snapshot();
    Matcher matcher(*snap, extractor_, TermsFor(*snap));
    for (int j = 0; j < n_jobs; ++j) {
      // Job skills: lexicon words present as whole tokens in the job text.
      std::vector<std::string> job_skills;
      for (const auto& w : oracle::Words(job_texts[j])) {
        if (std::find(lexicon.begin(), lexicon.end(), w) != lexicon.end() &&
            std::find(job_skills.begin(), job_skills.end(), w) == job_skills.end()) {
          job_skills.push_back(w);
        }
      }
      auto scored = oracle::BestTermPerSkill(
          oracle::Tfidf(job_texts, static_cast<std::size_t>(j), true), job_skills);
      RankedResult r = matcher.RankApplicants(job_ids[j], cv_ids);
      ASSERT_EQ(r.entries.size(), cv_ids.size());
      for (const auto& e : r.entries) {
        const auto idx = static_cast<std::size_t>(std::stoi(e.entity_id.substr(1)));
        EXPECT_NEAR(e.score, oracle::MatchScore(scored, cv_skills[idx]), 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace jobham
