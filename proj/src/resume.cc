#include <cctype>
#include <regex>
#include <string>

#include "jobham/extract.h"
#include "jobham/textprep.h"

namespace jobham {
namespace {

bool IsCapitalizedWord(std::string_view word) {
  if (word.empty() || !std::isupper(static_cast<unsigned char>(word.front()))) {
    return false;
  }
  return std::all_of(word.begin(), word.end(), [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
  });
}

}  // namespace

std::optional<std::string> ExtractEmail(std::string_view raw) {
  static const std::regex kMailbox(
      R"([A-Za-z0-9._%+\-]+@[A-Za-z0-9\-]+(?:\.[A-Za-z0-9\-]+)*\.[A-Za-z]{2,})");
  std::match_results<std::string_view::const_iterator> m;
  if (std::regex_search(raw.begin(), raw.end(), m, kMailbox)) {
    return m.str();
  }
  return std::nullopt;
}

std::optional<std::string> ExtractName(std::string_view raw) {
  std::size_t pos = 0;
  while (pos < raw.size()) {
    std::size_t eol = raw.find('\n', pos);
    if (eol == std::string_view::npos) eol = raw.size();
    std::string_view line = raw.substr(pos, eol - pos);
    pos = eol + 1;

    if (std::any_of(line.begin(), line.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c)) != 0;
        })) {
      continue;
    }
    std::vector<std::string_view> words = SplitWhitespace(line);
    if (words.size() < 2 || words.size() > 4) continue;
    if (!std::all_of(words.begin(), words.end(), IsCapitalizedWord)) continue;

    std::string name;
    for (std::string_view w : words) {
      if (!name.empty()) name.push_back(' ');
      name.append(w);
    }
    return name;
  }
  return std::nullopt;
}

std::optional<double> ExtractYearsExperience(std::string_view raw) {
  static const std::regex kYears(R"((\d+(?:\.\d+)?)\s*\+?\s*years?\b)",
                                 std::regex::icase);
  std::optional<double> best;
  using Iter = std::regex_iterator<std::string_view::const_iterator>;
  for (Iter it(raw.begin(), raw.end(), kYears), end; it != end; ++it) {
    double value = std::stod((*it)[1].str());
    if (!best || value > *best) best = value;
  }
  return best;
}

ResumeProfile ExtractResumeProfile(std::string_view resume_text,
                                   const SkillLexicon& lexicon,
                                   const PhraseList& titles,
                                   const PhraseList& institutions) {
  ResumeProfile profile;
  profile.name = ExtractName(resume_text);
  profile.email = ExtractEmail(resume_text);
  profile.years_experience = ExtractYearsExperience(resume_text);
  profile.designation = titles.FirstMatch(resume_text);
  profile.college_name = institutions.FirstMatch(resume_text);
  profile.skills = ExtractJobSkills(resume_text, lexicon);
  return profile;
}

RuleExtractor::RuleExtractor(SkillLexicon lexicon, PhraseList titles,
                             PhraseList institutions)
    : lexicon_(std::move(lexicon)),
      titles_(std::move(titles)),
      institutions_(std::move(institutions)) {}

std::vector<std::string> RuleExtractor::JobSkills(std::string_view text) const {
  return ExtractJobSkills(text, lexicon_);
}

ResumeProfile RuleExtractor::Resume(std::string_view text) const {
  return ExtractResumeProfile(text, lexicon_, titles_, institutions_);
}

}  // namespace jobham
