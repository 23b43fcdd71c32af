#ifndef JOBHAM_EXTRACT_H_
#define JOBHAM_EXTRACT_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace jobham {

struct SkillEntry {
  std::string canonical;
  std::vector<std::string> aliases;
};

// Closed skill vocabulary. Every alias (and every canonical name) is indexed
// under its normalized form and maps to exactly one canonical skill.
class SkillLexicon {
 public:
  SkillLexicon() = default;
  // Throws Error(kDuplicateAlias) naming both canonicals when a normalized
  // key collides, Error(kParseError) for entries that normalize to nothing.
  explicit SkillLexicon(std::vector<SkillEntry> entries);

  // File format: `canonical<TAB>alias1,alias2,...`, one entry per line.
  // Blank lines and lines starting with '#' are skipped.
  static SkillLexicon Load(const std::filesystem::path& path);
  static SkillLexicon Parse(std::string_view contents);

  bool empty() const { return entries_.empty(); }
  const std::vector<SkillEntry>& entries() const { return entries_; }
  std::size_t index_size() const { return index_.size(); }
  // Canonical skill for a normalized key, if any.
  const std::string* Lookup(std::string_view normalized_key) const;
  // Largest number of tokens in any index key.
  std::size_t max_key_tokens() const { return max_key_tokens_; }
  bool IsCanonical(std::string_view skill) const;

 private:
  std::vector<SkillEntry> entries_;
  std::unordered_map<std::string, std::string> index_;
  std::unordered_set<std::string> canonicals_;
  std::size_t max_key_tokens_ = 0;
};

// Longest-match-first scan of the normalized token stream against the
// lexicon. Result is deduplicated, in first-occurrence order.
std::vector<std::string> ExtractJobSkills(std::string_view description,
                                          const SkillLexicon& lexicon);

struct ResumeProfile {
  std::optional<std::string> name;
  std::optional<std::string> email;
  std::optional<std::string> designation;
  std::optional<std::string> college_name;
  std::optional<double> years_experience;
  std::vector<std::string> skills;

  bool operator==(const ResumeProfile&) const = default;
};

// Plain phrase list (job titles, institutions) matched on token boundaries.
class PhraseList {
 public:
  PhraseList() = default;
  explicit PhraseList(std::vector<std::string> phrases);
  static PhraseList Load(const std::filesystem::path& path);

  bool empty() const { return phrases_.empty(); }
  // Phrase (as written in the list) with the earliest occurrence in `text`;
  // the longest phrase wins at equal positions.
  std::optional<std::string> FirstMatch(std::string_view text) const;

 private:
  std::vector<std::string> phrases_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t max_tokens_ = 0;
};

std::optional<std::string> ExtractEmail(std::string_view raw);
std::optional<std::string> ExtractName(std::string_view raw);
std::optional<double> ExtractYearsExperience(std::string_view raw);

// Swappable skill/entity extractor. Implementations must be deterministic
// and return only canonical skills of the lexicon they were built with.
class SkillExtractor {
 public:
  virtual ~SkillExtractor() = default;
  virtual std::vector<std::string> JobSkills(std::string_view text) const = 0;
  virtual ResumeProfile Resume(std::string_view text) const = 0;
};

class RuleExtractor : public SkillExtractor {
 public:
  explicit RuleExtractor(SkillLexicon lexicon, PhraseList titles = {},
                         PhraseList institutions = {});

  std::vector<std::string> JobSkills(std::string_view text) const override;
  ResumeProfile Resume(std::string_view text) const override;

  const SkillLexicon& lexicon() const { return lexicon_; }

 private:
  SkillLexicon lexicon_;
  PhraseList titles_;
  PhraseList institutions_;
};

// Rule-based resume extraction; designation/college come from the optional
// phrase lists and stay absent when those are empty.
ResumeProfile ExtractResumeProfile(std::string_view resume_text,
                                   const SkillLexicon& lexicon,
                                   const PhraseList& titles = {},
                                   const PhraseList& institutions = {});

}  // namespace jobham

#endif  // JOBHAM_EXTRACT_H_
