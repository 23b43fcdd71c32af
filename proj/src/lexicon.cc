#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "jobham/error.h"
#include "jobham/extract.h"
#include "jobham/textprep.h"

namespace jobham {
namespace {

std::string JoinTokens(std::span<const std::string_view> tokens) {
  std::string key;
  for (std::string_view t : tokens) {
    if (!key.empty()) key.push_back(' ');
    key.append(t);
  }
  return key;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string ReadFile(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kStorageIo,
                std::string("cannot open ") + what + " file " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

SkillLexicon::SkillLexicon(std::vector<SkillEntry> entries)
    : entries_(std::move(entries)) {
  for (const auto& entry : entries_) {
    if (!canonicals_.insert(entry.canonical).second) {
      throw Error(ErrorCode::kDuplicateAlias,
                  "canonical skill '" + entry.canonical +
                      "' is listed more than once");
    }
    std::vector<std::string> keys;
    keys.push_back(entry.canonical);
    keys.insert(keys.end(), entry.aliases.begin(), entry.aliases.end());
    for (const auto& raw : keys) {
      std::string key = NormalizeText(raw);
      if (key.empty()) {
        throw Error(ErrorCode::kParseError,
                    "skill '" + raw + "' normalizes to an empty key");
      }
      auto [it, inserted] = index_.emplace(key, entry.canonical);
      if (!inserted && it->second != entry.canonical) {
        throw Error(ErrorCode::kDuplicateAlias,
                    "alias '" + raw + "' (key '" + key +
                        "') maps to both '" + it->second + "' and '" +
                        entry.canonical + "'");
      }
      max_key_tokens_ = std::max(max_key_tokens_, SplitWhitespace(key).size());
    }
  }
}

SkillLexicon SkillLexicon::Parse(std::string_view contents) {
  std::vector<SkillEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= contents.size()) {
    std::size_t eol = contents.find('\n', pos);
    if (eol == std::string_view::npos) eol = contents.size();
    std::string_view line = contents.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || Trim(line).front() == '#') continue;

    SkillEntry entry;
    std::size_t tab = line.find('\t');
    entry.canonical = std::string(Trim(line.substr(0, tab)));
    if (entry.canonical.empty() || NormalizeText(entry.canonical).empty()) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": missing canonical skill");
    }
    if (tab != std::string_view::npos) {
      std::string_view rest = line.substr(tab + 1);
      if (rest.find('\t') != std::string_view::npos) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) +
                        ": expected canonical<TAB>aliases");
      }
      std::size_t start = 0;
      while (start <= rest.size()) {
        std::size_t comma = rest.find(',', start);
        if (comma == std::string_view::npos) comma = rest.size();
        std::string_view alias = Trim(rest.substr(start, comma - start));
        if (!alias.empty()) {
          if (NormalizeText(alias).empty()) {
            throw Error(ErrorCode::kParseError,
                        "line " + std::to_string(line_no) + ": alias '" +
                            std::string(alias) + "' normalizes to nothing");
          }
          entry.aliases.emplace_back(alias);
        }
        start = comma + 1;
      }
    }
    entries.push_back(std::move(entry));
  }
  return SkillLexicon(std::move(entries));
}

SkillLexicon SkillLexicon::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path, "lexicon"));
}

const std::string* SkillLexicon::Lookup(std::string_view normalized_key) const {
  auto it = index_.find(std::string(normalized_key));
  return it == index_.end() ? nullptr : &it->second;
}

bool SkillLexicon::IsCanonical(std::string_view skill) const {
  return canonicals_.contains(std::string(skill));
}

std::vector<std::string> ExtractJobSkills(std::string_view description,
                                          const SkillLexicon& lexicon) {
  std::vector<std::string> skills;
  if (lexicon.empty()) return skills;
  const std::string normalized = NormalizeText(description);
  const std::vector<std::string_view> tokens = SplitWhitespace(normalized);
  std::unordered_set<std::string> seen;

  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t longest = std::min(lexicon.max_key_tokens(), tokens.size() - i);
    std::size_t matched = 0;
    for (std::size_t len = longest; len >= 1; --len) {
      std::string key = JoinTokens(std::span(tokens).subspan(i, len));
      if (const std::string* canonical = lexicon.Lookup(key)) {
        if (seen.insert(*canonical).second) skills.push_back(*canonical);
        matched = len;
        break;
      }
    }
    i += matched > 0 ? matched : 1;
  }
  return skills;
}

PhraseList::PhraseList(std::vector<std::string> phrases)
    : phrases_(std::move(phrases)) {
  for (std::size_t i = 0; i < phrases_.size(); ++i) {
    std::string key = NormalizeText(phrases_[i]);
    if (key.empty()) continue;
    index_.emplace(key, i);
    max_tokens_ = std::max(max_tokens_, SplitWhitespace(key).size());
  }
}

PhraseList PhraseList::Load(const std::filesystem::path& path) {
  std::string contents = ReadFile(path, "phrase list");
  std::vector<std::string> phrases;
  std::istringstream in(contents);
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = Trim(line);
    if (!t.empty() && t.front() != '#') phrases.emplace_back(t);
  }
  return PhraseList(std::move(phrases));
}

std::optional<std::string> PhraseList::FirstMatch(std::string_view text) const {
  if (index_.empty()) return std::nullopt;
  const std::string normalized = NormalizeText(text);
  const std::vector<std::string_view> tokens = SplitWhitespace(normalized);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::size_t longest = std::min(max_tokens_, tokens.size() - i);
    for (std::size_t len = longest; len >= 1; --len) {
      auto it = index_.find(JoinTokens(std::span(tokens).subspan(i, len)));
      if (it != index_.end()) return phrases_[it->second];
    }
  }
  return std::nullopt;
}

}  // namespace jobham
