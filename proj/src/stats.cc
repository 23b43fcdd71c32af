#include "jobham/stats.h"

#include <algorithm>
#include <fstream>
#include <map>

#include "jobham/error.h"
#include "jobham/textprep.h"

namespace jobham {

StopwordSet LoadStopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kStorageIo,
                "cannot open stopword file " + path.string());
  }
  StopwordSet stopwords;
  std::string line;
  while (std::getline(in, line)) {
    const std::string normalized = NormalizeText(line);
    for (std::string_view word : SplitWhitespace(normalized)) {
      stopwords.emplace(word);
    }
  }
  return stopwords;
}

FrequencyTable WordFrequencies(std::string_view text,
                               const StopwordSet& stopwords) {
  const std::string normalized = NormalizeText(text);
  std::map<std::string_view, std::int64_t> counts;
  for (std::string_view token : SplitWhitespace(normalized)) {
    if (Utf8Length(token) < 2) continue;
    if (stopwords.contains(std::string(token))) continue;
    ++counts[token];
  }
  FrequencyTable table;
  table.reserve(counts.size());
  for (const auto& [token, count] : counts) {
    table.push_back({std::string(token), count});
  }
  // counts is already token-ordered, so a stable sort on count suffices.
  std::stable_sort(table.begin(), table.end(),
                   [](const WordCount& a, const WordCount& b) {
                     return a.count > b.count;
                   });
  return table;
}

FrequencyTable TopN(const FrequencyTable& table, std::size_t n) {
  return FrequencyTable(table.begin(),
                        table.begin() + static_cast<std::ptrdiff_t>(
                                            std::min(n, table.size())));
}

}  // namespace jobham
