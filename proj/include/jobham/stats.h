#ifndef JOBHAM_STATS_H_
#define JOBHAM_STATS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace jobham {

struct WordCount {
  std::string token;
  std::int64_t count = 0;

  bool operator==(const WordCount&) const = default;
};

// Sorted by count descending, then token ascending.
using FrequencyTable = std::vector<WordCount>;

using StopwordSet = std::unordered_set<std::string>;

// One stopword per line; entries are normalized on load.
StopwordSet LoadStopwords(const std::filesystem::path& path);

// Counts normalized tokens, skipping stopwords and single-character tokens.
FrequencyTable WordFrequencies(std::string_view text,
                               const StopwordSet& stopwords);

FrequencyTable TopN(const FrequencyTable& table, std::size_t n);

}  // namespace jobham

#endif  // JOBHAM_STATS_H_
