#ifndef JOBHAM_TFIDF_H_
#define JOBHAM_TFIDF_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace jobham {

// kNaive: (tf / doc_len) * log10(N / df).
// kSmooth: tf * (ln((1 + N) / (1 + df)) + 1), then L2-normalized per document.
enum class TfidfMode { kNaive, kSmooth };

TfidfMode ParseTfidfMode(std::string_view name);
std::string_view TfidfModeName(TfidfMode mode);

double TfidfScore(std::int64_t tf_count, std::int64_t doc_len, std::int64_t df,
                  std::int64_t n_docs, TfidfMode mode);

// Inverse document frequency used by `mode` (log10 or smoothed ln).
double Idf(std::int64_t df, std::int64_t n_docs, TfidfMode mode);

struct TermScore {
  std::string term;
  double score = 0.0;

  bool operator==(const TermScore&) const = default;
};

struct CorpusDoc {
  std::string id;
  std::string text;  // normalized
};

// Splits normalized text into TF-IDF terms; single-character terms dropped.
std::vector<std::string_view> TfidfTerms(std::string_view normalized);

class TfidfModel {
 public:
  // Throws Error(kEmptyCorpus) or Error(kDuplicateDocId).
  static TfidfModel Fit(const std::vector<CorpusDoc>& corpus,
                        TfidfMode mode = TfidfMode::kSmooth);

  TfidfMode mode() const { return mode_; }
  std::size_t num_docs() const { return docs_.size(); }
  // Sorted lexicographically; a term's position is its feature index.
  const std::vector<std::string>& vocab() const { return vocab_; }
  // 0 for terms not in the corpus.
  std::int64_t DocumentFrequency(std::string_view term) const;
  bool HasDoc(std::string_view doc_id) const;

  // Every term of the document, score descending then term ascending.
  // Throws Error(kUnknownDoc).
  std::vector<TermScore> TermScores(std::string_view doc_id) const;

 private:
  struct Doc {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> counts;  // term, tf
    std::uint32_t length = 0;
  };

  TfidfMode mode_ = TfidfMode::kSmooth;
  std::vector<std::string> vocab_;
  std::vector<std::uint32_t> df_;
  std::vector<Doc> docs_;
  std::unordered_map<std::string, std::size_t> doc_index_;
};

// Splits raw text into sentences on '.', '!', '?' and newlines; each piece is
// normalized and empty pieces are dropped.
std::vector<std::string> SplitSentences(std::string_view raw);

// Scores one description against a corpus made of its own sentences: df and
// N count sentences, tf counts the whole description. With a single sentence
// this is a one-document fit.
std::vector<TermScore> SentenceCorpusScores(std::string_view raw_description,
                                            TfidfMode mode = TfidfMode::kSmooth);

}  // namespace jobham

#endif  // JOBHAM_TFIDF_H_
