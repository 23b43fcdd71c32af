#include "jobham/tfidf.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jobham/error.h"
#include "jobham/textprep.h"

namespace jobham {
namespace {

void SortTermScores(std::vector<TermScore>& scores) {
  std::sort(scores.begin(), scores.end(),
            [](const TermScore& a, const TermScore& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.term < b.term;
            });
}

}  // namespace

TfidfMode ParseTfidfMode(std::string_view name) {
  if (name == "naive") return TfidfMode::kNaive;
  if (name == "smooth") return TfidfMode::kSmooth;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown tf-idf mode '" + std::string(name) +
                  "' (expected naive or smooth)");
}

std::string_view TfidfModeName(TfidfMode mode) {
  return mode == TfidfMode::kNaive ? "naive" : "smooth";
}

double Idf(std::int64_t df, std::int64_t n_docs, TfidfMode mode) {
  if (df < 1 || df > n_docs) {
    throw Error(ErrorCode::kInvalidArgument,
                "document frequency " + std::to_string(df) +
                    " outside [1, " + std::to_string(n_docs) + "]");
  }
  const double n = static_cast<double>(n_docs);
  const double d = static_cast<double>(df);
  if (mode == TfidfMode::kNaive) return std::log10(n / d);
  return std::log((1.0 + n) / (1.0 + d)) + 1.0;
}

double TfidfScore(std::int64_t tf_count, std::int64_t doc_len, std::int64_t df,
                  std::int64_t n_docs, TfidfMode mode) {
  if (doc_len < 1 || tf_count < 0 || tf_count > doc_len) {
    throw Error(ErrorCode::kInvalidArgument,
                "term count " + std::to_string(tf_count) +
                    " invalid for document length " + std::to_string(doc_len));
  }
  const double idf = Idf(df, n_docs, mode);
  if (mode == TfidfMode::kNaive) {
    return static_cast<double>(tf_count) / static_cast<double>(doc_len) * idf;
  }
  return static_cast<double>(tf_count) * idf;
}

std::vector<std::string_view> TfidfTerms(std::string_view normalized) {
  std::vector<std::string_view> terms = SplitWhitespace(normalized);
  std::erase_if(terms, [](std::string_view t) { return Utf8Length(t) < 2; });
  return terms;
}

TfidfModel TfidfModel::Fit(const std::vector<CorpusDoc>& corpus,
                           TfidfMode mode) {
  if (corpus.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "cannot fit tf-idf on an empty corpus");
  }
  TfidfModel model;
  model.mode_ = mode;
  model.docs_.reserve(corpus.size());

  // Provisional ids in first-seen order, remapped to sorted order below.
  std::unordered_map<std::string_view, std::uint32_t> provisional;
  std::vector<std::string_view> seen_terms;
  std::vector<std::uint32_t> counts;
  for (const CorpusDoc& doc : corpus) {
    if (!model.doc_index_.emplace(doc.id, model.docs_.size()).second) {
      throw Error(ErrorCode::kDuplicateDocId,
                  "duplicate document id '" + doc.id + "'");
    }
    Doc fitted;
    std::unordered_map<std::uint32_t, std::uint32_t> tf;
    for (std::string_view term : TfidfTerms(doc.text)) {
      auto [it, inserted] = provisional.emplace(
          term, static_cast<std::uint32_t>(seen_terms.size()));
      if (inserted) seen_terms.push_back(term);
      ++tf[it->second];
      ++fitted.length;
    }
    fitted.counts.assign(tf.begin(), tf.end());
    model.docs_.push_back(std::move(fitted));
  }

  std::vector<std::uint32_t> order(seen_terms.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return seen_terms[a] < seen_terms[b];
  });
  std::vector<std::uint32_t> remap(seen_terms.size());
  model.vocab_.reserve(order.size());
  for (std::uint32_t rank = 0; rank < order.size(); ++rank) {
    remap[order[rank]] = rank;
    model.vocab_.emplace_back(seen_terms[order[rank]]);
  }
  model.df_.assign(model.vocab_.size(), 0);
  for (Doc& doc : model.docs_) {
    for (auto& [term, count] : doc.counts) {
      term = remap[term];
      ++model.df_[term];
    }
    std::sort(doc.counts.begin(), doc.counts.end());
  }
  return model;
}

std::int64_t TfidfModel::DocumentFrequency(std::string_view term) const {
  auto it = std::lower_bound(vocab_.begin(), vocab_.end(), term);
  if (it == vocab_.end() || *it != term) return 0;
  return df_[static_cast<std::size_t>(it - vocab_.begin())];
}

bool TfidfModel::HasDoc(std::string_view doc_id) const {
  return doc_index_.contains(std::string(doc_id));
}

std::vector<TermScore> TfidfModel::TermScores(std::string_view doc_id) const {
  auto it = doc_index_.find(std::string(doc_id));
  if (it == doc_index_.end()) {
    throw Error(ErrorCode::kUnknownDoc,
                "document '" + std::string(doc_id) + "' is not in the model");
  }
  const Doc& doc = docs_[it->second];
  const auto n = static_cast<std::int64_t>(docs_.size());

  std::vector<TermScore> scores;
  scores.reserve(doc.counts.size());
  double norm_sq = 0.0;
  for (const auto& [term, count] : doc.counts) {
    double s = TfidfScore(count, doc.length, df_[term], n, mode_);
    norm_sq += s * s;
    scores.push_back({vocab_[term], s});
  }
  if (mode_ == TfidfMode::kSmooth && norm_sq > 0.0) {
    const double norm = std::sqrt(norm_sq);
    for (auto& s : scores) s.score /= norm;
  }
  SortTermScores(scores);
  return scores;
}

std::vector<std::string> SplitSentences(std::string_view raw) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= raw.size(); ++i) {
    if (i == raw.size() || raw[i] == '.' || raw[i] == '!' || raw[i] == '?' ||
        raw[i] == '\n') {
      std::string s = NormalizeText(raw.substr(start, i - start));
      if (!s.empty()) sentences.push_back(std::move(s));
      start = i + 1;
    }
  }
  return sentences;
}

std::vector<TermScore> SentenceCorpusScores(std::string_view raw_description,
                                            TfidfMode mode) {
  std::vector<std::string> sentences = SplitSentences(raw_description);
  if (sentences.empty()) return {};
  std::vector<CorpusDoc> corpus;
  corpus.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    corpus.push_back({"s" + std::to_string(i), std::move(sentences[i])});
  }
  const TfidfModel model = TfidfModel::Fit(corpus, mode);
  const auto n = static_cast<std::int64_t>(model.num_docs());

  const std::string normalized = NormalizeText(raw_description);
  std::vector<std::string_view> terms = TfidfTerms(normalized);
  std::unordered_map<std::string_view, std::int64_t> tf;
  for (std::string_view t : terms) ++tf[t];

  std::vector<TermScore> scores;
  double norm_sq = 0.0;
  for (const auto& [term, count] : tf) {
    double s = TfidfScore(count, static_cast<std::int64_t>(terms.size()),
                          model.DocumentFrequency(term), n, mode);
    norm_sq += s * s;
    scores.push_back({std::string(term), s});
  }
  if (mode == TfidfMode::kSmooth && norm_sq > 0.0) {
    const double norm = std::sqrt(norm_sq);
    for (auto& s : scores) s.score /= norm;
  }
  SortTermScores(scores);
  return scores;
}

}  // namespace jobham
