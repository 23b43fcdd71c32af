#include <fstream>
#include <string>
#include <vector>

#include "jobham/error.h"
#include "jobham/textprep.h"

namespace jobham {
namespace {

bool IsUtf8Boundary(std::string_view s, std::size_t pos) {
  return pos == 0 || pos >= s.size() ||
         (static_cast<unsigned char>(s[pos]) & 0xC0) != 0x80;
}

std::int32_t RequireSpecial(
    const std::unordered_map<std::string, std::int32_t>& ids,
    std::string_view token) {
  auto it = ids.find(std::string(token));
  if (it == ids.end()) {
    throw Error(ErrorCode::kParseError,
                "vocabulary is missing special token " + std::string(token));
  }
  return it->second;
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> tokens)
    : tokens_(std::move(tokens)) {
  if (tokens_.empty()) {
    throw Error(ErrorCode::kEmptyVocabulary, "vocabulary has no tokens");
  }
  std::unordered_map<std::string, std::int32_t> plain;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    auto [it, inserted] =
        plain.emplace(tokens_[i], static_cast<std::int32_t>(i));
    if (!inserted) {
      throw Error(ErrorCode::kParseError,
                  "duplicate vocabulary token '" + tokens_[i] + "' at lines " +
                      std::to_string(it->second + 1) + " and " +
                      std::to_string(i + 1));
    }
  }
  pad_id_ = RequireSpecial(plain, kPadToken);
  unk_id_ = RequireSpecial(plain, kUnkToken);
  cls_id_ = RequireSpecial(plain, kClsToken);
  sep_id_ = RequireSpecial(plain, kSepToken);
  if (pad_id_ != 0) {
    throw Error(ErrorCode::kParseError, "[PAD] must have id 0");
  }
  ids_.insert(plain.begin(), plain.end());
}

Vocabulary Vocabulary::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kStorageIo,
                "cannot open vocabulary file " + path.string());
  }
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    tokens.push_back(line);
  }
  return Vocabulary(std::move(tokens));
}

bool Vocabulary::Contains(std::string_view token) const {
  return ids_.find(token) != ids_.end();
}

std::int32_t Vocabulary::IdOf(std::string_view token) const {
  auto it = ids_.find(token);
  return it == ids_.end() ? unk_id_ : it->second;
}

const std::string& Vocabulary::TokenOf(std::int32_t id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= tokens_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "token id out of range: " + std::to_string(id));
  }
  return tokens_[static_cast<std::size_t>(id)];
}

std::vector<std::string> WordpieceTokenize(std::string_view text,
                                           const Vocabulary& vocab,
                                           std::size_t max_chars_per_word) {
  if (vocab.empty()) {
    throw Error(ErrorCode::kEmptyVocabulary,
                "cannot tokenize with an empty vocabulary");
  }
  std::vector<std::string> output;
  std::string candidate;
  for (std::string_view word : SplitWhitespace(text)) {
    if (Utf8Length(word) > max_chars_per_word) {
      output.emplace_back(kUnkToken);
      continue;
    }
    std::vector<std::string> pieces;
    bool bad = false;
    std::size_t start = 0;
    while (start < word.size()) {
      std::size_t end = word.size();
      bool found = false;
      while (end > start) {
        if (IsUtf8Boundary(word, end)) {
          candidate.clear();
          if (start > 0) candidate.append(kContinuationPrefix);
          candidate.append(word.substr(start, end - start));
          if (vocab.Contains(candidate)) {
            found = true;
            break;
          }
        }
        --end;
      }
      if (!found) {
        bad = true;
        break;
      }
      pieces.push_back(candidate);
      start = end;
    }
    if (bad) {
      output.emplace_back(kUnkToken);
    } else {
      for (auto& p : pieces) output.push_back(std::move(p));
    }
  }
  return output;
}

std::string Detokenize(std::span<const std::string> tokens) {
  std::string out;
  for (const auto& token : tokens) {
    if (token == kPadToken || token == kClsToken || token == kSepToken) {
      continue;
    }
    if (token.starts_with(kContinuationPrefix)) {
      out.append(token, kContinuationPrefix.size());
      continue;
    }
    if (!out.empty()) out.push_back(' ');
    out.append(token);
  }
  return out;
}

EncodedSequence Encode(std::span<const std::string> tokens, std::size_t max_len,
                       const Vocabulary& vocab) {
  if (max_len < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "max_len must be at least 2, got " + std::to_string(max_len));
  }
  if (vocab.empty()) {
    throw Error(ErrorCode::kEmptyVocabulary,
                "cannot encode with an empty vocabulary");
  }
  EncodedSequence seq;
  seq.input_ids.assign(max_len, vocab.pad_id());
  seq.segment_ids.assign(max_len, 0);
  seq.attention_mask.assign(max_len, 0);

  const std::size_t kept = std::min(tokens.size(), max_len - 2);
  std::size_t pos = 0;
  seq.input_ids[pos++] = vocab.cls_id();
  for (std::size_t i = 0; i < kept; ++i) {
    seq.input_ids[pos++] = vocab.IdOf(tokens[i]);
  }
  seq.input_ids[pos++] = vocab.sep_id();
  seq.token_count = pos;
  std::fill_n(seq.attention_mask.begin(), pos, 1);
  return seq;
}

}  // namespace jobham
