#ifndef JOBHAM_TEXTPREP_H_
#define JOBHAM_TEXTPREP_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jobham {

inline constexpr std::string_view kPadToken = "[PAD]";
inline constexpr std::string_view kUnkToken = "[UNK]";
inline constexpr std::string_view kClsToken = "[CLS]";
inline constexpr std::string_view kSepToken = "[SEP]";
inline constexpr std::string_view kContinuationPrefix = "##";

// Default sequence lengths for job descriptions and resumes.
inline constexpr std::size_t kJobMaxLen = 256;
inline constexpr std::size_t kResumeMaxLen = 500;

// Lowercases ASCII letters, turns every ASCII punctuation character into a
// space, collapses whitespace runs and trims. Non-ASCII bytes pass through.
std::string NormalizeText(std::string_view raw);

// Splits on ASCII whitespace, dropping empty pieces.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

bool IsAsciiPunct(char c);

// Number of UTF-8 code points in `s` (continuation bytes are not counted).
std::size_t Utf8Length(std::string_view s);

// Token -> id map loaded from a one-token-per-line file (line number = id).
// A default-constructed vocabulary is empty.
class Vocabulary {
 public:
  Vocabulary() = default;
  // Throws Error(kEmptyVocabulary) for an empty list and Error(kParseError)
  // for duplicates, a missing special token, or [PAD] not at id 0.
  explicit Vocabulary(std::vector<std::string> tokens);

  static Vocabulary Load(const std::filesystem::path& path);

  bool empty() const { return tokens_.empty(); }
  std::size_t size() const { return tokens_.size(); }
  bool Contains(std::string_view token) const;
  // Id of `token`, or the [UNK] id when absent.
  std::int32_t IdOf(std::string_view token) const;
  const std::string& TokenOf(std::int32_t id) const;

  std::int32_t pad_id() const { return pad_id_; }
  std::int32_t unk_id() const { return unk_id_; }
  std::int32_t cls_id() const { return cls_id_; }
  std::int32_t sep_id() const { return sep_id_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::int32_t, Hash, std::equal_to<>> ids_;
  std::int32_t pad_id_ = 0;
  std::int32_t unk_id_ = 0;
  std::int32_t cls_id_ = 0;
  std::int32_t sep_id_ = 0;
};

// Greedy longest-prefix WordPiece over whitespace words of normalized text.
// A word with an unmatchable remainder (or longer than
// `max_chars_per_word` code points) becomes a single [UNK].
std::vector<std::string> WordpieceTokenize(std::string_view text,
                                           const Vocabulary& vocab,
                                           std::size_t max_chars_per_word = 100);

// Inverse of WordpieceTokenize for in-vocabulary text: drops special tokens
// and glues "##" continuations onto the previous piece.
std::string Detokenize(std::span<const std::string> tokens);

struct EncodedSequence {
  std::vector<std::int32_t> input_ids;
  std::vector<std::int32_t> segment_ids;
  std::vector<std::int32_t> attention_mask;
  std::size_t token_count = 0;

  std::size_t max_len() const { return input_ids.size(); }
};

// [CLS] + head of `tokens` + [SEP], padded with [PAD] to exactly `max_len`.
// Throws Error(kInvalidArgument) when max_len < 2.
EncodedSequence Encode(std::span<const std::string> tokens, std::size_t max_len,
                       const Vocabulary& vocab);

}  // namespace jobham

#endif  // JOBHAM_TEXTPREP_H_
