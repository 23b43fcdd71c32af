#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "jobham/error.h"
#include "jobham/textprep.h"

namespace jobham {
namespace {

Vocabulary ToyVocab() {
  return Vocabulary({"[PAD]", "[UNK]", "[CLS]", "[SEP]", "un", "##aff",
                     "##able", "aff", "go"});
}

TEST(NormalizeTextTest, StripsPunctuationAndLowercases) {
  EXPECT_EQ(NormalizeText("C++, SQL; and Java!"), "c sql and java");
}

TEST(NormalizeTextTest, EmptyStaysEmpty) { EXPECT_EQ(NormalizeText(""), ""); }

TEST(NormalizeTextTest, CollapsesWhitespace) {
  EXPECT_EQ(NormalizeText("  hello   world "), "hello world");
  EXPECT_EQ(NormalizeText("a\t\nb"), "a b");
}

TEST(NormalizeTextTest, EveryAsciiPunctuationCharBecomesSpace) {
  const std::string punct = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";
  for (char c : punct) {
    EXPECT_EQ(NormalizeText(std::string("a") + c + "b"), "a b") << c;
  }
}

TEST(NormalizeTextTest, UnicodePunctuationPassesThrough) {
  EXPECT_EQ(NormalizeText("caf\xC3\xA9 \xE2\x80\x94 ok"),
            "caf\xC3\xA9 \xE2\x80\x94 ok");
}

TEST(NormalizeTextTest, IsIdempotent) {
  std::mt19937 rng(7);
  const std::string alphabet = "aZ9 .,-_!\t\n#C+";
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    std::uniform_int_distribution<std::size_t> len(0, 40), pick(0, alphabet.size() - 1);
    for (std::size_t i = len(rng); i > 0; --i) s.push_back(alphabet[pick(rng)]);
    const std::string once = NormalizeText(s);
    EXPECT_EQ(NormalizeText(once), once);
  }
}

TEST(VocabularyTest, RejectsMissingSpecialsAndDuplicates) {
  EXPECT_THROW(Vocabulary({"[PAD]", "[UNK]", "[CLS]"}), Error);
  EXPECT_THROW(Vocabulary({"[PAD]", "[UNK]", "[CLS]", "[SEP]", "a", "a"}), Error);
  EXPECT_THROW(Vocabulary({"[UNK]", "[PAD]", "[CLS]", "[SEP]"}), Error);
  try {
    Vocabulary(std::vector<std::string>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyVocabulary);
  }
}

TEST(VocabularyTest, IdsAreLineNumbers) {
  Vocabulary v = ToyVocab();
  EXPECT_EQ(v.pad_id(), 0);
  EXPECT_EQ(v.IdOf("un"), 4);
  EXPECT_EQ(v.IdOf("missing"), v.unk_id());
  EXPECT_EQ(v.TokenOf(8), "go");
}

TEST(WordpieceTest, GreedyLongestMatch) {
  Vocabulary v = ToyVocab();
  EXPECT_EQ(WordpieceTokenize("unaffable", v),
            (std::vector<std::string>{"un", "##aff", "##able"}));
  EXPECT_EQ(WordpieceTokenize("go", v), (std::vector<std::string>{"go"}));
  EXPECT_EQ(WordpieceTokenize("zzz", v), (std::vector<std::string>{"[UNK]"}));
}

TEST(WordpieceTest, PartialMatchBecomesSingleUnk) {
  Vocabulary v = ToyVocab();
  EXPECT_EQ(WordpieceTokenize("unzz go", v),
            (std::vector<std::string>{"[UNK]", "go"}));
}

TEST(WordpieceTest, EmptyVocabularyIsAnError) {
  try {
    WordpieceTokenize("go", Vocabulary());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyVocabulary);
  }
}

TEST(WordpieceTest, OverlongWordIsUnk) {
  Vocabulary v = ToyVocab();
  EXPECT_EQ(WordpieceTokenize("gogogo", v, 4),
            (std::vector<std::string>{"[UNK]"}));
}

TEST(EncodeTest, TwoTokensPadToEight) {
  Vocabulary v = ToyVocab();
  std::vector<std::string> tokens{"un", "go"};
  EncodedSequence seq = Encode(tokens, 8, v);
  EXPECT_EQ(seq.token_count, 4u);
  EXPECT_EQ(seq.attention_mask, (std::vector<std::int32_t>{1, 1, 1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(seq.input_ids, (std::vector<std::int32_t>{2, 4, 8, 3, 0, 0, 0, 0}));
  EXPECT_EQ(seq.segment_ids, std::vector<std::int32_t>(8, 0));
}

TEST(EncodeTest, TruncatesHeadAt256) {
  Vocabulary v = ToyVocab();
  std::vector<std::string> tokens(300, "go");
  tokens[0] = "un";
  EncodedSequence seq = Encode(tokens, 256, v);
  EXPECT_EQ(seq.token_count, 256u);
  EXPECT_EQ(seq.input_ids[0], v.cls_id());
  EXPECT_EQ(seq.input_ids[1], v.IdOf("un"));
  EXPECT_EQ(seq.input_ids[255], v.sep_id());
}

TEST(EncodeTest, EmptySentence) {
  Vocabulary v = ToyVocab();
  EncodedSequence seq = Encode({}, 4, v);
  EXPECT_EQ(seq.input_ids, (std::vector<std::int32_t>{2, 3, 0, 0}));
  EXPECT_EQ(seq.attention_mask, (std::vector<std::int32_t>{1, 1, 0, 0}));
}

TEST(EncodeTest, MaxLenBelowTwoIsRejected) {
  Vocabulary v = ToyVocab();
  EXPECT_THROW(Encode({}, 1, v), Error);
  EXPECT_NO_THROW(Encode({}, 2, v));
}

TEST(EncodeTest, InvariantsHoldForRandomInputs) {
  Vocabulary v = ToyVocab();
  const std::vector<std::string> pool{"un", "##aff", "go", "zz", "aff"};
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, 600)(rng);
    std::size_t max_len = std::uniform_int_distribution<std::size_t>(2, 520)(rng);
    std::vector<std::string> tokens(n);
    for (auto& t : tokens) t = pool[rng() % pool.size()];
    EncodedSequence seq = Encode(tokens, max_len, v);
    ASSERT_EQ(seq.input_ids.size(), max_len);
    ASSERT_EQ(seq.segment_ids.size(), max_len);
    ASSERT_EQ(seq.attention_mask.size(), max_len);
    EXPECT_EQ(seq.token_count, std::min(n + 2, max_len));
    std::size_t mask_sum = 0;
    for (std::size_t i = 0; i < max_len; ++i) {
      mask_sum += static_cast<std::size_t>(seq.attention_mask[i]);
      if (i < seq.token_count) {
        EXPECT_EQ(seq.attention_mask[i], 1);
      } else {
        EXPECT_EQ(seq.attention_mask[i], 0);
        EXPECT_EQ(seq.input_ids[i], v.pad_id());
      }
    }
    EXPECT_EQ(mask_sum, seq.token_count);
  }
}

TEST(DetokenizeTest, RoundTripsInVocabularyText) {
  Vocabulary v({"[PAD]", "[UNK]", "[CLS]", "[SEP]", "java", "sql", "go",
                "un", "##aff", "##able", "##s"});
  const std::vector<std::string> words{"java", "sql", "go", "unaffable", "javas",
                                       "gos"};
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    for (int i = std::uniform_int_distribution<int>(0, 8)(rng); i > 0; --i) {
      if (!text.empty()) text += ' ';
      text += words[rng() % words.size()];
    }
    const std::string normalized = NormalizeText(text);
    std::vector<std::string> tokens = WordpieceTokenize(normalized, v);
    EncodedSequence seq = Encode(tokens, tokens.size() + 2, v);
    std::vector<std::string> decoded;
    for (std::size_t i = 0; i < seq.token_count; ++i) {
      decoded.push_back(v.TokenOf(seq.input_ids[i]));
    }
    EXPECT_EQ(Detokenize(decoded), normalized);
  }
}

TEST(Utf8Test, CountsCodePoints) {
  EXPECT_EQ(Utf8Length("abc"), 3u);
  EXPECT_EQ(Utf8Length("caf\xC3\xA9"), 4u);
}

TEST(WordpieceTest, DoesNotSplitInsideMultibyteCharacters) {
  Vocabulary v({"[PAD]", "[UNK]", "[CLS]", "[SEP]", "caf", "##\xC3\xA9"});
  EXPECT_EQ(WordpieceTokenize("caf\xC3\xA9", v),
            (std::vector<std::string>{"caf", "##\xC3\xA9"}));
}

}  // namespace
}  // namespace jobham
