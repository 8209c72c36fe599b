#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace textmetrics {

/// A surface token. Offsets are byte offsets into the owning document's text
/// (end exclusive), so they always fall on UTF-8 boundaries.
struct Token {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;
  std::optional<std::string> upos;
  /// 1-based index of the head within the sentence, 0 for the root.
  std::optional<int> head;
  std::optional<std::string> deprel;
  /// True iff text contains at least one alphanumeric code point.
  bool is_word = false;
};

/// Half-open range [begin, end) into Document::tokens().
struct Sentence {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
};

/// Text plus token/sentence structure and optional syntax. Immutable once
/// constructed; the constructor checks every structural invariant and throws
/// std::invalid_argument on violation.
class Document {
 public:
  Document() = default;
  Document(std::string id, std::string text, std::vector<Token> tokens,
           std::vector<Sentence> sentences, std::string lang = "en");

  const std::string& id() const noexcept { return id_; }
  const std::string& text() const noexcept { return text_; }
  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  const std::vector<Sentence>& sentences() const noexcept { return sentences_; }
  const std::string& lang() const noexcept { return lang_; }

  /// Non-empty, and every token carries both a UPOS tag and a head.
  bool has_syntax() const noexcept { return has_syntax_; }

  std::span<const Token> sentence_tokens(const Sentence& s) const {
    return std::span<const Token>(tokens_).subspan(s.begin, s.size());
  }

 private:
  std::string id_;
  std::string text_;
  std::vector<Token> tokens_;
  std::vector<Sentence> sentences_;
  std::string lang_ = "en";
  bool has_syntax_ = false;
};

/// Rule-based tokenizer. Words are maximal alphanumeric runs (combining marks
/// attach to the run); an apostrophe or hyphen joins two alphanumeric runs.
/// Every other non-space code point becomes its own token.
std::vector<Token> tokenize(std::string_view text, std::string_view lang = "en");

/// Splits after a run of '.', '!' or '?' (plus any closing brackets or
/// closing curly quotes right after it) unless the next word token starts
/// with a lowercase letter. A trailing unterminated fragment is a sentence.
std::vector<Sentence> segment_sentences(std::span<const Token> tokens);

Document build_document(std::string id, std::string text, std::string lang = "en");

}  // namespace textmetrics
