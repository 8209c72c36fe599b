#include "textmetrics/text_model.hpp"

#include <stdexcept>

#include "textmetrics/unicode.hpp"

namespace textmetrics {

namespace {

bool is_joiner(char32_t cp) {
  switch (cp) {
    case U'\'':
    case U'’':  // right single quotation mark, used as apostrophe
    case U'-':
    case U'‐':  // hyphen
    case U'‑':  // non-breaking hyphen
      return true;
    default:
      return false;
  }
}

bool is_terminator(const Token& t) {
  return t.text == "." || t.text == "!" || t.text == "?";
}

bool is_closer(const Token& t) {
  return t.text == ")" || t.text == "]" || t.text == "}" || t.text == "”" ||
         t.text == "’" || t.text == "»";
}

bool starts_lowercase(const Token& t) {
  if (t.text.empty()) return false;
  return unicode::is_lower(unicode::decode(t.text, 0).cp);
}

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument("Document: " + what); }

}  // namespace

Document::Document(std::string id, std::string text, std::vector<Token> tokens,
                   std::vector<Sentence> sentences, std::string lang)
    : id_(std::move(id)),
      text_(std::move(text)),
      tokens_(std::move(tokens)),
      sentences_(std::move(sentences)),
      lang_(std::move(lang)) {
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const Token& t = tokens_[i];
    if (t.start >= t.end || t.end > text_.size()) invalid("token " + std::to_string(i) + " has an invalid span");
    if (i > 0 && t.start < prev_end) invalid("token " + std::to_string(i) + " overlaps its predecessor");
    if (std::string_view(text_).substr(t.start, t.end - t.start) != t.text) {
      invalid("token " + std::to_string(i) + " does not match the text at its offsets");
    }
    if (t.is_word != unicode::contains_alnum(t.text)) invalid("token " + std::to_string(i) + " has a wrong is_word flag");
    prev_end = t.end;
  }

  std::size_t expected_begin = 0;
  for (const Sentence& s : sentences_) {
    if (s.begin != expected_begin || s.end <= s.begin) invalid("sentences must be non-empty and contiguous");
    expected_begin = s.end;
  }
  if (expected_begin != tokens_.size()) invalid("sentences do not cover all tokens");

  has_syntax_ = !tokens_.empty();

  for (const Sentence& s : sentences_) {
    for (std::size_t i = s.begin; i < s.end; ++i) {
      const Token& t = tokens_[i];
      if (!t.upos || !t.head) has_syntax_ = false;
      if (!t.head) continue;
      const auto position = static_cast<long long>(i - s.begin + 1);
      if (*t.head < 0 || *t.head > static_cast<long long>(s.size()) || *t.head == position) {
        invalid("token " + std::to_string(i) + " has an out-of-range head");
      }
    }
  }
}

std::vector<Token> tokenize(std::string_view text, std::string_view /*lang*/) {
  std::vector<Token> tokens;
  const std::size_t n = text.size();
  std::size_t pos = 0;

  const auto emit = [&](std::size_t start, std::size_t end, bool is_word) {
    Token t;
    t.text = std::string(text.substr(start, end - start));
    t.start = start;
    t.end = end;
    t.is_word = is_word;
    tokens.push_back(std::move(t));
  };

  while (pos < n) {
    const unicode::Decoded d = unicode::decode(text, pos);
    if (unicode::is_space(d.cp)) {
      pos += d.length;
      continue;
    }
    if (!unicode::is_alnum(d.cp)) {
      emit(pos, pos + d.length, false);
      pos += d.length;
      continue;
    }

    const std::size_t start = pos;
    std::size_t end = pos + d.length;
    while (end < n) {
      const unicode::Decoded next = unicode::decode(text, end);
      if (unicode::is_alnum(next.cp) || unicode::is_mark(next.cp)) {
        end += next.length;
        continue;
      }
      if (is_joiner(next.cp) && end + next.length < n) {
        const unicode::Decoded after = unicode::decode(text, end + next.length);
        if (unicode::is_alnum(after.cp)) {
          end += next.length + after.length;
          continue;
        }
      }
      break;
    }
    emit(start, end, true);
    pos = end;
  }
  return tokens;
}

std::vector<Sentence> segment_sentences(std::span<const Token> tokens) {
  std::vector<Sentence> sentences;
  std::size_t begin = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!is_terminator(tokens[i])) {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < tokens.size() && is_terminator(tokens[end])) ++end;
    while (end < tokens.size() && is_closer(tokens[end])) ++end;

    bool split = true;
    for (std::size_t j = end; j < tokens.size(); ++j) {
      if (tokens[j].is_word) {
        split = !starts_lowercase(tokens[j]);
        break;
      }
    }
    if (split) {
      sentences.push_back({begin, end});
      begin = end;
    }
    i = end;
  }
  if (begin < tokens.size()) sentences.push_back({begin, tokens.size()});
  return sentences;
}

Document build_document(std::string id, std::string text, std::string lang) {
  std::vector<Token> tokens = tokenize(text, lang);
  std::vector<Sentence> sentences = segment_sentences(tokens);
  return Document(std::move(id), std::move(text), std::move(tokens), std::move(sentences), std::move(lang));
}

}  // namespace textmetrics
