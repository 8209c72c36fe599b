#include "textmetrics/conllu.hpp"

#include <charconv>
#include <string_view>

#include "textmetrics/errors.hpp"
#include "textmetrics/unicode.hpp"

namespace textmetrics {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<std::string> optional_field(std::string_view f) {
  if (f == "_") return std::nullopt;
  return std::string(f);
}

bool space_after(std::string_view misc) {
  for (std::string_view item : split(misc, '|')) {
    if (item == "SpaceAfter=No") return false;
  }
  return true;
}

// "# key = value" -> (key, value); "# key" -> (key, "").
std::pair<std::string_view, std::string_view> split_comment(std::string_view line) {
  std::string_view body = trim(line.substr(1));
  const auto eq = body.find('=');
  if (eq == std::string_view::npos) return {body, {}};
  return {trim(body.substr(0, eq)), trim(body.substr(eq + 1))};
}

}  // namespace

ConlluReader::ConlluReader(std::istream& in, std::string lang, std::string source)
    : in_(in), lang_(std::move(lang)), source_(std::move(source)) {}

bool ConlluReader::read_sentence(PendingSentence& out) {
  std::string line;
  std::size_t range_end = 0;
  bool range_space_after = true;

  while (std::getline(in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    if (is_blank(line)) {
      if (out.tokens.empty()) continue;
      break;
    }

    if (line.front() == '#') {
      const auto [key, value] = split_comment(line);
      if (key.starts_with("newdoc")) {
        if (!out.tokens.empty()) throw ParseError(source_, line_no_, "newdoc comment inside a sentence");
        out.new_document = true;
        out.document_id.reset();
        if ((key == "newdoc id" || key == "newdoc") && !value.empty()) out.document_id = std::string(value);
      } else if (key.starts_with("newpar")) {
        out.new_paragraph = true;
      } else if (key == "text") {
        out.text = std::string(value);
      }
      continue;
    }

    const auto fields = split(line, '\t');
    if (fields.size() != 10) {
      throw ParseError(source_, line_no_, "expected 10 tab-separated columns, found " + std::to_string(fields.size()));
    }
    const std::string_view id = fields[0];
    if (id.find('.') != std::string_view::npos) continue;  // empty node
    if (const auto dash = id.find('-'); dash != std::string_view::npos) {
      const auto last = parse_int(id.substr(dash + 1));
      if (!last) throw ParseError(source_, line_no_, "malformed multiword token range '" + std::string(id) + "'");
      range_end = static_cast<std::size_t>(*last);
      range_space_after = space_after(fields[9]);
      continue;
    }

    const auto index = parse_int(id);
    if (!index || *index != static_cast<int>(out.tokens.size()) + 1) {
      throw ParseError(source_, line_no_, "token ID '" + std::string(id) + "' is out of sequence");
    }
    if (fields[1].empty()) throw ParseError(source_, line_no_, "empty FORM");

    PendingToken tok;
    tok.form = std::string(fields[1]);
    tok.upos = optional_field(fields[3]);
    tok.deprel = optional_field(fields[7]);
    tok.line = line_no_;
    if (fields[6] != "_") {
      tok.head = parse_int(fields[6]);
      if (!tok.head || *tok.head < 0) {
        throw ParseError(source_, line_no_, "HEAD '" + std::string(fields[6]) + "' is not a non-negative integer");
      }
    }
    const auto position = static_cast<std::size_t>(*index);
    if (position < range_end) {
      tok.space_after = false;
    } else if (position == range_end) {
      tok.space_after = range_space_after;
    } else {
      tok.space_after = space_after(fields[9]);
    }
    out.tokens.push_back(std::move(tok));
  }

  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    const PendingToken& t = out.tokens[i];
    if (t.head && (*t.head > static_cast<int>(out.tokens.size()) || *t.head == static_cast<int>(i + 1))) {
      throw ParseError(source_, t.line, "HEAD " + std::to_string(*t.head) + " is out of range for this sentence");
    }
  }
  return !out.tokens.empty();
}

Document ConlluReader::assemble(std::vector<PendingSentence>& sentences, std::optional<std::string> id) {
  std::string text;
  std::vector<Token> tokens;
  std::vector<Sentence> spans;

  for (std::size_t k = 0; k < sentences.size(); ++k) {
    PendingSentence& s = sentences[k];
    if (k > 0) text += s.new_paragraph ? "\n\n" : " ";
    const std::size_t base = text.size();

    std::vector<std::size_t> offsets;
    if (s.text) {
      const std::string_view stated = *s.text;
      std::size_t cursor = 0;
      for (const PendingToken& t : s.tokens) {
        const auto pos = stated.find(t.form, cursor);
        if (pos == std::string_view::npos || !is_blank(stated.substr(cursor, pos - cursor))) break;
        offsets.push_back(base + pos);
        cursor = pos + t.form.size();
      }
      if (offsets.size() == s.tokens.size() && is_blank(stated.substr(cursor))) {
        text += stated;
      } else {
        offsets.clear();
      }
    }
    if (offsets.empty()) {
      for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        offsets.push_back(text.size());
        text += s.tokens[i].form;
        if (i + 1 < s.tokens.size() && s.tokens[i].space_after) text += ' ';
      }
    }

    const std::size_t begin = tokens.size();
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      PendingToken& p = s.tokens[i];
      Token t;
      t.start = offsets[i];
      t.end = offsets[i] + p.form.size();
      t.is_word = unicode::contains_alnum(p.form);
      t.text = std::move(p.form);
      t.upos = std::move(p.upos);
      t.head = p.head;
      t.deprel = std::move(p.deprel);
      tokens.push_back(std::move(t));
    }
    spans.push_back({begin, tokens.size()});
  }

  ++doc_count_;
  return Document(id ? std::move(*id) : std::to_string(doc_count_), std::move(text), std::move(tokens),
                  std::move(spans), lang_);
}

std::optional<Document> ConlluReader::next() {
  std::vector<PendingSentence> sentences;
  std::optional<std::string> doc_id;
  if (carry_) {
    doc_id = carry_->document_id;
    sentences.push_back(std::move(*carry_));
    carry_.reset();
  }

  while (!eof_) {
    PendingSentence s;
    if (!read_sentence(s)) {
      eof_ = true;
      break;
    }
    if (s.new_document && !sentences.empty()) {
      carry_ = std::move(s);
      return assemble(sentences, std::move(doc_id));
    }
    if (s.new_document) doc_id = s.document_id;
    sentences.push_back(std::move(s));
  }
  if (sentences.empty()) return std::nullopt;
  return assemble(sentences, std::move(doc_id));
}

std::vector<Document> parse_conllu(std::istream& in, std::string lang) {
  ConlluReader reader(in, std::move(lang));
  std::vector<Document> docs;
  while (auto doc = reader.next()) docs.push_back(std::move(*doc));
  return docs;
}

}  // namespace textmetrics
