#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "textmetrics/text_model.hpp"

namespace textmetrics {

/// Streaming CoNLL-U reader. Each `# newdoc` comment starts a new Document
/// (the whole stream is one Document when there are none). Multiword token
/// ranges ("1-2") and empty nodes ("1.1") are skipped. Document text comes
/// from `# text = ...` comments when the token forms can be located in them,
/// otherwise it is rebuilt from FORM and SpaceAfter=No. Sentences are joined
/// by a space, or by a blank line at `# newpar`.
///
/// Throws ParseError (with the line number) on a wrong column count, a
/// non-integer or out-of-range HEAD, or out-of-sequence token IDs.
class ConlluReader {
 public:
  explicit ConlluReader(std::istream& in, std::string lang = "en", std::string source = "conllu");

  std::optional<Document> next();

 private:
  struct PendingToken {
    std::string form;
    std::optional<std::string> upos;
    std::optional<int> head;
    std::optional<std::string> deprel;
    bool space_after = true;
    std::size_t line = 0;
  };
  struct PendingSentence {
    std::vector<PendingToken> tokens;
    std::optional<std::string> text;
    bool new_paragraph = false;
    bool new_document = false;
    std::optional<std::string> document_id;
  };

  bool read_sentence(PendingSentence& out);
  Document assemble(std::vector<PendingSentence>& sentences, std::optional<std::string> id);

  std::istream& in_;
  std::string lang_;
  std::string source_;
  std::size_t line_no_ = 0;
  std::size_t doc_count_ = 0;
  std::optional<PendingSentence> carry_;
  bool eof_ = false;
};

std::vector<Document> parse_conllu(std::istream& in, std::string lang = "en");

}  // namespace textmetrics
