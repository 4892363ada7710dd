#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace segrank {

// Half-open byte range into the string a span was produced from.
struct TextSpan {
    size_t begin = 0;
    size_t end = 0;
};

// Tokenizer rule table (deterministic, documented here once):
//   - ASCII letters and digits are token characters.
//   - '-' joins a token when flanked by token characters on both sides
//     ("guideline-like", "17beta-estradiol" stay whole).
//   - '.' joins a token only between two digits ("0.4", "18.5").
//   - Non-ASCII codepoints are token characters, except typographic
//     punctuation (en/em dash, curly quotes, ellipsis, bullet), which
//     separates; so "PND 18–21" tokenizes to PND / 18 / 21.
//   - Everything else (whitespace, remaining punctuation, apostrophes)
//     separates.
std::vector<std::string> tokenize(std::string_view text);

// Same segmentation, but returns byte spans into `text` instead of copies.
std::vector<TextSpan> tokenize_spans(std::string_view text);

struct Sentence {
    int index = 0;          // 0-based ordinal among retained sentences
    int paragraph = 0;      // blank-line separated block the sentence is in
    std::string text;       // trimmed surface text
    std::vector<std::string> tokens;
    std::vector<TextSpan> token_spans;  // byte spans into `text`
    TextSpan span;          // byte span of `text` within the source document
};

// Rule-based sentence splitter. A '.' ends a sentence only when the token in
// front of it is not a known abbreviation or a single initial, it is not a
// decimal point, and (after optional closing quotes/brackets) the following
// whitespace leads into an uppercase letter, a digit, or an opening
// quote/bracket. '!' and '?' end a sentence at any following whitespace.
// Blank lines always end a sentence and start a new paragraph. Sentences
// that contain no tokens are dropped.
std::vector<Sentence> segment_sentences(std::string_view raw_text);

// Abbreviations the splitter refuses to break at (compared case-insensitively,
// without the trailing dot): dosing routes, citation forms, common titles.
const std::vector<std::string>& splitter_abbreviations();

// Embedding-side pipeline: ASCII lower-casing only. Token count is preserved
// so token indices keep lining up with surface spans.
std::vector<std::string> preprocess_for_embedding(const std::vector<std::string>& tokens);

std::string to_lower_ascii(std::string_view s);

// Collapses whitespace runs to single spaces and trims the ends.
std::string normalize_whitespace(std::string_view s);

// Classifier-side pipeline: lower-case, drop stop words, Porter-stem the rest.
std::vector<std::string> preprocess_for_classifier(
    const std::vector<std::string>& tokens,
    const std::unordered_set<std::string>& stopwords);

// The stop-word list shipped with the library (mirrored verbatim in
// resources/stopwords.txt). Lower-case, one entry per word.
const std::unordered_set<std::string>& default_stopwords();

// Loads a one-word-per-line stop-word file (UTF-8, '#' comments allowed).
std::unordered_set<std::string> load_stopwords(const std::string& path);

}  // namespace segrank
