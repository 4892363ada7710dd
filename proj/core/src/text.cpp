#include "segrank/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "segrank/errors.hpp"
#include "segrank/stemmer.hpp"

namespace segrank {
namespace {

bool is_ascii_alnum(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Decodes one UTF-8 codepoint at s[i]; returns its value and byte length.
// Malformed bytes are treated as one-byte opaque characters.
std::pair<uint32_t, size_t> decode_utf8(std::string_view s, size_t i) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) return {b0, 1};
    size_t len = 0;
    uint32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) { len = 2; cp = b0 & 0x1F; }
    else if ((b0 & 0xF0) == 0xE0) { len = 3; cp = b0 & 0x0F; }
    else if ((b0 & 0xF8) == 0xF0) { len = 4; cp = b0 & 0x07; }
    else return {b0, 1};
    if (i + len > s.size()) return {b0, 1};
    for (size_t k = 1; k < len; ++k) {
        const unsigned char bk = static_cast<unsigned char>(s[i + k]);
        if ((bk & 0xC0) != 0x80) return {b0, 1};
        cp = (cp << 6) | (bk & 0x3F);
    }
    return {cp, len};
}

// Typographic punctuation that separates tokens even though it is non-ASCII.
bool is_separator_codepoint(uint32_t cp) {
    switch (cp) {
        case 0x2013: case 0x2014: case 0x2015:  // en dash, em dash, horizontal bar
        case 0x2018: case 0x2019:               // curly single quotes
        case 0x201C: case 0x201D:               // curly double quotes
        case 0x2026:                            // ellipsis
        case 0x2022:                            // bullet
            return true;
        default:
            return false;
    }
}

// Does a token character start at position i?
bool token_starts_at(std::string_view s, size_t i) {
    if (i >= s.size()) return false;
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) return is_ascii_alnum(c);
    auto [cp, len] = decode_utf8(s, i);
    (void)len;
    return !is_separator_codepoint(cp);
}

}  // namespace

std::vector<TextSpan> tokenize_spans(std::string_view text) {
    std::vector<TextSpan> spans;
    const size_t n = text.size();
    size_t i = 0;
    size_t tok_start = std::string_view::npos;

    auto close = [&](size_t end) {
        if (tok_start != std::string_view::npos) {
            spans.push_back({tok_start, end});
            tok_start = std::string_view::npos;
        }
    };

    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        bool is_token_char;
        size_t len = 1;
        if (c < 0x80) {
            if (is_ascii_alnum(c)) {
                is_token_char = true;
            } else if (c == '-') {
                is_token_char = tok_start != std::string_view::npos &&
                                token_starts_at(text, i + 1);
            } else if (c == '.') {
                is_token_char = i > 0 && is_ascii_digit(static_cast<unsigned char>(text[i - 1])) &&
                                i + 1 < n && is_ascii_digit(static_cast<unsigned char>(text[i + 1]));
            } else {
                is_token_char = false;
            }
        } else {
            auto [cp, l] = decode_utf8(text, i);
            len = l;
            is_token_char = !is_separator_codepoint(cp);
        }
        if (is_token_char) {
            if (tok_start == std::string_view::npos) tok_start = i;
        } else {
            close(i);
        }
        i += len;
    }
    close(n);
    return spans;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    for (const TextSpan& s : tokenize_spans(text))
        out.emplace_back(text.substr(s.begin, s.end - s.begin));
    return out;
}

const std::vector<std::string>& splitter_abbreviations() {
    // Compared against the letter run in front of a '.', lower-cased. Dotted
    // forms like "p.o." or "i.p." are already safe through the single-letter
    // rule; this list covers the multi-letter ones.
    static const std::vector<std::string> kAbbrevs = {
        "al",  // et al.
        "approx", "ca", "cf", "dr", "ed", "eds", "eg", "etc", "fig", "figs",
        "ie", "inc", "ltd", "mr", "mrs", "ms", "no", "nos", "prof", "resp",
        "sp", "spp", "st", "vs",
    };
    return kAbbrevs;
}

namespace {

bool is_known_abbreviation(std::string_view run) {
    if (run.size() == 1) return true;  // initials and dotted abbreviations
    std::string lower = to_lower_ascii(run);
    const auto& abbrevs = splitter_abbreviations();
    return std::find(abbrevs.begin(), abbrevs.end(), lower) != abbrevs.end();
}

bool is_closing_char(unsigned char c) {
    return c == ')' || c == ']' || c == '"' || c == '\'';
}

// Can a new sentence start at position i? Uppercase, digit, or an opening
// quote/bracket (ASCII or typographic).
bool sentence_start_at(std::string_view s, size_t i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if ((c >= 'A' && c <= 'Z') || is_ascii_digit(c)) return true;
    if (c == '(' || c == '[' || c == '"' || c == '\'') return true;
    auto [cp, len] = decode_utf8(s, i);
    (void)len;
    return cp == 0x2018 || cp == 0x201C;
}

struct RawSentence {
    size_t begin;
    size_t end;
    int paragraph;
};

void split_paragraph(std::string_view text, size_t pbegin, size_t pend, int paragraph,
                     std::vector<RawSentence>& out) {
    size_t start = pbegin;
    while (start < pend && is_space(static_cast<unsigned char>(text[start]))) ++start;

    size_t i = start;
    while (i < pend) {
        const char c = text[i];
        if (c != '.' && c != '!' && c != '?') {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < pend && (text[j] == '.' || text[j] == '!' || text[j] == '?')) ++j;

        bool candidate = true;
        if (c == '.' && j - i == 1) {
            // Decimal point.
            if (i > pbegin && is_ascii_digit(static_cast<unsigned char>(text[i - 1])) &&
                j < pend && is_ascii_digit(static_cast<unsigned char>(text[j])))
                candidate = false;
            // Abbreviation or initial in front of the dot.
            if (candidate) {
                size_t r = i;
                while (r > pbegin && std::isalpha(static_cast<unsigned char>(text[r - 1]))) --r;
                if (r < i && is_known_abbreviation(text.substr(r, i - r))) candidate = false;
            }
        }

        if (candidate) {
            size_t k = j;
            while (k < pend && is_closing_char(static_cast<unsigned char>(text[k]))) ++k;
            bool boundary = false;
            if (k == pend) {
                boundary = true;
            } else if (is_space(static_cast<unsigned char>(text[k]))) {
                size_t m = k;
                while (m < pend && is_space(static_cast<unsigned char>(text[m]))) ++m;
                if (m == pend) {
                    boundary = true;
                } else if (c != '.') {
                    boundary = true;  // '!' / '?' split at any whitespace
                } else {
                    boundary = sentence_start_at(text, m);
                }
            }
            if (boundary) {
                if (k > start) out.push_back({start, k, paragraph});
                start = k;
                while (start < pend && is_space(static_cast<unsigned char>(text[start]))) ++start;
                i = start;
                continue;
            }
        }
        i = j;
    }
    if (start < pend) out.push_back({start, pend, paragraph});
}

}  // namespace

std::vector<Sentence> segment_sentences(std::string_view raw_text) {
    // Paragraphs are maximal runs of non-blank lines.
    std::vector<RawSentence> raw;
    {
        size_t pos = 0;
        int paragraph = 0;
        size_t pbegin = std::string_view::npos;
        size_t pend = 0;
        auto flush = [&]() {
            if (pbegin != std::string_view::npos) {
                split_paragraph(raw_text, pbegin, pend, paragraph, raw);
                ++paragraph;
                pbegin = std::string_view::npos;
            }
        };
        while (pos <= raw_text.size()) {
            size_t eol = raw_text.find('\n', pos);
            if (eol == std::string_view::npos) eol = raw_text.size();
            std::string_view line = raw_text.substr(pos, eol - pos);
            const bool blank = std::all_of(line.begin(), line.end(), [](char ch) {
                return is_space(static_cast<unsigned char>(ch));
            });
            if (blank) {
                flush();
            } else {
                if (pbegin == std::string_view::npos) pbegin = pos;
                pend = eol;
            }
            if (eol == raw_text.size()) break;
            pos = eol + 1;
        }
        flush();
    }

    std::vector<Sentence> sentences;
    for (const RawSentence& rs : raw) {
        size_t b = rs.begin, e = rs.end;
        while (b < e && is_space(static_cast<unsigned char>(raw_text[b]))) ++b;
        while (e > b && is_space(static_cast<unsigned char>(raw_text[e - 1]))) --e;
        if (b >= e) continue;
        Sentence s;
        s.text.assign(raw_text.substr(b, e - b));
        s.tokens = tokenize(s.text);
        if (s.tokens.empty()) continue;
        s.token_spans = tokenize_spans(s.text);
        s.span = {b, e};
        s.paragraph = rs.paragraph;
        s.index = static_cast<int>(sentences.size());
        sentences.push_back(std::move(s));
    }
    return sentences;
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

std::string normalize_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_ws = true;  // swallows leading whitespace
    for (char c : s) {
        if (is_space(static_cast<unsigned char>(c))) {
            in_ws = true;
        } else {
            if (in_ws && !out.empty()) out.push_back(' ');
            in_ws = false;
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::string> preprocess_for_embedding(const std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(to_lower_ascii(t));
    return out;
}

std::vector<std::string> preprocess_for_classifier(
    const std::vector<std::string>& tokens,
    const std::unordered_set<std::string>& stopwords) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        std::string lower = to_lower_ascii(t);
        if (stopwords.count(lower)) continue;
        out.push_back(porter_stem(lower));
    }
    return out;
}

const std::unordered_set<std::string>& default_stopwords() {
    // 199 common English function words. resources/stopwords.txt carries the
    // same list; a test keeps the two in sync. Deliberately excludes spelled
    // out numbers ("two", "three") and domain-bearing single letters.
    static const std::unordered_set<std::string> kStopwords = {
        "a", "about", "above", "after", "again", "against", "all", "almost",
        "alone", "along", "already", "also", "although", "always", "am",
        "among", "an", "and", "another", "any", "anyone", "anything",
        "anywhere", "are", "around", "as", "at", "back", "be", "became",
        "because", "become", "becomes", "been", "before", "behind", "being",
        "below", "between", "both", "but", "by", "can", "cannot", "could",
        "did", "do", "does", "doing", "down", "during", "each", "either",
        "enough", "even", "ever", "every", "everyone", "everything",
        "everywhere", "few", "for", "from", "further", "had", "has", "have",
        "having", "he", "her", "here", "hers", "herself", "him", "himself",
        "his", "how", "however", "i", "if", "in", "indeed", "instead",
        "into", "is", "it", "its", "itself", "just", "least", "less", "made",
        "many", "may", "me", "might", "more", "moreover", "most", "mostly",
        "much", "must", "my", "myself", "namely", "neither", "never",
        "nevertheless", "next", "no", "nobody", "none", "nor", "not",
        "nothing", "now", "nowhere", "of", "off", "often", "on", "once",
        "only", "onto", "or", "other", "others", "otherwise", "our", "ours",
        "ourselves", "out", "over", "own", "per", "perhaps", "rather",
        "same", "she", "should", "since", "so", "some", "somehow", "someone",
        "something", "sometimes", "somewhere", "still", "such", "than",
        "that", "the", "their", "theirs", "them", "themselves", "then",
        "there", "therefore", "these", "they", "this", "those", "through",
        "thus", "to", "together", "too", "toward", "towards", "under",
        "until", "up", "upon", "us", "very", "was", "we", "well", "were",
        "what", "whatever", "when", "whenever", "where", "whereas",
        "wherever", "whether", "which", "while", "who", "whoever", "whole",
        "whom", "whose", "why", "will", "with", "within", "without",
        "would", "yet", "you", "your", "yours", "yourself", "yourselves",
    };
    return kStopwords;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open stop-word file: " + path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t");
        std::string w = line.substr(b, e - b + 1);
        if (w.empty() || w[0] == '#') continue;
        words.insert(to_lower_ascii(w));
    }
    return words;
}

}  // namespace segrank
