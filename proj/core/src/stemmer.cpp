#include "segrank/stemmer.hpp"

#include <array>
#include <cstddef>

namespace segrank {
namespace {

bool is_alpha_lower(char c) { return c >= 'a' && c <= 'z'; }

// A letter is a consonant unless it is a/e/i/o/u, or a 'y' preceded by a
// consonant (so "toy" has consonant y, "syzygy" starts c-v-c-v-c-v).
bool is_consonant(const std::string& w, size_t i) {
    switch (w[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !is_consonant(w, i - 1);
        default:
            return true;
    }
}

// Porter's measure m: the number of VC sequences in [C](VC)^m[V],
// computed over w[0..len).
int measure(const std::string& w, size_t len) {
    int m = 0;
    size_t i = 0;
    while (i < len && is_consonant(w, i)) ++i;       // leading [C]
    while (i < len) {
        while (i < len && !is_consonant(w, i)) ++i;  // V...
        if (i == len) break;
        ++m;                                         // ...C closes one VC
        while (i < len && is_consonant(w, i)) ++i;
    }
    return m;
}

bool contains_vowel(const std::string& w, size_t len) {
    for (size_t i = 0; i < len; ++i)
        if (!is_consonant(w, i)) return true;
    return false;
}

bool ends_double_consonant(const std::string& w) {
    const size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: stem ends cvc where the final c is not w, x or y.
bool ends_cvc(const std::string& w, size_t len) {
    if (len < 3) return false;
    if (!is_consonant(w, len - 3) || is_consonant(w, len - 2) || !is_consonant(w, len - 1))
        return false;
    const char c = w[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Rule {
    std::string_view from;
    std::string_view to;
    int min_measure;  // condition: m(stem) > min_measure
};

// Longest-match over the step's rule list; once a suffix matches, the rule's
// condition decides and no other rule in the step is tried.
bool apply_step(std::string& w, const Rule* rules, size_t n_rules) {
    for (size_t r = 0; r < n_rules; ++r) {
        const Rule& rule = rules[r];
        if (!ends_with(w, rule.from)) continue;
        const size_t stem_len = w.size() - rule.from.size();
        if (measure(w, stem_len) > rule.min_measure) {
            w.resize(stem_len);
            w.append(rule.to);
        }
        return true;
    }
    return false;
}

void step_1a(std::string& w) {
    if (ends_with(w, "sses")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ies")) {
        w.resize(w.size() - 2);
    } else if (!ends_with(w, "ss") && ends_with(w, "s")) {
        w.resize(w.size() - 1);
    }
}

void step_1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
        return;
    }
    bool fired = false;
    if (ends_with(w, "ed") && contains_vowel(w, w.size() - 2)) {
        w.resize(w.size() - 2);
        fired = true;
    } else if (ends_with(w, "ing") && contains_vowel(w, w.size() - 3)) {
        w.resize(w.size() - 3);
        fired = true;
    }
    if (!fired) return;
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w.push_back('e');
    } else if (ends_double_consonant(w)) {
        const char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') w.resize(w.size() - 1);
    } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
        w.push_back('e');
    }
}

void step_1c(std::string& w) {
    if (ends_with(w, "y") && contains_vowel(w, w.size() - 1)) w.back() = 'i';
}

constexpr std::array<Rule, 20> kStep2 = {{
    {"ational", "ate", 0}, {"tional", "tion", 0}, {"enci", "ence", 0},
    {"anci", "ance", 0},   {"izer", "ize", 0},    {"abli", "able", 0},
    {"alli", "al", 0},     {"entli", "ent", 0},   {"eli", "e", 0},
    {"ousli", "ous", 0},   {"ization", "ize", 0}, {"ation", "ate", 0},
    {"ator", "ate", 0},    {"alism", "al", 0},    {"iveness", "ive", 0},
    {"fulness", "ful", 0}, {"ousness", "ous", 0}, {"aliti", "al", 0},
    {"iviti", "ive", 0},   {"biliti", "ble", 0},
}};

constexpr std::array<Rule, 7> kStep3 = {{
    {"icate", "ic", 0}, {"ative", "", 0}, {"alize", "al", 0},
    {"iciti", "ic", 0}, {"ical", "ic", 0}, {"ful", "", 0}, {"ness", "", 0},
}};

constexpr std::array<Rule, 18> kStep4 = {{
    {"al", "", 1},    {"ance", "", 1}, {"ence", "", 1}, {"er", "", 1},
    {"ic", "", 1},    {"able", "", 1}, {"ible", "", 1}, {"ant", "", 1},
    {"ement", "", 1}, {"ment", "", 1}, {"ent", "", 1},  {"ou", "", 1},
    {"ism", "", 1},   {"ate", "", 1},  {"iti", "", 1},  {"ous", "", 1},
    {"ive", "", 1},   {"ize", "", 1},
}};

// Step 2/3/4 all match the longest suffix first; std::array order above is
// not length-sorted, so sort at match time by scanning for the longest hit.
template <size_t N>
void apply_longest(std::string& w, const std::array<Rule, N>& rules) {
    const Rule* best = nullptr;
    for (const Rule& r : rules) {
        if (ends_with(w, r.from) && (!best || r.from.size() > best->from.size()))
            best = &r;
    }
    if (!best) return;
    const size_t stem_len = w.size() - best->from.size();
    if (measure(w, stem_len) > best->min_measure) {
        w.resize(stem_len);
        w.append(best->to);
    }
}

void step_4(std::string& w) {
    // "ion" is special: m > 1 and the stem must end in s or t. It competes
    // with the plain suffix list under longest-match.
    const Rule* best = nullptr;
    for (const Rule& r : kStep4) {
        if (ends_with(w, r.from) && (!best || r.from.size() > best->from.size()))
            best = &r;
    }
    const bool ion = ends_with(w, "ion");
    if (ion && (!best || best->from.size() < 3)) {
        const size_t stem_len = w.size() - 3;
        if (stem_len >= 1 && (w[stem_len - 1] == 's' || w[stem_len - 1] == 't') &&
            measure(w, stem_len) > 1)
            w.resize(stem_len);
        return;
    }
    if (!best) return;
    const size_t stem_len = w.size() - best->from.size();
    if (measure(w, stem_len) > 1) w.resize(stem_len);
}

void step_5a(std::string& w) {
    if (!ends_with(w, "e")) return;
    const size_t stem_len = w.size() - 1;
    const int m = measure(w, stem_len);
    if (m > 1 || (m == 1 && !ends_cvc(w, stem_len))) w.resize(stem_len);
}

void step_5b(std::string& w) {
    if (w.size() >= 2 && w.back() == 'l' && ends_double_consonant(w) &&
        measure(w, w.size()) > 1)
        w.resize(w.size() - 1);
}

}  // namespace

std::string porter_stem(std::string_view word) {
    std::string w(word);
    if (w.size() <= 2) return w;
    for (char c : w)
        if (!is_alpha_lower(c)) return w;

    step_1a(w);
    step_1b(w);
    step_1c(w);
    apply_longest(w, kStep2);
    apply_longest(w, kStep3);
    step_4(w);
    step_5a(w);
    step_5b(w);
    return w;
}

}  // namespace segrank
