#pragma once
// Porter stemmer with the widely adopted refinements: y->i when the stem ends
// in a consonant, two-letter vowel+consonant stems treated as cvc in step 5a,
// an irregular-form pool, and words of length <= 2 left untouched. This is the
// variant that maps why->whi and keeps one->one, which the engineered n-gram
// features depend on.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>

#include "chalk/common.hpp"

namespace chalk {
namespace porter_detail {

inline bool is_consonant(std::string_view w, std::size_t i) {
    char c = w[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
    if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
    return true;
}

// m: number of vowel->consonant transitions, i.e. [C](VC)^m[V].
inline int measure(std::string_view stem) {
    int m = 0;
    bool prev_vowel = false;
    for (std::size_t i = 0; i < stem.size(); ++i) {
        bool vowel = !is_consonant(stem, i);
        if (prev_vowel && !vowel) ++m;
        prev_vowel = vowel;
    }
    return m;
}

inline bool contains_vowel(std::string_view stem) {
    for (std::size_t i = 0; i < stem.size(); ++i)
        if (!is_consonant(stem, i)) return true;
    return false;
}

inline bool ends_double_consonant(std::string_view w) {
    return w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2] && is_consonant(w, w.size() - 1);
}

inline bool ends_cvc(std::string_view w) {
    if (w.size() >= 3 && is_consonant(w, w.size() - 3) && !is_consonant(w, w.size() - 2) &&
        is_consonant(w, w.size() - 1)) {
        char last = w.back();
        if (last != 'w' && last != 'x' && last != 'y') return true;
    }
    // refinement: two-letter vowel+consonant stems count as cvc
    return w.size() == 2 && !is_consonant(w, 0) && is_consonant(w, 1);
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
    // 0 = unconditional, 1 = m(stem) > 0, 2 = m(stem) > 1, 3 = m > 1 and stem ends s/t
    int condition;
};

inline bool rule_condition(const Rule& r, std::string_view stem) {
    switch (r.condition) {
        case 0: return true;
        case 1: return measure(stem) > 0;
        case 2: return measure(stem) > 1;
        case 3: return measure(stem) > 1 && !stem.empty() && (stem.back() == 's' || stem.back() == 't');
    }
    return false;
}

// First matching suffix wins; a failed condition still ends the search.
template <std::size_t N>
inline std::string apply_rules(std::string word, const std::array<Rule, N>& rules) {
    for (const auto& r : rules) {
        if (word.size() < r.suffix.size()) continue;
        if (std::string_view(word).substr(word.size() - r.suffix.size()) != r.suffix) continue;
        std::string_view stem = std::string_view(word).substr(0, word.size() - r.suffix.size());
        if (rule_condition(r, stem)) return std::string(stem) + std::string(r.replacement);
        return word;
    }
    return word;
}

inline std::string step1a(std::string w) {
    if (w.size() == 4 && ends_with(w, "ies")) return w.substr(0, 1) + "ie";
    static constexpr std::array<Rule, 4> rules{{
        {"sses", "ss", 0}, {"ies", "i", 0}, {"ss", "ss", 0}, {"s", "", 0}}};
    return apply_rules(std::move(w), rules);
}

inline std::string step1b(std::string w) {
    if (ends_with(w, "ied")) return w.substr(0, w.size() - 3) + (w.size() == 4 ? "ie" : "i");
    if (ends_with(w, "eed")) {
        std::string stem = w.substr(0, w.size() - 3);
        return measure(stem) > 0 ? stem + "ee" : w;
    }
    std::string stem;
    if (ends_with(w, "ed")) {
        std::string cand = w.substr(0, w.size() - 2);
        if (!contains_vowel(cand)) return w;
        stem = std::move(cand);
    } else if (ends_with(w, "ing")) {
        std::string cand = w.substr(0, w.size() - 3);
        if (!contains_vowel(cand)) return w;
        stem = std::move(cand);
    } else {
        return w;
    }
    if (ends_with(stem, "at") || ends_with(stem, "bl") || ends_with(stem, "iz")) return stem + "e";
    if (ends_double_consonant(stem)) {
        char last = stem.back();
        if (last != 'l' && last != 's' && last != 'z') return stem.substr(0, stem.size() - 1);
        return stem;
    }
    if (measure(stem) == 1 && ends_cvc(stem)) return stem + "e";
    return stem;
}

inline std::string step1c(std::string w) {
    if (!ends_with(w, "y")) return w;
    std::string_view stem = std::string_view(w).substr(0, w.size() - 1);
    if (stem.size() > 1 && is_consonant(stem, stem.size() - 1)) return std::string(stem) + "i";
    return w;
}

inline std::string step2(std::string w) {
    // apply alli->al first and re-run, so radically -> radical -> (step 3) radic
    if (ends_with(w, "alli") && measure(std::string_view(w).substr(0, w.size() - 4)) > 0)
        return step2(w.substr(0, w.size() - 4) + "al");
    static constexpr std::array<Rule, 21> rules{{
        {"ational", "ate", 1}, {"tional", "tion", 1}, {"enci", "ence", 1}, {"anci", "ance", 1},
        {"izer", "ize", 1},    {"bli", "ble", 1},     {"alli", "al", 1},   {"entli", "ent", 1},
        {"eli", "e", 1},       {"ousli", "ous", 1},   {"ization", "ize", 1}, {"ation", "ate", 1},
        {"ator", "ate", 1},    {"alism", "al", 1},    {"iveness", "ive", 1}, {"fulness", "ful", 1},
        {"ousness", "ous", 1}, {"aliti", "al", 1},    {"iviti", "ive", 1},  {"biliti", "ble", 1},
        {"fulli", "ful", 1}}};
    return apply_rules(std::move(w), rules);
}

inline std::string step3(std::string w) {
    static constexpr std::array<Rule, 7> rules{{
        {"icate", "ic", 1}, {"ative", "", 1}, {"alize", "al", 1}, {"iciti", "ic", 1},
        {"ical", "ic", 1},  {"ful", "", 1},   {"ness", "", 1}}};
    return apply_rules(std::move(w), rules);
}

inline std::string step4(std::string w) {
    static constexpr std::array<Rule, 19> rules{{
        {"al", "", 2},   {"ance", "", 2}, {"ence", "", 2}, {"er", "", 2},  {"ic", "", 2},
        {"able", "", 2}, {"ible", "", 2}, {"ant", "", 2},  {"ement", "", 2}, {"ment", "", 2},
        {"ent", "", 2},  {"ion", "", 3},  {"ou", "", 2},   {"ism", "", 2}, {"ate", "", 2},
        {"iti", "", 2},  {"ous", "", 2},  {"ive", "", 2},  {"ize", "", 2}}};
    return apply_rules(std::move(w), rules);
}

inline std::string step5a(std::string w) {
    if (!ends_with(w, "e")) return w;
    std::string_view stem = std::string_view(w).substr(0, w.size() - 1);
    int m = measure(stem);
    if (m > 1) return std::string(stem);
    if (m == 1 && !ends_cvc(stem)) return std::string(stem);
    return w;
}

inline std::string step5b(std::string w) {
    if (ends_with(w, "ll") && measure(std::string_view(w).substr(0, w.size() - 1)) > 1)
        return w.substr(0, w.size() - 1);
    return w;
}

inline const std::unordered_map<std::string, std::string>& irregular_pool() {
    static const std::unordered_map<std::string, std::string> pool = {
        {"sky", "sky"},       {"skies", "sky"},   {"dying", "die"},    {"lying", "lie"},
        {"tying", "tie"},     {"news", "news"},   {"innings", "inning"}, {"inning", "inning"},
        {"outings", "outing"}, {"outing", "outing"}, {"cannings", "canning"}, {"canning", "canning"},
        {"howe", "howe"},     {"proceed", "proceed"}, {"exceed", "exceed"}, {"succeed", "succeed"}};
    return pool;
}

}  // namespace porter_detail

// Stem a single lowercase token.
inline std::string porter_stem(std::string_view word) {
    using namespace porter_detail;
    std::string w = to_lower(word);
    auto it = irregular_pool().find(w);
    if (it != irregular_pool().end()) return it->second;
    if (w.size() <= 2) return w;
    w = step1a(std::move(w));
    w = step1b(std::move(w));
    w = step1c(std::move(w));
    w = step2(std::move(w));
    w = step3(std::move(w));
    w = step4(std::move(w));
    w = step5a(std::move(w));
    w = step5b(std::move(w));
    return w;
}

}  // namespace chalk
