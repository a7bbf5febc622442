#pragma once
// Tokenization, n-gram vocabulary construction and TF-IDF vectorization.
// idf_j = ln((1+N)/(1+df_j)) + 1, raw in-document counts, L2-normalized vectors.

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "chalk/common.hpp"
#include "chalk/porter.hpp"
#include "chalk/sparse.hpp"

namespace chalk {

struct PreprocessConfig {
    std::unordered_set<std::string> stopwords;  // matched before stemming
    bool stem = true;
    bool lowercase = true;
};

// Raw word tokens: maximal runs of letters/digits/apostrophes, lowercased by default.
// This is the pre-stopword view used by pronoun detection and sentiment.
inline std::vector<std::string> tokenize_raw(std::string_view text, bool lowercase = true) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalnum(u) || c == '\'') {
            cur.push_back(lowercase ? static_cast<char>(std::tolower(u)) : c);
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

// Full normalization: tokenize, drop stopwords, strip apostrophes, stem.
inline std::vector<std::string> normalize_tokens(std::string_view text, const PreprocessConfig& cfg) {
    std::vector<std::string> out;
    for (auto& tok : tokenize_raw(text, cfg.lowercase)) {
        if (cfg.stopwords.count(tok)) continue;
        std::string bare;
        bare.reserve(tok.size());
        for (char c : tok)
            if (c != '\'') bare.push_back(c);
        if (bare.empty()) continue;
        out.push_back(cfg.stem ? porter_stem(bare) : bare);
    }
    return out;
}

struct NgramVocabulary {
    std::vector<std::string> grams;                        // index -> n-gram (lexicographic)
    std::vector<std::uint32_t> document_frequency;         // per index
    std::unordered_map<std::string, std::uint32_t> index;  // n-gram -> index
    std::size_t n_documents = 0;
    int n_min = 1;
    int n_max = 1;

    std::size_t size() const { return grams.size(); }
};

namespace textprep_detail {

template <class Fn>
inline void for_each_ngram(const std::vector<std::string>& tokens, int n_min, int n_max, Fn&& fn) {
    for (int n = n_min; n <= n_max; ++n) {
        if (tokens.size() < static_cast<std::size_t>(n)) break;
        for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
            std::string g = tokens[i];
            for (int j = 1; j < n; ++j) {
                g.push_back(' ');
                g += tokens[i + j];
            }
            fn(std::move(g));
        }
    }
}

}  // namespace textprep_detail

inline NgramVocabulary fit_ngram_vocabulary(const std::vector<std::vector<std::string>>& docs,
                                            int n_min, int n_max, int min_df = 1) {
    if (docs.empty()) throw DataError("fit_ngram_vocabulary: empty corpus");
    if (n_min > n_max || n_min < 1) throw DataError("fit_ngram_vocabulary: bad n-gram range");
    std::map<std::string, std::uint32_t> df;  // ordered map gives lexicographic indices
    for (const auto& doc : docs) {
        std::unordered_set<std::string> seen;
        textprep_detail::for_each_ngram(doc, n_min, n_max,
                                        [&](std::string g) { seen.insert(std::move(g)); });
        for (const auto& g : seen) ++df[g];
    }
    NgramVocabulary vocab;
    vocab.n_documents = docs.size();
    vocab.n_min = n_min;
    vocab.n_max = n_max;
    for (auto& [gram, count] : df) {
        if (count < static_cast<std::uint32_t>(min_df)) continue;
        vocab.index.emplace(gram, static_cast<std::uint32_t>(vocab.grams.size()));
        vocab.grams.push_back(gram);
        vocab.document_frequency.push_back(count);
    }
    return vocab;
}

struct TfidfModel {
    NgramVocabulary vocabulary;
    std::vector<double> idf;
};

inline TfidfModel tfidf_fit(const NgramVocabulary& vocab) {
    TfidfModel model;
    model.vocabulary = vocab;
    model.idf.resize(vocab.size());
    const double n = static_cast<double>(vocab.n_documents);
    for (std::size_t j = 0; j < vocab.size(); ++j)
        model.idf[j] = std::log((1.0 + n) / (1.0 + vocab.document_frequency[j])) + 1.0;
    return model;
}

inline TfidfModel tfidf_fit(const std::vector<std::vector<std::string>>& docs,
                            const NgramVocabulary& vocab) {
    if (docs.empty()) throw DataError("tfidf_fit: empty corpus");
    return tfidf_fit(vocab);
}

inline SparseVector tfidf_transform(const TfidfModel& model, const std::vector<std::string>& doc) {
    std::map<std::uint32_t, double> counts;
    textprep_detail::for_each_ngram(doc, model.vocabulary.n_min, model.vocabulary.n_max,
                                    [&](std::string g) {
                                        auto it = model.vocabulary.index.find(g);
                                        if (it != model.vocabulary.index.end()) counts[it->second] += 1.0;
                                    });
    SparseVector v;
    for (auto& [col, count] : counts) v.push(col, count * model.idf[col]);
    v.l2_normalize();
    return v;
}

// Text-in, vector-out bundle so downstream models carry their preprocessing.
struct TextVectorizer {
    PreprocessConfig cfg;
    TfidfModel model;

    SparseVector vectorize(std::string_view text) const {
        return tfidf_transform(model, normalize_tokens(text, cfg));
    }
};

inline TextVectorizer fit_text_vectorizer(const std::vector<std::string>& texts,
                                          const PreprocessConfig& cfg, int n_min, int n_max,
                                          int min_df = 1) {
    std::vector<std::vector<std::string>> docs;
    docs.reserve(texts.size());
    for (const auto& t : texts) docs.push_back(normalize_tokens(t, cfg));
    TextVectorizer tv;
    tv.cfg = cfg;
    tv.model = tfidf_fit(fit_ngram_vocabulary(docs, n_min, n_max, min_df));
    return tv;
}

// --- versioned JSON serialization ---

inline nlohmann::ordered_json tfidf_to_json(const TfidfModel& model) {
    nlohmann::ordered_json j;
    j["format"] = "chalk.tfidf";
    j["version"] = 1;
    j["n_documents"] = model.vocabulary.n_documents;
    j["n_min"] = model.vocabulary.n_min;
    j["n_max"] = model.vocabulary.n_max;
    j["grams"] = model.vocabulary.grams;
    j["document_frequency"] = model.vocabulary.document_frequency;
    j["idf"] = model.idf;
    return j;
}

inline TfidfModel tfidf_from_json(const nlohmann::json& j) {
    if (j.value("format", "") != "chalk.tfidf")
        throw DataError("tfidf_from_json: not a chalk.tfidf document");
    TfidfModel model;
    model.vocabulary.n_documents = j.at("n_documents").get<std::size_t>();
    model.vocabulary.n_min = j.at("n_min").get<int>();
    model.vocabulary.n_max = j.at("n_max").get<int>();
    model.vocabulary.grams = j.at("grams").get<std::vector<std::string>>();
    model.vocabulary.document_frequency = j.at("document_frequency").get<std::vector<std::uint32_t>>();
    model.idf = j.at("idf").get<std::vector<double>>();
    for (std::size_t i = 0; i < model.vocabulary.grams.size(); ++i)
        model.vocabulary.index.emplace(model.vocabulary.grams[i], static_cast<std::uint32_t>(i));
    return model;
}

inline nlohmann::ordered_json preprocess_to_json(const PreprocessConfig& cfg) {
    std::vector<std::string> stop(cfg.stopwords.begin(), cfg.stopwords.end());
    std::sort(stop.begin(), stop.end());
    nlohmann::ordered_json j;
    j["stopwords"] = stop;
    j["stem"] = cfg.stem;
    j["lowercase"] = cfg.lowercase;
    return j;
}

inline PreprocessConfig preprocess_from_json(const nlohmann::json& j) {
    PreprocessConfig cfg;
    for (const auto& s : j.at("stopwords")) cfg.stopwords.insert(s.get<std::string>());
    cfg.stem = j.at("stem").get<bool>();
    cfg.lowercase = j.at("lowercase").get<bool>();
    return cfg;
}

inline nlohmann::ordered_json vectorizer_to_json(const TextVectorizer& tv) {
    nlohmann::ordered_json j;
    j["format"] = "chalk.vectorizer";
    j["version"] = 1;
    j["preprocess"] = preprocess_to_json(tv.cfg);
    j["tfidf"] = tfidf_to_json(tv.model);
    return j;
}

inline TextVectorizer vectorizer_from_json(const nlohmann::json& j) {
    if (j.value("format", "") != "chalk.vectorizer")
        throw DataError("vectorizer_from_json: not a chalk.vectorizer document");
    TextVectorizer tv;
    tv.cfg = preprocess_from_json(j.at("preprocess"));
    tv.model = tfidf_from_json(j.at("tfidf"));
    return tv;
}

}  // namespace chalk
