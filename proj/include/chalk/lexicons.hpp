#pragma once
// Loaders for the bundled lexicon files (documented snapshots under data/lexicons/):
//   stopwords / pronouns / negators: one token per line, '#' comments
//   sentiment valence and boosters:  token<TAB>value per line

#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "chalk/common.hpp"

namespace chalk {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::unordered_set<std::string> load_token_set(const std::string& path) {
    std::unordered_set<std::string> out;
    for (const auto& raw_line : split(read_file(path), '\n')) {
        std::string line = trim(raw_line);
        if (line.empty() || line[0] == '#') continue;
        out.insert(to_lower(line));
    }
    if (out.empty()) throw DataError("empty lexicon: " + path);
    return out;
}

inline std::unordered_map<std::string, double> load_valence_tsv(const std::string& path) {
    std::unordered_map<std::string, double> out;
    std::size_t line_no = 0;
    for (const auto& raw_line : split(read_file(path), '\n')) {
        ++line_no;
        std::string line = trim(raw_line);
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw DataError(path + ":" + std::to_string(line_no) + ": expected token<TAB>value");
        std::string token = to_lower(trim(line.substr(0, tab)));
        std::string value_str = trim(line.substr(tab + 1));
        try {
            double v = std::stod(value_str);
            out[token] = v;
        } catch (const std::exception&) {
            throw DataError(path + ":" + std::to_string(line_no) + ": bad value '" + value_str + "'");
        }
    }
    if (out.empty()) throw DataError("empty lexicon: " + path);
    return out;
}

}  // namespace chalk
