#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace tev {

// A word over the alphabet {1, ..., r+1}; the empty word is allowed.
struct Word {
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    auto operator<=>(const Word&) const = default;
};

inline std::string to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.letters[i]);
    }
    return s;
}

// Parses a comma-separated list of 1-based letters, e.g. "3,2,1".
inline Word parse_word(const std::string& csv) {
    Word w;
    if (csv.empty()) return w;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = csv.find(',', pos);
        const std::string tok =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (...) {
            throw std::invalid_argument("invalid letter '" + tok + "' in word");
        }
        if (used != tok.size() || v < 1)
            throw std::invalid_argument("invalid letter '" + tok + "' in word");
        w.letters.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return w;
}

}  // namespace tev
