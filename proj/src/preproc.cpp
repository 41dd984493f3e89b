#include "nlwidb/preproc.hpp"

#include <algorithm>

#include "nlwidb/text.hpp"

namespace nlwidb {

namespace {

constexpr std::string_view kStripped = "?.,!;:";

std::string_view strip_punctuation(std::string_view w) {
    while (!w.empty() && kStripped.find(w.front()) != std::string_view::npos) w.remove_prefix(1);
    while (!w.empty() && kStripped.find(w.back()) != std::string_view::npos) w.remove_suffix(1);
    return w;
}

} // namespace

UnbalancedQuote::UnbalancedQuote(std::size_t offset)
    : Error("unbalanced double quote at offset " + std::to_string(offset), {std::to_string(offset)}),
      offset_(offset) {}

UnknownWords::UnknownWords(std::vector<std::string> words)
    : Error("words not in the data dictionary: " + text::join(words, ", "), std::move(words)) {}

Extraction extract_values(std::string_view question) {
    Extraction out;
    std::size_t i = 0;
    while (i < question.size()) {
        std::size_t open = question.find('"', i);
        if (open == std::string_view::npos) {
            out.remainder.append(question.substr(i));
            break;
        }
        std::size_t close = question.find('"', open + 1);
        if (close == std::string_view::npos) throw UnbalancedQuote(open);
        out.remainder.append(question.substr(i, open - i));
        out.values.push_back({std::string(question.substr(open + 1, close - open - 1)),
                              text::split_whitespace(out.remainder).size()});
        i = close + 1;
    }
    return out;
}

TokenList tokenize(std::string_view input) {
    TokenList tokens;
    auto words = text::split_whitespace(input);
    for (std::size_t pos = 0; pos < words.size(); ++pos) {
        auto w = strip_punctuation(words[pos]);
        if (w.empty()) continue;
        tokens.push_back({tokens.size(), text::to_lower(w), pos});
    }
    return tokens;
}

std::vector<std::string> check_words(const TokenList& tokens, const WordSet& dictionary) {
    std::vector<std::string> unknown;
    for (const auto& t : tokens)
        if (!dictionary.contains(t.word) && std::find(unknown.begin(), unknown.end(), t.word) == unknown.end())
            unknown.push_back(t.word);
    return unknown;
}

TokenList remove_escape_words(const TokenList& tokens, const WordSet& escape_words) {
    TokenList out;
    for (const auto& t : tokens)
        if (!escape_words.contains(t.word)) out.push_back({out.size(), t.word, t.position});
    return out;
}

std::vector<std::string> raw_words(std::string_view question) {
    std::vector<std::string> out;
    for (const auto& w : text::split_whitespace(question))
        if (auto s = strip_punctuation(w); !s.empty()) out.emplace_back(s);
    return out;
}

std::vector<std::string> words_of(const TokenList& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.word);
    return out;
}

} // namespace nlwidb
