#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nlwidb/catalog.hpp"
#include "nlwidb/error.hpp"

namespace nlwidb {

/// A double-quoted literal lifted out of the question. `anchor` is the number
/// of whitespace-separated words of the value-free remainder that precede the
/// point where the literal was cut out.
struct ExtractedValue {
    std::string text;
    std::size_t anchor = 0;
    bool operator==(const ExtractedValue&) const = default;
};

struct Extraction {
    std::string remainder;
    std::vector<ExtractedValue> values;
};

/// `order` is the 0-based rank in the list; `position` is the index of the
/// whitespace-separated word the token came from. Escape-word removal
/// renumbers `order` and leaves `position` alone.
struct Token {
    std::size_t order = 0;
    std::string word;
    std::size_t position = 0;
    bool operator==(const Token&) const = default;
};

using TokenList = std::vector<Token>;

class UnbalancedQuote : public Error {
public:
    explicit UnbalancedQuote(std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }
    std::string_view kind() const noexcept override { return "UnbalancedQuote"; }

private:
    std::size_t offset_;
};

class UnknownWords : public Error {
public:
    explicit UnknownWords(std::vector<std::string> words);
    std::string_view kind() const noexcept override { return "UnknownWords"; }
};

Extraction extract_values(std::string_view question);

/// Whitespace split, strip `? . , ! ; :` from both ends, lowercase, drop empties.
TokenList tokenize(std::string_view text);

/// Distinct words missing from the dictionary, in first-occurrence order.
/// Empty means every token is known.
std::vector<std::string> check_words(const TokenList& tokens, const WordSet& dictionary);

TokenList remove_escape_words(const TokenList& tokens, const WordSet& escape_words);

/// The question split into display words with case and quotes kept and only
/// the punctuation set stripped.
std::vector<std::string> raw_words(std::string_view question);

std::vector<std::string> words_of(const TokenList& tokens);

} // namespace nlwidb
