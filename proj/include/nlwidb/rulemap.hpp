#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nlwidb/catalog.hpp"
#include "nlwidb/error.hpp"
#include "nlwidb/preproc.hpp"

namespace nlwidb {

struct Element {
    RuleSymbol symbol;
    std::vector<std::string> matched_phrase;
    std::size_t start_order = 0;
    std::size_t position = 0; // word position of the first matched token
    bool operator==(const Element&) const = default;
};

struct ElementSequence {
    std::vector<Element> elements;
    std::vector<ExtractedValue> values;
    /// For each value, the index into `elements` of the interval it binds to.
    std::vector<std::size_t> value_interval;
    bool operator==(const ElementSequence&) const = default;
};

/// Word-level trie over rule phrases.
class PhraseTrie {
public:
    struct Match {
        std::size_t length;
        const RuleSymbol* symbol;
    };

    PhraseTrie();

    /// Throws CatalogError on an empty or duplicate phrase.
    void insert(std::span<const std::string> phrase, RuleSymbol symbol);

    /// Longest phrase that is a prefix of `words`.
    std::optional<Match> longest_prefix(std::span<const std::string> words) const;

    const RuleSymbol* find(std::span<const std::string> phrase) const;
    std::size_t terminal_count() const noexcept { return terminals_; }

private:
    struct Node {
        std::unordered_map<std::string, std::uint32_t> children;
        std::optional<RuleSymbol> symbol;
    };
    std::vector<Node> nodes_;
    std::size_t terminals_ = 0;
};

class Unmappable : public Error {
public:
    Unmappable(std::string word, std::size_t order);
    std::size_t order() const noexcept { return order_; }
    std::string_view kind() const noexcept override { return "Unmappable"; }

private:
    std::size_t order_;
};

class DanglingValue : public Error {
public:
    explicit DanglingValue(const ExtractedValue& value);
    std::string_view kind() const noexcept override { return "DanglingValue"; }
};

PhraseTrie build_matcher(std::span<const Rule> rules);

/// Greedy segmentation that stops at the first position no rule covers.
struct Segmentation {
    std::vector<Element> elements;
    std::optional<std::size_t> stuck_at;
};

Segmentation segment(const TokenList& tokens, const PhraseTrie& matcher);

/// Longest-prefix-first mapping without backtracking. Throws Unmappable.
ElementSequence match_rules(const TokenList& tokens, const PhraseTrie& matcher);

/// Binds each value to the nearest interval element before its anchor.
/// Throws DanglingValue.
ElementSequence attach_values(ElementSequence seq, std::vector<ExtractedValue> values);

/// One line of the last-word-trimming search that a segmentation implies.
struct MappingStep {
    enum class Kind { trimmed, mapped, stuck };
    Kind kind;
    std::string text;
    std::string symbol; // set for `mapped`
    bool operator==(const MappingStep&) const = default;
};

/// Reconstructs the trimming search: for each round, every shorter candidate
/// tried after the full remaining string, then the mapped phrase.
std::vector<MappingStep> mapping_steps(const TokenList& tokens, const Segmentation& seg);

} // namespace nlwidb
