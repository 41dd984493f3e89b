#include "nlwidb/rulemap.hpp"

#include "nlwidb/text.hpp"

namespace nlwidb {

PhraseTrie::PhraseTrie() : nodes_(1) {}

void PhraseTrie::insert(std::span<const std::string> phrase, RuleSymbol symbol) {
    if (phrase.empty()) throw CatalogError("cannot index an empty rule phrase");
    std::uint32_t node = 0;
    for (const auto& w : phrase) {
        auto it = nodes_[node].children.find(w);
        if (it == nodes_[node].children.end()) {
            auto next = static_cast<std::uint32_t>(nodes_.size());
            nodes_[node].children.emplace(w, next);
            nodes_.emplace_back();
            node = next;
        } else {
            node = it->second;
        }
    }
    if (nodes_[node].symbol)
        throw CatalogError("duplicate rule phrase '" + text::join(phrase) + "'", {text::join(phrase)});
    nodes_[node].symbol = std::move(symbol);
    ++terminals_;
}

std::optional<PhraseTrie::Match> PhraseTrie::longest_prefix(std::span<const std::string> words) const {
    std::optional<Match> best;
    std::uint32_t node = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        auto it = nodes_[node].children.find(words[i]);
        if (it == nodes_[node].children.end()) break;
        node = it->second;
        if (nodes_[node].symbol) best = Match{i + 1, &*nodes_[node].symbol};
    }
    return best;
}

const RuleSymbol* PhraseTrie::find(std::span<const std::string> phrase) const {
    std::uint32_t node = 0;
    for (const auto& w : phrase) {
        auto it = nodes_[node].children.find(w);
        if (it == nodes_[node].children.end()) return nullptr;
        node = it->second;
    }
    return phrase.empty() || !nodes_[node].symbol ? nullptr : &*nodes_[node].symbol;
}

Unmappable::Unmappable(std::string word, std::size_t order)
    : Error("no rule matches at token " + std::to_string(order) + " '" + word + "'", {word, std::to_string(order)}),
      order_(order) {}

DanglingValue::DanglingValue(const ExtractedValue& value)
    : Error("value \"" + value.text + "\" is not preceded by a comparison phrase", {value.text}) {}

PhraseTrie build_matcher(std::span<const Rule> rules) {
    PhraseTrie trie;
    for (const auto& r : rules) trie.insert(r.phrase, r.symbol);
    return trie;
}

Segmentation segment(const TokenList& tokens, const PhraseTrie& matcher) {
    Segmentation seg;
    const auto words = words_of(tokens);
    std::size_t p = 0;
    while (p < words.size()) {
        auto m = matcher.longest_prefix(std::span(words).subspan(p));
        if (!m) {
            seg.stuck_at = p;
            break;
        }
        seg.elements.push_back({*m->symbol,
                                std::vector<std::string>(words.begin() + p, words.begin() + p + m->length),
                                tokens[p].order, tokens[p].position});
        p += m->length;
    }
    return seg;
}

ElementSequence match_rules(const TokenList& tokens, const PhraseTrie& matcher) {
    auto seg = segment(tokens, matcher);
    if (seg.stuck_at) throw Unmappable(tokens[*seg.stuck_at].word, tokens[*seg.stuck_at].order);
    return ElementSequence{std::move(seg.elements), {}, {}};
}

ElementSequence attach_values(ElementSequence seq, std::vector<ExtractedValue> values) {
    seq.values = std::move(values);
    seq.value_interval.clear();
    for (const auto& v : seq.values) {
        std::optional<std::size_t> bound;
        for (std::size_t i = 0; i < seq.elements.size(); ++i) {
            const auto& e = seq.elements[i];
            if (e.position >= v.anchor) break;
            if (e.symbol.category == SymbolCategory::interval) bound = i;
        }
        if (!bound) throw DanglingValue(v);
        seq.value_interval.push_back(*bound);
    }
    return seq;
}

std::vector<MappingStep> mapping_steps(const TokenList& tokens, const Segmentation& seg) {
    std::vector<MappingStep> steps;
    const auto words = words_of(tokens);
    auto span_text = [&](std::size_t from, std::size_t len) {
        return text::join(std::span(words).subspan(from, len));
    };
    std::size_t p = 0;
    for (const auto& e : seg.elements) {
        const std::size_t remaining = words.size() - p;
        for (std::size_t len = remaining - 1; len >= e.matched_phrase.size() && len > 0; --len)
            steps.push_back({MappingStep::Kind::trimmed, span_text(p, len), {}});
        steps.push_back({MappingStep::Kind::mapped, span_text(p, e.matched_phrase.size()), e.symbol.name()});
        p += e.matched_phrase.size();
    }
    if (seg.stuck_at) {
        for (std::size_t len = words.size() - p - 1; len > 0; --len)
            steps.push_back({MappingStep::Kind::trimmed, span_text(p, len), {}});
        steps.push_back({MappingStep::Kind::stuck, words[p], {}});
    }
    return steps;
}

} // namespace nlwidb
