#include "nlwidb/templating.hpp"

namespace nlwidb {

namespace {

char slot_code(std::size_t n) { return n == 0 ? '0' : n == 1 ? '1' : 'm'; }

bool slot_accepts(char pattern, std::size_t n) {
    switch (pattern) {
    case '0': return n == 0;
    case '1': return n == 1;
    case 'm': return n >= 2;
    case '+': return n >= 1;
    case '*': return true;
    default: return false;
    }
}

} // namespace

TemplateCode::TemplateCode(const ElementCounts& counts) {
    auto s = counts.slots();
    for (std::size_t i = 0; i < s.size(); ++i) slots_[i] = slot_code(s[i]);
}

NoTemplate::NoTemplate(const TemplateCode& code)
    : Error("no SQL template accepts code " + code.str(), {code.str()}) {}

ElementCounts count_elements(const ElementSequence& seq) {
    ElementCounts c;
    for (const auto& e : seq.elements) {
        switch (e.symbol.category) {
        case SymbolCategory::attribute: ++c.attribute; break;
        case SymbolCategory::table: ++c.table; break;
        case SymbolCategory::connector: ++c.connector; break;
        case SymbolCategory::aggregate: ++c.aggregate; break;
        case SymbolCategory::interval: ++c.interval; break;
        }
    }
    c.value = seq.values.size();
    return c;
}

TemplateCode encode_template(const ElementCounts& counts) { return TemplateCode(counts); }

bool pattern_accepts(std::string_view pattern, const ElementCounts& counts) {
    if (pattern.size() != 6) return false;
    auto s = counts.slots();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!slot_accepts(pattern[i], s[i])) return false;
    return true;
}

Builder match_template(const ElementCounts& counts, std::span<const TemplateEntry> registry) {
    for (const auto& entry : registry)
        if (pattern_accepts(entry.pattern, counts)) return entry.builder;
    throw NoTemplate(encode_template(counts));
}

} // namespace nlwidb
