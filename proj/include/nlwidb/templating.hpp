#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "nlwidb/catalog.hpp"
#include "nlwidb/error.hpp"
#include "nlwidb/rulemap.hpp"

namespace nlwidb {

/// Element tallies in slot order [attribute, table, and, aggregate, interval, value].
struct ElementCounts {
    std::size_t attribute = 0;
    std::size_t table = 0;
    std::size_t connector = 0;
    std::size_t aggregate = 0;
    std::size_t interval = 0;
    std::size_t value = 0;

    std::array<std::size_t, 6> slots() const {
        return {attribute, table, connector, aggregate, interval, value};
    }
    bool operator==(const ElementCounts&) const = default;
};

/// Six slots of '0', '1' or 'm' (two or more).
class TemplateCode {
public:
    explicit TemplateCode(const ElementCounts& counts);

    char operator[](std::size_t slot) const { return slots_[slot]; }
    std::string str() const { return {slots_.begin(), slots_.end()}; }
    bool operator==(const TemplateCode&) const = default;

private:
    std::array<char, 6> slots_{};
};

class NoTemplate : public Error {
public:
    explicit NoTemplate(const TemplateCode& code);
    std::string_view kind() const noexcept override { return "NoTemplate"; }
};

ElementCounts count_elements(const ElementSequence& seq);

TemplateCode encode_template(const ElementCounts& counts);

bool pattern_accepts(std::string_view pattern, const ElementCounts& counts);

/// First registry entry whose pattern accepts `counts`. Throws NoTemplate.
Builder match_template(const ElementCounts& counts, std::span<const TemplateEntry> registry);

} // namespace nlwidb
