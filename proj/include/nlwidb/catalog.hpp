#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nlwidb/error.hpp"

namespace nlwidb {

using WordSet = std::set<std::string>;

enum class KeyKind { nil, primary, foreign };

enum class SymbolCategory { table, attribute, connector, aggregate, interval };

enum class AggregateFunction { max, min, count };

enum class Comparison { eq, lt, gt, le, ge };

enum class Builder { attribute_select, table_select, aggregate_select, conditional_select };

std::string_view to_string(KeyKind k);
std::string_view to_string(SymbolCategory c);
std::string_view to_string(AggregateFunction f);
std::string_view to_string(Comparison c);
std::string_view to_string(Builder b);

std::optional<KeyKind> parse_key_kind(std::string_view s);
std::optional<SymbolCategory> parse_category(std::string_view s);
std::optional<AggregateFunction> parse_aggregate(std::string_view s);
std::optional<Comparison> parse_comparison(std::string_view s);
std::optional<Builder> parse_builder(std::string_view s);

/// What a rule phrase stands for. Only the fields relevant to `category` are
/// meaningful: `table` for table symbols, `table` + `attribute` for attribute
/// symbols, `aggregate` and `comparison` for their categories.
struct RuleSymbol {
    SymbolCategory category = SymbolCategory::connector;
    std::string table;
    std::string attribute;
    AggregateFunction aggregate = AggregateFunction::max;
    Comparison comparison = Comparison::eq;

    static RuleSymbol make_table(std::string table);
    static RuleSymbol make_attribute(std::string table, std::string attribute);
    static RuleSymbol make_connector();
    static RuleSymbol make_aggregate(AggregateFunction f);
    static RuleSymbol make_interval(Comparison c);

    /// Display name in the `table_department` / `attribute_department_code` /
    /// `and_s` / `aggregate_max` / `interval_=` style.
    std::string name() const;

    bool operator==(const RuleSymbol& other) const;
};

struct Rule {
    std::vector<std::string> phrase;
    RuleSymbol symbol;

    std::string phrase_text() const;
    bool operator==(const Rule&) const = default;
};

struct AttributeMeta {
    std::string name;
    KeyKind key = KeyKind::nil;
    bool operator==(const AttributeMeta&) const = default;
};

struct TableMeta {
    std::string name;
    std::vector<AttributeMeta> attributes;
    std::optional<std::string> default_attribute;

    const AttributeMeta* find_attribute(std::string_view attribute) const;
    bool operator==(const TableMeta&) const = default;
};

struct SchemaCatalog {
    std::vector<TableMeta> tables;

    const TableMeta* find_table(std::string_view table) const;
    bool operator==(const SchemaCatalog&) const = default;
};

/// One registry entry. `pattern` holds six slot patterns over the counts
/// [attribute, table, and, aggregate, interval, value]:
/// '0' none, '1' exactly one, 'm' two or more, '+' at least one, '*' any.
struct TemplateEntry {
    std::string pattern;
    Builder builder = Builder::attribute_select;
    bool operator==(const TemplateEntry&) const = default;
};

using Row = std::map<std::string, std::string>;

struct Dataset {
    std::map<std::string, std::vector<Row>> tables;
    bool operator==(const Dataset&) const = default;
};

struct Catalog {
    WordSet dictionary;
    WordSet escape_words;
    std::vector<Rule> rules;
    SchemaCatalog schema;
    std::vector<TemplateEntry> templates;
    Dataset data;

    bool operator==(const Catalog&) const = default;
};

/// The four-entry registry used when a configuration does not override it.
std::vector<TemplateEntry> shipped_templates();

/// Parses and validates a JSON configuration document. Throws CatalogError
/// on malformed input or on any invariant violation; the error detail lists
/// every violation found.
Catalog load_catalog(std::string_view document);
Catalog load_catalog_file(const std::filesystem::path& path);

/// Serializes to the same JSON layout load_catalog accepts.
std::string render_catalog(const Catalog& catalog);

/// Human-readable description of every broken invariant; empty when valid.
std::vector<std::string> validate_catalog(const Catalog& catalog);

} // namespace nlwidb
