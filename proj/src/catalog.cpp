#include "nlwidb/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nlwidb/text.hpp"

namespace nlwidb {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(std::string_view s, const std::pair<Enum, std::string_view> (&names)[N]) {
    for (const auto& [value, name] : names)
        if (name == s) return value;
    return std::nullopt;
}

template <typename Enum, std::size_t N>
std::string_view name_of(Enum e, const std::pair<Enum, std::string_view> (&names)[N]) {
    for (const auto& [value, name] : names)
        if (value == e) return name;
    return "?";
}

constexpr std::pair<KeyKind, std::string_view> kKeyNames[] = {
    {KeyKind::nil, "nil"}, {KeyKind::primary, "primary"}, {KeyKind::foreign, "foreign"}};

constexpr std::pair<SymbolCategory, std::string_view> kCategoryNames[] = {
    {SymbolCategory::table, "table"},
    {SymbolCategory::attribute, "attribute"},
    {SymbolCategory::connector, "and"},
    {SymbolCategory::aggregate, "aggregate"},
    {SymbolCategory::interval, "interval"}};

constexpr std::pair<AggregateFunction, std::string_view> kAggregateNames[] = {
    {AggregateFunction::max, "max"}, {AggregateFunction::min, "min"}, {AggregateFunction::count, "count"}};

constexpr std::pair<Comparison, std::string_view> kComparisonNames[] = {
    {Comparison::eq, "="}, {Comparison::lt, "<"}, {Comparison::gt, ">"},
    {Comparison::le, "<="}, {Comparison::ge, ">="}};

constexpr std::pair<Builder, std::string_view> kBuilderNames[] = {
    {Builder::attribute_select, "AttributeSelect"},
    {Builder::table_select, "TableSelect"},
    {Builder::aggregate_select, "AggregateSelect"},
    {Builder::conditional_select, "ConditionalSelect"}};

std::string underscored(std::string_view s) {
    std::string out(s);
    std::replace(out.begin(), out.end(), '-', '_');
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

[[noreturn]] void fail(const std::string& message) {
    throw CatalogError("invalid configuration: " + message);
}

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where + " is missing '" + key + "'");
    return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) fail(where + ": '" + key + "' must be a string");
    return v.get<std::string>();
}

WordSet parse_words(const json& doc, const char* key) {
    WordSet words;
    auto it = doc.find(key);
    if (it == doc.end()) return words;
    if (!it->is_array()) fail(std::string("'") + key + "' must be an array of strings");
    for (const auto& w : *it) {
        if (!w.is_string()) fail(std::string("'") + key + "' must be an array of strings");
        words.insert(text::to_lower(w.get<std::string>()));
    }
    return words;
}

RuleSymbol parse_symbol(const json& r, const std::string& where) {
    const std::string category = require_string(r, "category", where);
    auto cat = parse_category(category);
    if (!cat) fail(where + ": unknown category '" + category + "'");

    auto target = [&] { return require_string(r, "target", where); };
    switch (*cat) {
    case SymbolCategory::table:
        return RuleSymbol::make_table(target());
    case SymbolCategory::attribute: {
        std::string t = target();
        auto dot = t.find('.');
        if (dot == std::string::npos || dot == 0 || dot + 1 == t.size())
            fail(where + ": attribute target '" + t + "' must be 'table.attribute'");
        return RuleSymbol::make_attribute(t.substr(0, dot), t.substr(dot + 1));
    }
    case SymbolCategory::connector:
        return RuleSymbol::make_connector();
    case SymbolCategory::aggregate: {
        std::string t = text::to_lower(target());
        auto f = parse_aggregate(t);
        if (!f) fail(where + ": unsupported aggregate '" + t + "'");
        return RuleSymbol::make_aggregate(*f);
    }
    case SymbolCategory::interval: {
        std::string t = target();
        auto c = parse_comparison(t);
        if (!c) fail(where + ": unsupported comparison '" + t + "'");
        return RuleSymbol::make_interval(*c);
    }
    }
    fail(where + ": unreachable category");
}

std::vector<Rule> parse_rules(const json& doc) {
    std::vector<Rule> rules;
    auto it = doc.find("rules");
    if (it == doc.end()) return rules;
    if (!it->is_array()) fail("'rules' must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& r = (*it)[i];
        std::string where = "rules[" + std::to_string(i) + "]";
        if (!r.is_object()) fail(where + " must be an object");
        Rule rule;
        rule.phrase = text::split_whitespace(text::to_lower(require_string(r, "phrase", where)));
        rule.symbol = parse_symbol(r, where + " '" + rule.phrase_text() + "'");
        rules.push_back(std::move(rule));
    }
    return rules;
}

SchemaCatalog parse_schema(const json& doc) {
    SchemaCatalog schema;
    auto it = doc.find("schema");
    if (it == doc.end()) return schema;
    if (!it->is_array()) fail("'schema' must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& t = (*it)[i];
        std::string where = "schema[" + std::to_string(i) + "]";
        if (!t.is_object()) fail(where + " must be an object");
        TableMeta table;
        table.name = require_string(t, "table", where);
        where += " '" + table.name + "'";
        const json& attrs = require(t, "attributes", where);
        if (!attrs.is_array()) fail(where + ": 'attributes' must be an array");
        for (const auto& a : attrs) {
            if (!a.is_object()) fail(where + ": every attribute must be an object");
            AttributeMeta attr;
            attr.name = require_string(a, "name", where);
            std::string key = a.contains("key") ? require_string(a, "key", where) : "nil";
            auto k = parse_key_kind(key);
            if (!k) fail(where + ": attribute '" + attr.name + "' has unknown key kind '" + key + "'");
            attr.key = *k;
            table.attributes.push_back(std::move(attr));
        }
        if (auto d = t.find("default_attribute"); d != t.end() && !d->is_null()) {
            if (!d->is_string()) fail(where + ": 'default_attribute' must be a string");
            table.default_attribute = d->get<std::string>();
        }
        schema.tables.push_back(std::move(table));
    }
    return schema;
}

std::vector<TemplateEntry> parse_templates(const json& doc) {
    auto it = doc.find("templates");
    if (it == doc.end() || it->is_null()) return shipped_templates();
    if (!it->is_array()) fail("'templates' must be an array");
    std::vector<TemplateEntry> entries;
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& e = (*it)[i];
        std::string where = "templates[" + std::to_string(i) + "]";
        if (!e.is_object()) fail(where + " must be an object");
        TemplateEntry entry;
        entry.pattern = require_string(e, "pattern", where);
        std::string builder = require_string(e, "builder", where);
        auto b = parse_builder(builder);
        if (!b) fail(where + ": unknown builder '" + builder + "'");
        entry.builder = *b;
        entries.push_back(std::move(entry));
    }
    return entries;
}

Dataset parse_data(const json& doc) {
    Dataset data;
    auto it = doc.find("data");
    if (it == doc.end()) return data;
    if (!it->is_object()) fail("'data' must be an object keyed by table name");
    for (const auto& [table, rows] : it->items()) {
        if (!rows.is_array()) fail("data '" + table + "' must be an array of rows");
        auto& out = data.tables[table];
        for (const auto& r : rows) {
            if (!r.is_object()) fail("data '" + table + "': every row must be an object");
            Row row;
            for (const auto& [attr, cell] : r.items()) {
                if (cell.is_string())
                    row[attr] = cell.get<std::string>();
                else if (cell.is_number_integer())
                    row[attr] = std::to_string(cell.get<long long>());
                else
                    fail("data '" + table + "': cell '" + attr + "' must be a string");
            }
            out.push_back(std::move(row));
        }
    }
    return data;
}

bool valid_pattern(std::string_view p) {
    return p.size() == 6 && std::all_of(p.begin(), p.end(), [](char c) {
               return c == '0' || c == '1' || c == 'm' || c == '+' || c == '*';
           });
}

} // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(KeyKind k) { return name_of(k, kKeyNames); }
std::string_view to_string(SymbolCategory c) { return name_of(c, kCategoryNames); }
std::string_view to_string(AggregateFunction f) { return name_of(f, kAggregateNames); }
std::string_view to_string(Comparison c) { return name_of(c, kComparisonNames); }
std::string_view to_string(Builder b) { return name_of(b, kBuilderNames); }

std::optional<KeyKind> parse_key_kind(std::string_view s) { return lookup(s, kKeyNames); }
std::optional<SymbolCategory> parse_category(std::string_view s) { return lookup(s, kCategoryNames); }
std::optional<AggregateFunction> parse_aggregate(std::string_view s) { return lookup(s, kAggregateNames); }
std::optional<Comparison> parse_comparison(std::string_view s) { return lookup(s, kComparisonNames); }
std::optional<Builder> parse_builder(std::string_view s) { return lookup(s, kBuilderNames); }

RuleSymbol RuleSymbol::make_table(std::string table) {
    RuleSymbol s;
    s.category = SymbolCategory::table;
    s.table = std::move(table);
    return s;
}

RuleSymbol RuleSymbol::make_attribute(std::string table, std::string attribute) {
    RuleSymbol s;
    s.category = SymbolCategory::attribute;
    s.table = std::move(table);
    s.attribute = std::move(attribute);
    return s;
}

RuleSymbol RuleSymbol::make_connector() { return RuleSymbol{}; }

RuleSymbol RuleSymbol::make_aggregate(AggregateFunction f) {
    RuleSymbol s;
    s.category = SymbolCategory::aggregate;
    s.aggregate = f;
    return s;
}

RuleSymbol RuleSymbol::make_interval(Comparison c) {
    RuleSymbol s;
    s.category = SymbolCategory::interval;
    s.comparison = c;
    return s;
}

std::string RuleSymbol::name() const {
    switch (category) {
    case SymbolCategory::table:
        return "table_" + underscored(table);
    case SymbolCategory::attribute:
        // attribute names already carry their table prefix in the shipped
        // schema (department-code -> attribute_department_code)
        if (attribute.starts_with(table + "-")) return "attribute_" + underscored(attribute);
        return "attribute_" + underscored(table) + "_" + underscored(attribute);
    case SymbolCategory::connector:
        return "and_s";
    case SymbolCategory::aggregate:
        return "aggregate_" + std::string(to_string(aggregate));
    case SymbolCategory::interval:
        return "interval_" + std::string(to_string(comparison));
    }
    return "?";
}

bool RuleSymbol::operator==(const RuleSymbol& other) const {
    if (category != other.category) return false;
    switch (category) {
    case SymbolCategory::table: return table == other.table;
    case SymbolCategory::attribute: return table == other.table && attribute == other.attribute;
    case SymbolCategory::connector: return true;
    case SymbolCategory::aggregate: return aggregate == other.aggregate;
    case SymbolCategory::interval: return comparison == other.comparison;
    }
    return false;
}

std::string Rule::phrase_text() const { return text::join(phrase); }

const AttributeMeta* TableMeta::find_attribute(std::string_view attribute) const {
    auto it = std::find_if(attributes.begin(), attributes.end(),
                           [&](const AttributeMeta& a) { return a.name == attribute; });
    return it == attributes.end() ? nullptr : &*it;
}

const TableMeta* SchemaCatalog::find_table(std::string_view table) const {
    auto it = std::find_if(tables.begin(), tables.end(), [&](const TableMeta& t) { return t.name == table; });
    return it == tables.end() ? nullptr : &*it;
}

std::vector<TemplateEntry> shipped_templates() {
    return {
        {"+0*000", Builder::attribute_select},
        {"0+*000", Builder::table_select},
        {"+0*+00", Builder::aggregate_select},
        {"+0*0++", Builder::conditional_select},
    };
}

Catalog load_catalog(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw CatalogError(std::string("configuration parse failure: ") + e.what());
    }
    if (!doc.is_object()) fail("top level must be an object");

    Catalog c;
    c.dictionary = parse_words(doc, "dictionary");
    c.escape_words = parse_words(doc, "escape_words");
    c.rules = parse_rules(doc);
    c.schema = parse_schema(doc);
    c.templates = parse_templates(doc);
    c.data = parse_data(doc);

    auto violations = validate_catalog(c);
    if (!violations.empty()) {
        std::string message = "invalid configuration: " + violations.front();
        if (violations.size() > 1)
            message += " (and " + std::to_string(violations.size() - 1) + " more)";
        throw CatalogError(message, std::move(violations));
    }
    return c;
}

Catalog load_catalog_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CatalogError("cannot open configuration file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_catalog(buf.str());
}

std::string render_catalog(const Catalog& c) {
    ordered_json doc;
    doc["dictionary"] = std::vector<std::string>(c.dictionary.begin(), c.dictionary.end());
    doc["escape_words"] = std::vector<std::string>(c.escape_words.begin(), c.escape_words.end());

    ordered_json rules = ordered_json::array();
    for (const auto& r : c.rules) {
        ordered_json o;
        o["phrase"] = r.phrase_text();
        o["category"] = to_string(r.symbol.category);
        switch (r.symbol.category) {
        case SymbolCategory::table: o["target"] = r.symbol.table; break;
        case SymbolCategory::attribute: o["target"] = r.symbol.table + "." + r.symbol.attribute; break;
        case SymbolCategory::connector: break;
        case SymbolCategory::aggregate: o["target"] = to_string(r.symbol.aggregate); break;
        case SymbolCategory::interval: o["target"] = to_string(r.symbol.comparison); break;
        }
        rules.push_back(std::move(o));
    }
    doc["rules"] = std::move(rules);

    ordered_json schema = ordered_json::array();
    for (const auto& t : c.schema.tables) {
        ordered_json o;
        o["table"] = t.name;
        ordered_json attrs = ordered_json::array();
        for (const auto& a : t.attributes) attrs.push_back({{"name", a.name}, {"key", to_string(a.key)}});
        o["attributes"] = std::move(attrs);
        if (t.default_attribute) o["default_attribute"] = *t.default_attribute;
        schema.push_back(std::move(o));
    }
    doc["schema"] = std::move(schema);

    ordered_json data = ordered_json::object();
    for (const auto& [table, rows] : c.data.tables) {
        ordered_json arr = ordered_json::array();
        const TableMeta* meta = c.schema.find_table(table);
        for (const auto& row : rows) {
            ordered_json o = ordered_json::object();
            // schema column order first, then anything the schema does not know
            if (meta)
                for (const auto& a : meta->attributes)
                    if (auto it = row.find(a.name); it != row.end()) o[a.name] = it->second;
            for (const auto& [k, v] : row)
                if (!o.contains(k)) o[k] = v;
            arr.push_back(std::move(o));
        }
        data[table] = std::move(arr);
    }
    doc["data"] = std::move(data);

    ordered_json templates = ordered_json::array();
    for (const auto& e : c.templates) templates.push_back({{"pattern", e.pattern}, {"builder", to_string(e.builder)}});
    doc["templates"] = std::move(templates);

    return doc.dump(2) + "\n";
}

std::vector<std::string> validate_catalog(const Catalog& c) {
    std::vector<std::string> out;

    for (const auto& w : c.dictionary) {
        if (w.empty())
            out.push_back("dictionary contains an empty entry");
        else if (w != text::to_lower(w))
            out.push_back("dictionary entry '" + w + "' is not lowercase");
        else if (std::any_of(w.begin(), w.end(), [](char ch) { return text::is_space(ch) || ch == '"'; }))
            out.push_back("dictionary entry '" + w + "' contains whitespace or a double quote");
    }
    for (const auto& w : c.escape_words)
        if (!c.dictionary.contains(w)) out.push_back("escape word '" + w + "' is not in the dictionary");

    // schema, then rules
    WordSet table_names;
    for (const auto& t : c.schema.tables) {
        if (t.name.empty()) out.push_back("schema contains a table with an empty name");
        if (!table_names.insert(t.name).second) out.push_back("table '" + t.name + "' is declared more than once");
        WordSet attr_names;
        for (const auto& a : t.attributes) {
            if (a.name.empty()) out.push_back("table '" + t.name + "' has an attribute with an empty name");
            if (!attr_names.insert(a.name).second)
                out.push_back("table '" + t.name + "' declares attribute '" + a.name + "' more than once");
        }
        if (!t.default_attribute)
            out.push_back("table '" + t.name + "' has no default attribute");
        else if (!attr_names.contains(*t.default_attribute))
            out.push_back("table '" + t.name + "' default attribute '" + *t.default_attribute +
                          "' is not one of its attributes");
    }

    std::map<std::vector<std::string>, std::size_t> seen;
    for (std::size_t i = 0; i < c.rules.size(); ++i) {
        const Rule& r = c.rules[i];
        const std::string phrase = r.phrase_text();
        if (r.phrase.empty()) {
            out.push_back("rule #" + std::to_string(i) + " has an empty phrase");
            continue;
        }
        for (const auto& w : r.phrase)
            if (!c.dictionary.contains(w))
                out.push_back("rule '" + phrase + "' uses word '" + w + "' missing from the dictionary");
        if (auto [it, inserted] = seen.emplace(r.phrase, i); !inserted)
            out.push_back("rule phrase '" + phrase + "' is mapped more than once (rules #" +
                          std::to_string(it->second) + " and #" + std::to_string(i) + ")");

        const auto& s = r.symbol;
        if (s.category == SymbolCategory::table && !c.schema.find_table(s.table)) {
            out.push_back("rule '" + phrase + "' references unknown table '" + s.table + "'");
        } else if (s.category == SymbolCategory::attribute) {
            const TableMeta* t = c.schema.find_table(s.table);
            if (!t || !t->find_attribute(s.attribute))
                out.push_back("rule '" + phrase + "' references unknown attribute '" + s.table + "." +
                              s.attribute + "'");
        }
    }

    for (std::size_t i = 0; i < c.templates.size(); ++i)
        if (!valid_pattern(c.templates[i].pattern))
            out.push_back("template #" + std::to_string(i) + " has malformed pattern '" + c.templates[i].pattern +
                          "'");
    for (Builder b : {Builder::attribute_select, Builder::table_select, Builder::aggregate_select,
                      Builder::conditional_select})
        if (std::none_of(c.templates.begin(), c.templates.end(), [b](const TemplateEntry& e) { return e.builder == b; }))
            out.push_back("template registry has no entry for builder " + std::string(to_string(b)));

    for (const auto& [table, rows] : c.data.tables) {
        const TableMeta* t = c.schema.find_table(table);
        if (!t) {
            out.push_back("data references unknown table '" + table + "'");
            continue;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string where = "data row " + std::to_string(i) + " of table '" + table + "'";
            for (const auto& a : t->attributes)
                if (!rows[i].contains(a.name)) out.push_back(where + " has no cell for attribute '" + a.name + "'");
            for (const auto& [attr, cell] : rows[i])
                if (!t->find_attribute(attr)) out.push_back(where + " has a cell for unknown attribute '" + attr + "'");
        }
    }
    return out;
}

} // namespace nlwidb
