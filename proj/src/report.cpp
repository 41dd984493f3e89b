#include "nlwidb/report.hpp"

#include <algorithm>
#include <sstream>

#include "nlwidb/text.hpp"

namespace nlwidb {

namespace {

ordered_json tokens_json(const TokenList& tokens) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : tokens) arr.push_back({{"order", t.order}, {"word", t.word}});
    return arr;
}

std::string_view kind_name(MappingStep::Kind k) {
    switch (k) {
    case MappingStep::Kind::trimmed: return "trimmed";
    case MappingStep::Kind::mapped: return "mapped";
    case MappingStep::Kind::stuck: return "stuck";
    }
    return "?";
}

std::string element_target(const RuleSymbol& s) {
    switch (s.category) {
    case SymbolCategory::table: return s.table;
    case SymbolCategory::attribute: return s.attribute;
    case SymbolCategory::connector: return "s";
    case SymbolCategory::aggregate: return std::string(to_string(s.aggregate));
    case SymbolCategory::interval: return std::string(to_string(s.comparison));
    }
    return {};
}

std::string category_label(SymbolCategory c) {
    std::string s(to_string(c));
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    return s;
}

} // namespace

ordered_json to_json(const ResultSet& rs) {
    return {{"columns", rs.columns}, {"rows", rs.rows}};
}

ordered_json to_json(const Trace& t) {
    ordered_json j;
    j["question"] = t.question;
    j["raw_tokens"] = t.raw_words;
    if (t.extraction) {
        j["remainder"] = t.extraction->remainder;
        ordered_json values = ordered_json::array();
        for (const auto& v : t.extraction->values) values.push_back({{"text", v.text}, {"anchor", v.anchor}});
        j["values"] = std::move(values);
    }
    if (t.tokens) j["tokens"] = tokens_json(*t.tokens);
    if (t.unknown_words) j["word_check"] = {{"ok", t.unknown_words->empty()}, {"unknown", *t.unknown_words}};
    if (t.escaped) j["escaped_tokens"] = tokens_json(*t.escaped);
    if (t.mapping) {
        ordered_json steps = ordered_json::array();
        for (const auto& s : *t.mapping) {
            ordered_json o{{"kind", kind_name(s.kind)}, {"text", s.text}};
            if (s.kind == MappingStep::Kind::mapped) o["symbol"] = s.symbol;
            steps.push_back(std::move(o));
        }
        j["mapping"] = std::move(steps);
    }
    if (t.elements) {
        ordered_json elems = ordered_json::array();
        for (const auto& e : t.elements->elements)
            elems.push_back({{"symbol", e.symbol.name()},
                             {"category", to_string(e.symbol.category)},
                             {"target", element_target(e.symbol)},
                             {"phrase", text::join(e.matched_phrase)},
                             {"start_order", e.start_order}});
        j["elements"] = std::move(elems);
        ordered_json bindings = ordered_json::array();
        for (std::size_t i = 0; i < t.elements->value_interval.size(); ++i)
            bindings.push_back({{"value", t.elements->values[i].text}, {"interval", t.elements->value_interval[i]}});
        j["value_bindings"] = std::move(bindings);
    }
    if (t.counts)
        j["counts"] = {{"attribute", t.counts->attribute}, {"table", t.counts->table},
                       {"and", t.counts->connector},      {"aggregate", t.counts->aggregate},
                       {"interval", t.counts->interval},  {"value", t.counts->value}};
    if (t.template_code) j["template"] = *t.template_code;
    if (t.builder) j["builder"] = to_string(*t.builder);
    if (t.sql) j["sql"] = *t.sql;
    if (t.results) {
        ordered_json results = ordered_json::array();
        for (const auto& rs : *t.results) results.push_back(to_json(rs));
        j["results"] = std::move(results);
    }
    return j;
}

ordered_json to_json(const Answer& a) {
    ordered_json j;
    if (a.response) {
        j["template"] = a.response->template_code;
        j["builder"] = to_string(a.response->builder);
        j["sql"] = a.response->sql;
        ordered_json results = ordered_json::array();
        for (const auto& rs : a.response->results) results.push_back(to_json(rs));
        j["results"] = std::move(results);
    } else if (a.error) {
        j["error"] = {{"stage", a.error->stage},
                      {"kind", a.error->kind},
                      {"message", a.error->message},
                      {"detail", a.error->detail}};
    }
    j["trace"] = to_json(a.trace);
    return j;
}

ordered_json schema_json(const SchemaCatalog& schema) {
    ordered_json tables = ordered_json::array();
    for (const auto& t : schema.tables) {
        ordered_json attrs = ordered_json::array();
        for (const auto& a : t.attributes) attrs.push_back({{"name", a.name}, {"key", to_string(a.key)}});
        ordered_json o{{"table", t.name}, {"attributes", std::move(attrs)}};
        o["default_attribute"] = t.default_attribute ? ordered_json(*t.default_attribute) : ordered_json(nullptr);
        tables.push_back(std::move(o));
    }
    return {{"tables", std::move(tables)}};
}

std::string render_table(const ResultSet& rs) {
    std::vector<std::size_t> width(rs.columns.size());
    for (std::size_t c = 0; c < rs.columns.size(); ++c) width[c] = rs.columns[c].size();
    for (const auto& row : rs.rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());

    std::ostringstream out;
    auto rule = [&] {
        out << '+';
        for (auto w : width) out << std::string(w + 2, '-') << '+';
        out << '\n';
    };
    auto line = [&](const std::vector<std::string>& cells) {
        out << '|';
        for (std::size_t c = 0; c < width.size(); ++c) {
            const std::string& cell = c < cells.size() ? cells[c] : std::string();
            out << ' ' << cell << std::string(width[c] - cell.size(), ' ') << " |";
        }
        out << '\n';
    };
    rule();
    line(rs.columns);
    rule();
    for (const auto& row : rs.rows) line(row);
    rule();
    out << rs.rows.size() << (rs.rows.size() == 1 ? " row\n" : " rows\n");
    return out.str();
}

std::string render_trace(const Answer& a) {
    const Trace& t = a.trace;
    std::ostringstream out;
    out << "Question:\n  " << t.question << "\n\n";

    if (t.extraction) {
        out << "Value extraction:\n  remainder: " << t.extraction->remainder << '\n';
        for (const auto& v : t.extraction->values) out << "  value: \"" << v.text << "\" (after word " << v.anchor << ")\n";
        out << '\n';
    }
    if (!t.raw_words.empty()) {
        out << "Raw tokens:\n";
        for (std::size_t i = 0; i < t.raw_words.size(); ++i) out << "  [" << i << "] " << t.raw_words[i] << '\n';
        out << '\n';
    }
    if (t.unknown_words) {
        out << "Word check:\n  ";
        if (t.unknown_words->empty())
            out << "every word is in the data dictionary\n\n";
        else
            out << "unknown: " << text::join(*t.unknown_words, ", ") << "\n\n";
    }
    if (t.escaped) {
        std::vector<std::string> words = words_of(*t.escaped);
        out << "After escape-word removal:\n  " << text::join(words) << "\n\n";
    }
    if (t.mapping) {
        out << "Rule mapping:\n";
        for (const auto& s : *t.mapping) {
            switch (s.kind) {
            case MappingStep::Kind::trimmed: out << "  trim  \"" << s.text << "\"\n"; break;
            case MappingStep::Kind::mapped: out << "  MATCH \"" << s.text << "\" -> " << s.symbol << '\n'; break;
            case MappingStep::Kind::stuck: out << "  STUCK \"" << s.text << "\"\n"; break;
            }
        }
        out << '\n';
    }
    if (t.elements && t.counts) {
        out << "SQL elements:\n";
        for (const auto& e : t.elements->elements)
            out << "  " << category_label(e.symbol.category) << ": " << element_target(e.symbol) << '\n';
        for (const auto& v : t.elements->values) out << "  Value: " << v.text << '\n';
        out << '\n';
    }
    if (t.template_code) {
        out << "Template [attribute, table, and, aggregate, interval, value]: " << *t.template_code;
        if (t.builder) out << " -> " << to_string(*t.builder);
        out << "\n\n";
    }
    if (t.sql) {
        out << "SQL:\n";
        for (const auto& s : *t.sql) out << "  " << s << '\n';
        out << '\n';
    }
    if (t.results) {
        out << "Results:\n";
        for (const auto& rs : *t.results) out << render_table(rs);
    }
    if (a.error) out << "Error in stage " << a.error->stage << " (" << a.error->kind << "): " << a.error->message << '\n';
    return out.str();
}

} // namespace nlwidb
