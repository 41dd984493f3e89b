#include "nlwidb/sqlcore.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>

#include "nlwidb/text.hpp"

namespace nlwidb {

namespace {

std::optional<long long> as_integer(std::string_view s) {
    if (!text::is_integer(s)) return std::nullopt;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

template <typename T>
void push_unique(std::vector<T>& v, const T& x) {
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

std::string sql_literal(std::string_view value) {
    std::string out = "'";
    for (char c : value) {
        if (c == '\'') out += '\'';
        out += c;
    }
    return out + "'";
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

BoundQuery& query_for(std::vector<BoundQuery>& queries, const std::string& table) {
    auto it = std::find_if(queries.begin(), queries.end(), [&](const BoundQuery& q) { return q.table == table; });
    if (it != queries.end()) return *it;
    queries.push_back(BoundQuery{table, {}, {}, {}, false});
    return queries.back();
}

std::vector<BoundQuery> bind_attributes(const ElementSequence& seq) {
    std::vector<BoundQuery> out;
    for (const auto& e : seq.elements) {
        if (e.symbol.category != SymbolCategory::attribute) continue;
        auto& q = query_for(out, e.symbol.table);
        q.distinct = true;
        push_unique(q.select, e.symbol.attribute);
    }
    return out;
}

std::vector<BoundQuery> bind_tables(const ElementSequence& seq, const SchemaCatalog& schema) {
    std::vector<BoundQuery> out;
    for (const auto& e : seq.elements) {
        if (e.symbol.category != SymbolCategory::table) continue;
        if (std::any_of(out.begin(), out.end(), [&](const BoundQuery& q) { return q.table == e.symbol.table; }))
            continue;
        const TableMeta* t = schema.find_table(e.symbol.table);
        if (!t || !t->default_attribute)
            throw BindError(BindError::Kind::missing_default,
                            "table '" + e.symbol.table + "' has no default attribute", {e.symbol.table});
        out.push_back(BoundQuery{t->name, {*t->default_attribute}, {}, {}, true});
    }
    return out;
}

std::vector<BoundQuery> bind_aggregates(const ElementSequence& seq) {
    std::vector<BoundQuery> out;
    std::vector<AggregateFunction> pending;
    for (const auto& e : seq.elements) {
        if (e.symbol.category == SymbolCategory::aggregate) {
            pending.push_back(e.symbol.aggregate);
        } else if (e.symbol.category == SymbolCategory::attribute) {
            if (pending.empty())
                throw BindError(BindError::Kind::unaggregated_attribute,
                                "attribute '" + e.symbol.attribute + "' is not governed by an aggregate",
                                {e.symbol.attribute});
            auto& q = query_for(out, e.symbol.table);
            for (auto f : pending) push_unique(q.aggregates, AggregateItem{f, e.symbol.attribute});
            pending.clear();
        }
    }
    if (!pending.empty())
        throw BindError(BindError::Kind::unbound_aggregate,
                        "aggregate " + upper(to_string(pending.front())) + " is not followed by an attribute",
                        {std::string(to_string(pending.front()))});
    return out;
}

std::vector<BoundQuery> bind_conditions(const ElementSequence& seq) {
    BoundQuery q;
    std::vector<std::string> tables;
    const Element* last_attribute = nullptr;
    std::vector<std::size_t> intervals;      // element indices
    std::vector<const Element*> conditioned; // attribute per interval
    for (std::size_t i = 0; i < seq.elements.size(); ++i) {
        const auto& e = seq.elements[i];
        if (e.symbol.category == SymbolCategory::attribute) {
            last_attribute = &e;
            push_unique(tables, e.symbol.table);
            push_unique(q.select, e.symbol.attribute);
        } else if (e.symbol.category == SymbolCategory::interval) {
            if (!last_attribute)
                throw BindError(BindError::Kind::unbound_interval,
                                "comparison '" + e.symbol.name() + "' is not preceded by an attribute",
                                {e.symbol.name()});
            intervals.push_back(i);
            conditioned.push_back(last_attribute);
        }
    }
    if (seq.values.size() != intervals.size())
        throw BindError(BindError::Kind::arity_mismatch,
                        std::to_string(seq.values.size()) + " value(s) for " + std::to_string(intervals.size()) +
                            " comparison(s)",
                        {std::to_string(seq.values.size()), std::to_string(intervals.size())});
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        auto hits = std::count(seq.value_interval.begin(), seq.value_interval.end(), intervals[k]);
        if (hits != 1)
            throw BindError(BindError::Kind::arity_mismatch,
                            std::to_string(hits) + " value(s) for comparison at token " +
                                std::to_string(seq.elements[intervals[k]].start_order),
                            {std::to_string(hits), "1"});
    }
    if (tables.empty())
        throw BindError(BindError::Kind::unbound_interval, "conditional query names no attribute");
    if (tables.size() > 1)
        throw BindError(BindError::Kind::cross_table_condition,
                        "conditional query spans tables " + text::join(tables, ", "), tables);

    q.table = tables.front();
    std::vector<Predicate> ordered;
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        auto v = std::find(seq.value_interval.begin(), seq.value_interval.end(), intervals[k]) -
                 seq.value_interval.begin();
        ordered.push_back({conditioned[k]->symbol.attribute, seq.elements[intervals[k]].symbol.comparison,
                           seq.values[v].text});
    }
    q.predicates = std::move(ordered);
    return {std::move(q)};
}

bool holds(int cmp, Comparison op) {
    switch (op) {
    case Comparison::lt: return cmp < 0;
    case Comparison::gt: return cmp > 0;
    case Comparison::le: return cmp <= 0;
    case Comparison::ge: return cmp >= 0;
    case Comparison::eq: return cmp == 0;
    }
    return false;
}

const std::string& cell_of(const Row& row, const std::string& attribute, const std::string& table) {
    auto it = row.find(attribute);
    if (it == row.end()) throw ExecutionError("table '" + table + "' has no attribute '" + attribute + "'", {attribute});
    return it->second;
}

std::string aggregate_column(const AggregateItem& a, const std::vector<const Row*>& rows, const std::string& table) {
    if (a.function == AggregateFunction::count) return std::to_string(rows.size());
    if (rows.empty()) return {};
    bool numeric = std::all_of(rows.begin(), rows.end(),
                               [&](const Row* r) { return as_integer(cell_of(*r, a.attribute, table)).has_value(); });
    const std::string* best = &cell_of(*rows.front(), a.attribute, table);
    for (const Row* r : rows) {
        const std::string& c = cell_of(*r, a.attribute, table);
        int cmp = numeric ? compare_cells(c, *best) : c.compare(*best);
        if ((a.function == AggregateFunction::max && cmp > 0) || (a.function == AggregateFunction::min && cmp < 0))
            best = &c;
    }
    return *best;
}

} // namespace

BindError::BindError(Kind kind, const std::string& message, std::vector<std::string> detail)
    : Error(message, std::move(detail)), kind_(kind) {}

std::string_view BindError::kind() const noexcept { return to_string(kind_); }

std::string_view to_string(BindError::Kind kind) {
    switch (kind) {
    case BindError::Kind::cross_table_condition: return "CrossTableCondition";
    case BindError::Kind::unbound_aggregate: return "UnboundAggregate";
    case BindError::Kind::unaggregated_attribute: return "UnaggregatedAttribute";
    case BindError::Kind::unbound_interval: return "UnboundInterval";
    case BindError::Kind::arity_mismatch: return "ArityMismatch";
    case BindError::Kind::missing_default: return "MissingDefault";
    }
    return "?";
}

std::vector<BoundQuery> bind(const ElementSequence& seq, Builder builder, const SchemaCatalog& schema) {
    std::vector<BoundQuery> out;
    switch (builder) {
    case Builder::attribute_select: out = bind_attributes(seq); break;
    case Builder::table_select: out = bind_tables(seq, schema); break;
    case Builder::aggregate_select: out = bind_aggregates(seq); break;
    case Builder::conditional_select: out = bind_conditions(seq); break;
    }
    for (const auto& q : out) {
        const TableMeta* t = schema.find_table(q.table);
        if (!t) throw ExecutionError("unknown table '" + q.table + "'", {q.table});
        auto check = [&](const std::string& a) {
            if (!t->find_attribute(a))
                throw ExecutionError("table '" + q.table + "' has no attribute '" + a + "'", {a});
        };
        for (const auto& a : q.select) check(a);
        for (const auto& a : q.aggregates) check(a.attribute);
        for (const auto& p : q.predicates) check(p.attribute);
    }
    return out;
}

std::string render_sql(const BoundQuery& q) {
    std::string sql = q.distinct ? "SELECT DISTINCT " : "SELECT ";
    std::vector<std::string> items = q.select;
    for (const auto& a : q.aggregates) items.push_back(upper(to_string(a.function)) + "(" + a.attribute + ")");
    sql += text::join(items, ",");
    sql += " FROM " + q.table;
    for (std::size_t i = 0; i < q.predicates.size(); ++i) {
        const auto& p = q.predicates[i];
        sql += i == 0 ? " WHERE " : " AND ";
        sql += p.attribute + " " + std::string(to_string(p.op)) + " " + sql_literal(p.value);
    }
    return sql;
}

int compare_cells(std::string_view a, std::string_view b) {
    auto x = as_integer(a);
    auto y = as_integer(b);
    if (x && y) return *x < *y ? -1 : *x > *y ? 1 : 0;
    int c = a.compare(b);
    return c < 0 ? -1 : c > 0 ? 1 : 0;
}

bool satisfies(std::string_view cell, Comparison op, std::string_view value) {
    if (op == Comparison::eq) return cell == value;
    return holds(compare_cells(cell, value), op);
}

ResultSet execute(const BoundQuery& q, const Dataset& data) {
    auto table = data.tables.find(q.table);
    if (table == data.tables.end()) throw ExecutionError("unknown table '" + q.table + "'", {q.table});
    if (!q.select.empty() && !q.aggregates.empty())
        throw ExecutionError("a query cannot mix plain and aggregate projections");

    std::vector<const Row*> matching;
    for (const auto& row : table->second) {
        bool keep = true;
        for (const auto& p : q.predicates)
            if (!satisfies(cell_of(row, p.attribute, q.table), p.op, p.value)) {
                keep = false;
                break;
            }
        if (keep) matching.push_back(&row);
    }

    ResultSet rs;
    if (!q.aggregates.empty()) {
        std::vector<std::string> cells;
        for (const auto& a : q.aggregates) {
            rs.columns.push_back(a.attribute);
            cells.push_back(aggregate_column(a, matching, q.table));
        }
        rs.rows.push_back(std::move(cells));
        return rs;
    }

    rs.columns = q.select;
    std::set<std::vector<std::string>> seen;
    for (const Row* r : matching) {
        std::vector<std::string> cells;
        cells.reserve(q.select.size());
        for (const auto& a : q.select) cells.push_back(cell_of(*r, a, q.table));
        if (q.distinct && !seen.insert(cells).second) continue;
        rs.rows.push_back(std::move(cells));
    }
    return rs;
}

std::string format_header(std::string_view attribute) {
    std::string out;
    bool start = true;
    for (char c : attribute) {
        if (c == '-' || c == '_') {
            out += ' ';
            start = true;
        } else {
            out += start ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
            start = false;
        }
    }
    return out;
}

std::vector<std::string> format_headers(const BoundQuery& q) {
    std::vector<std::string> out;
    for (const auto& a : q.select) out.push_back(format_header(a));
    for (const auto& a : q.aggregates) out.push_back(format_header(a.attribute));
    return out;
}

} // namespace nlwidb
