#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nlwidb/catalog.hpp"
#include "nlwidb/error.hpp"
#include "nlwidb/rulemap.hpp"

namespace nlwidb {

struct Predicate {
    std::string attribute;
    Comparison op = Comparison::eq;
    std::string value;
    bool operator==(const Predicate&) const = default;
};

struct AggregateItem {
    AggregateFunction function = AggregateFunction::max;
    std::string attribute;
    bool operator==(const AggregateItem&) const = default;
};

/// A resolved single-table SELECT. A query projects either `select` or
/// `aggregates`, never both.
struct BoundQuery {
    std::string table;
    std::vector<std::string> select;
    std::vector<AggregateItem> aggregates;
    std::vector<Predicate> predicates;
    bool distinct = false;
    bool operator==(const BoundQuery&) const = default;
};

struct ResultSet {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    bool operator==(const ResultSet&) const = default;
};

class BindError : public Error {
public:
    enum class Kind {
        cross_table_condition,
        unbound_aggregate,
        unaggregated_attribute,
        unbound_interval,
        arity_mismatch,
        missing_default,
    };
    BindError(Kind kind, const std::string& message, std::vector<std::string> detail = {});
    Kind error_kind() const noexcept { return kind_; }
    std::string_view kind() const noexcept override;

private:
    Kind kind_;
};

std::string_view to_string(BindError::Kind kind);

class ExecutionError : public Error {
public:
    using Error::Error;
    std::string_view kind() const noexcept override { return "ExecutionError"; }
};

std::vector<BoundQuery> bind(const ElementSequence& seq, Builder builder, const SchemaCatalog& schema);

/// `SELECT [DISTINCT] items FROM table [WHERE attr op 'value' [AND ...]]`
std::string render_sql(const BoundQuery& query);

ResultSet execute(const BoundQuery& query, const Dataset& data);

/// `department-code` -> `Department Code`.
std::string format_header(std::string_view attribute);
std::vector<std::string> format_headers(const BoundQuery& query);

/// Three-way comparison of cell texts: numeric when both are integers,
/// lexicographic otherwise.
int compare_cells(std::string_view a, std::string_view b);

bool satisfies(std::string_view cell, Comparison op, std::string_view value);

} // namespace nlwidb
