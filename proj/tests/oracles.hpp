#pragma once
// Reference implementations used only by tests. They follow the most literal
// reading of each procedure and share no code with the library paths they
// check (no trie, no cell comparison helpers).

#include <algorithm>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "nlwidb/catalog.hpp"
#include "nlwidb/sqlcore.hpp"

namespace oracle {

struct TrimResult {
    std::vector<std::size_t> rule_indices;              // matched rule per element
    std::vector<std::size_t> lengths;                   // phrase length per element
    std::optional<std::size_t> stuck_at;                // word index of failure
    std::vector<std::pair<std::string, std::string>> log; // ("trimmed"|"mapped"|"stuck", text)
};

inline std::string join_words(const std::vector<std::string>& w, std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t i = from; i < to; ++i) {
        if (i > from) s += ' ';
        s += w[i];
    }
    return s;
}

/// Mapping by repeatedly dropping the last word of the remaining question
/// until the leftover string equals some rule phrase (linear scan).
inline TrimResult trim_last_word(const std::vector<std::string>& words, const std::vector<nlwidb::Rule>& rules) {
    TrimResult r;
    std::size_t start = 0;
    while (start < words.size()) {
        std::size_t end = words.size();
        bool mapped = false;
        bool first = true;
        while (end > start) {
            if (!first) r.log.emplace_back("trimmed", join_words(words, start, end));
            first = false;
            const std::string candidate = join_words(words, start, end);
            for (std::size_t i = 0; i < rules.size(); ++i) {
                std::string phrase;
                for (std::size_t k = 0; k < rules[i].phrase.size(); ++k) {
                    if (k) phrase += ' ';
                    phrase += rules[i].phrase[k];
                }
                if (phrase == candidate) {
                    r.rule_indices.push_back(i);
                    r.lengths.push_back(end - start);
                    r.log.emplace_back("mapped", candidate);
                    mapped = true;
                    break;
                }
            }
            if (mapped) break;
            --end;
        }
        if (!mapped) {
            r.stuck_at = start;
            r.log.emplace_back("stuck", words[start]);
            return r;
        }
        start = end;
    }
    return r;
}

inline bool looks_integer(const std::string& s) {
    static const std::regex re("^-?[0-9]+$");
    return std::regex_match(s, re) && s.size() < 18;
}

inline bool predicate_holds(const std::string& cell, nlwidb::Comparison op, const std::string& value) {
    if (op == nlwidb::Comparison::eq) return cell == value;
    int cmp;
    if (looks_integer(cell) && looks_integer(value)) {
        long long a = std::stoll(cell), b = std::stoll(value);
        cmp = a < b ? -1 : (a > b ? 1 : 0);
    } else {
        cmp = cell < value ? -1 : (value < cell ? 1 : 0);
    }
    switch (op) {
    case nlwidb::Comparison::lt: return cmp < 0;
    case nlwidb::Comparison::gt: return cmp > 0;
    case nlwidb::Comparison::le: return cmp <= 0;
    case nlwidb::Comparison::ge: return cmp >= 0;
    default: return false;
    }
}

/// Filter every row, project, dedupe, aggregate.
inline nlwidb::ResultSet evaluate(const nlwidb::BoundQuery& q, const nlwidb::Dataset& data) {
    const auto& rows = data.tables.at(q.table);
    std::vector<nlwidb::Row> kept;
    for (const auto& row : rows) {
        bool ok = true;
        for (const auto& p : q.predicates) ok = ok && predicate_holds(row.at(p.attribute), p.op, p.value);
        if (ok) kept.push_back(row);
    }

    nlwidb::ResultSet rs;
    if (!q.aggregates.empty()) {
        std::vector<std::string> out;
        for (const auto& a : q.aggregates) {
            rs.columns.push_back(a.attribute);
            std::vector<std::string> col;
            for (const auto& r : kept) col.push_back(r.at(a.attribute));
            if (a.function == nlwidb::AggregateFunction::count) {
                out.push_back(std::to_string(col.size()));
                continue;
            }
            if (col.empty()) {
                out.emplace_back();
                continue;
            }
            bool numeric = std::all_of(col.begin(), col.end(), looks_integer);
            auto less = [numeric](const std::string& x, const std::string& y) {
                return numeric ? std::stoll(x) < std::stoll(y) : x < y;
            };
            out.push_back(a.function == nlwidb::AggregateFunction::max ? *std::max_element(col.begin(), col.end(), less)
                                                                       : *std::min_element(col.begin(), col.end(), less));
        }
        rs.rows.push_back(out);
        return rs;
    }

    rs.columns = q.select;
    for (const auto& r : kept) {
        std::vector<std::string> cells;
        for (const auto& a : q.select) cells.push_back(r.at(a));
        if (q.distinct) {
            bool dup = false;
            for (const auto& prev : rs.rows) dup = dup || prev == cells;
            if (dup) continue;
        }
        rs.rows.push_back(cells);
    }
    return rs;
}

} // namespace oracle
