#pragma once
// Seeded random inputs shared by the property tests and the acceptance suite.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "nlwidb/catalog.hpp"
#include "nlwidb/preproc.hpp"
#include "nlwidb/sqlcore.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
    return v[uniform(rng, 0, v.size() - 1)];
}

inline nlwidb::RuleSymbol random_symbol(Rng& rng) {
    switch (uniform(rng, 0, 4)) {
    case 0: return nlwidb::RuleSymbol::make_table("t" + std::to_string(uniform(rng, 0, 3)));
    case 1: return nlwidb::RuleSymbol::make_attribute("t0", "t0-a" + std::to_string(uniform(rng, 0, 3)));
    case 2: return nlwidb::RuleSymbol::make_connector();
    case 3: return nlwidb::RuleSymbol::make_aggregate(nlwidb::AggregateFunction::max);
    default: return nlwidb::RuleSymbol::make_interval(nlwidb::Comparison::eq);
    }
}

/// A small vocabulary keeps phrase collisions and shared prefixes frequent.
inline const std::vector<std::string>& vocabulary() {
    static const std::vector<std::string> v{"of", "department", "name", "code", "year", "and", "with", "max"};
    return v;
}

inline std::vector<nlwidb::Rule> random_rules(Rng& rng) {
    std::set<std::vector<std::string>> seen;
    std::vector<nlwidb::Rule> rules;
    std::size_t n = uniform(rng, 0, 14);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> phrase;
        std::size_t len = uniform(rng, 1, 4);
        for (std::size_t k = 0; k < len; ++k) phrase.push_back(pick(rng, vocabulary()));
        if (!seen.insert(phrase).second) continue;
        rules.push_back({phrase, random_symbol(rng)});
    }
    return rules;
}

/// Escaped token list; with `force_unknown` a word no rule contains is
/// planted so the mapping must get stuck.
inline nlwidb::TokenList random_tokens(Rng& rng, const std::vector<nlwidb::Rule>& rules, bool force_unknown) {
    std::vector<std::string> words;
    std::size_t pieces = uniform(rng, 0, 6);
    for (std::size_t i = 0; i < pieces; ++i) {
        // mostly glue whole rule phrases together so successful runs are common
        if (!rules.empty() && uniform(rng, 0, 3) != 0) {
            const auto& r = pick(rng, rules);
            words.insert(words.end(), r.phrase.begin(), r.phrase.end());
        } else {
            words.push_back(pick(rng, vocabulary()));
        }
    }
    if (force_unknown) words.insert(words.begin() + uniform(rng, 0, words.size()), "zzz");
    nlwidb::TokenList tokens;
    for (std::size_t i = 0; i < words.size(); ++i) tokens.push_back({i, words[i], i});
    return tokens;
}

struct ExecCase {
    nlwidb::Dataset data;
    nlwidb::BoundQuery query;
};

inline ExecCase random_exec_case(Rng& rng) {
    static const std::vector<std::string> cells{"1", "2", "10", "-3", "1997", "007", "x", "y", "abc", "B", ""};
    ExecCase c;
    std::size_t n_attr = uniform(rng, 1, 4);
    std::vector<std::string> attrs;
    for (std::size_t i = 0; i < n_attr; ++i) attrs.push_back("col-" + std::to_string(i));

    // per column either all-integer or mixed cells, so both MAX orders occur
    std::vector<bool> numeric_col(n_attr);
    for (std::size_t i = 0; i < n_attr; ++i) numeric_col[i] = uniform(rng, 0, 1) == 0;
    static const std::vector<std::string> ints{"1", "2", "10", "-3", "1997", "007"};

    auto& rows = c.data.tables["t"];
    std::size_t n_rows = uniform(rng, 0, 100);
    for (std::size_t r = 0; r < n_rows; ++r) {
        nlwidb::Row row;
        for (std::size_t i = 0; i < n_attr; ++i) row[attrs[i]] = numeric_col[i] ? pick(rng, ints) : pick(rng, cells);
        rows.push_back(std::move(row));
    }

    auto& q = c.query;
    q.table = "t";
    if (uniform(rng, 0, 3) == 0) {
        std::size_t k = uniform(rng, 1, 2);
        for (std::size_t i = 0; i < k; ++i)
            q.aggregates.push_back({static_cast<nlwidb::AggregateFunction>(uniform(rng, 0, 2)), pick(rng, attrs)});
    } else {
        std::size_t k = uniform(rng, 1, n_attr);
        for (std::size_t i = 0; i < k; ++i) q.select.push_back(pick(rng, attrs));
        q.distinct = uniform(rng, 0, 1) == 0;
    }
    std::size_t preds = uniform(rng, 0, 2);
    for (std::size_t i = 0; i < preds; ++i) {
        auto op = uniform(rng, 0, 2) == 0 ? static_cast<nlwidb::Comparison>(uniform(rng, 0, 4)) : nlwidb::Comparison::eq;
        q.predicates.push_back({pick(rng, attrs), op, pick(rng, cells)});
    }
    return c;
}

} // namespace gen
