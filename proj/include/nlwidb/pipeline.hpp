#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlwidb/catalog.hpp"
#include "nlwidb/preproc.hpp"
#include "nlwidb/rulemap.hpp"
#include "nlwidb/sqlcore.hpp"
#include "nlwidb/templating.hpp"

namespace nlwidb {

namespace stage {
inline constexpr std::string_view value_extraction = "value-extraction";
inline constexpr std::string_view tokenization = "tokenization";
inline constexpr std::string_view word_check = "word-check";
inline constexpr std::string_view escape_removal = "escape-removal";
inline constexpr std::string_view rule_mapping = "rule-mapping";
inline constexpr std::string_view value_attachment = "value-attachment";
inline constexpr std::string_view template_matching = "template-matching";
inline constexpr std::string_view binding = "binding";
inline constexpr std::string_view execution = "execution";
} // namespace stage

/// Everything the pipeline computed, stage by stage. Stages after a failure
/// stay empty.
struct Trace {
    std::string question;
    std::optional<Extraction> extraction;
    std::vector<std::string> raw_words;
    std::optional<TokenList> tokens;
    std::optional<std::vector<std::string>> unknown_words;
    std::optional<TokenList> escaped;
    std::optional<std::vector<MappingStep>> mapping;
    std::optional<ElementSequence> elements;
    std::optional<ElementCounts> counts;
    std::optional<std::string> template_code;
    std::optional<Builder> builder;
    std::optional<std::vector<BoundQuery>> queries;
    std::optional<std::vector<std::string>> sql;
    std::optional<std::vector<ResultSet>> results;
};

struct QueryResponse {
    std::vector<std::string> sql;
    std::string template_code;
    Builder builder = Builder::attribute_select;
    std::vector<ResultSet> results; // columns carry display headers
};

struct PipelineError {
    std::string stage;
    std::string kind;
    std::string message;
    std::vector<std::string> detail;
};

struct Answer {
    Trace trace;
    std::optional<QueryResponse> response;
    std::optional<PipelineError> error;

    bool ok() const noexcept { return response.has_value(); }
};

/// Shares one immutable catalog and its phrase matcher across questions.
/// `answer` is const and safe to call concurrently.
class Engine {
public:
    explicit Engine(Catalog catalog);

    Answer answer(std::string_view question) const;

    const Catalog& catalog() const noexcept { return catalog_; }
    const PhraseTrie& matcher() const noexcept { return matcher_; }

private:
    Catalog catalog_;
    PhraseTrie matcher_;
};

Answer answer_question(std::string_view question, const Catalog& catalog);

} // namespace nlwidb
