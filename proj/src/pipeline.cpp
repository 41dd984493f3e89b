#include "nlwidb/pipeline.hpp"

namespace nlwidb {

Engine::Engine(Catalog catalog) : catalog_(std::move(catalog)), matcher_(build_matcher(catalog_.rules)) {}

Answer Engine::answer(std::string_view question) const {
    Answer a;
    Trace& t = a.trace;
    t.question = std::string(question);
    std::string_view current = stage::value_extraction;

    auto fail = [&](const Error& e) {
        a.error = PipelineError{std::string(current), std::string(e.kind()), e.what(), e.detail()};
        return a;
    };

    try {
        t.raw_words = raw_words(question);
        t.extraction = extract_values(question);

        current = stage::tokenization;
        t.tokens = tokenize(t.extraction->remainder);

        current = stage::word_check;
        t.unknown_words = check_words(*t.tokens, catalog_.dictionary);
        if (!t.unknown_words->empty()) throw UnknownWords(*t.unknown_words);

        current = stage::escape_removal;
        t.escaped = remove_escape_words(*t.tokens, catalog_.escape_words);

        current = stage::rule_mapping;
        auto seg = segment(*t.escaped, matcher_);
        t.mapping = mapping_steps(*t.escaped, seg);
        if (seg.stuck_at) {
            const Token& stuck = (*t.escaped)[*seg.stuck_at];
            t.elements = ElementSequence{std::move(seg.elements), {}, {}};
            throw Unmappable(stuck.word, stuck.order);
        }
        t.elements = ElementSequence{std::move(seg.elements), {}, {}};

        current = stage::value_attachment;
        t.elements = attach_values(std::move(*t.elements), t.extraction->values);

        current = stage::template_matching;
        t.counts = count_elements(*t.elements);
        t.template_code = encode_template(*t.counts).str();
        t.builder = match_template(*t.counts, catalog_.templates);

        current = stage::binding;
        t.queries = bind(*t.elements, *t.builder, catalog_.schema);

        t.sql.emplace();
        for (const auto& q : *t.queries) t.sql->push_back(render_sql(q));

        current = stage::execution;
        t.results.emplace();
        for (const auto& q : *t.queries) {
            ResultSet rs = execute(q, catalog_.data);
            rs.columns = format_headers(q);
            t.results->push_back(std::move(rs));
        }
    } catch (const Error& e) {
        return fail(e);
    }

    a.response = QueryResponse{*t.sql, *t.template_code, *t.builder, *t.results};
    return a;
}

Answer answer_question(std::string_view question, const Catalog& catalog) {
    return Engine(catalog).answer(question);
}

} // namespace nlwidb
