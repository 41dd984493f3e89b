#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nlwidb/templating.hpp"
#include "support.hpp"

using namespace nlwidb;

namespace {

ElementSequence mapped(const std::string& question) {
    const auto& c = support::shipped();
    auto ex = extract_values(question);
    auto tokens = remove_escape_words(tokenize(ex.remainder), c.escape_words);
    return attach_values(match_rules(tokens, support::engine().matcher()), ex.values);
}

ElementCounts counts(std::size_t a, std::size_t t, std::size_t n, std::size_t g, std::size_t i, std::size_t v) {
    return {a, t, n, g, i, v};
}

} // namespace

TEST_CASE("count_elements") {
    CHECK(count_elements(mapped(support::worked_question)) == counts(3, 0, 1, 0, 1, 1));
    CHECK(count_elements(ElementSequence{}) == counts(0, 0, 0, 0, 0, 0));
    CHECK(count_elements(mapped(support::q3)) == counts(0, 2, 1, 0, 0, 0));
}

TEST_CASE("encode_template") {
    CHECK(encode_template(counts(3, 0, 1, 0, 1, 1)).str() == "m01011");
    CHECK(encode_template({}).str() == "000000");
    CHECK(encode_template(counts(0, 2, 1, 0, 0, 0)).str() == "0m1000");
    CHECK(encode_template(counts(0, 7, 0, 0, 0, 0)).str() == "0m0000");
}

TEST_CASE("encoding abstracts each count to 0, 1 or many") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> d(0, 5);
    for (int iter = 0; iter < 1000; ++iter) {
        ElementCounts c{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
        TemplateCode code = encode_template(c);
        auto s = c.slots();
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK((code[i] == 'm') == (s[i] >= 2));
            CHECK((code[i] == '1') == (s[i] == 1));
            CHECK((code[i] == '0') == (s[i] == 0));
        }
        // the shipped patterns overlap nowhere, so order does not matter for them
        auto reg = shipped_templates();
        int accepted = 0;
        for (const auto& e : reg) accepted += pattern_accepts(e.pattern, c);
        CHECK(accepted <= 1);
    }
}

TEST_CASE("match_template") {
    auto reg = shipped_templates();
    CHECK(match_template(counts(1, 0, 0, 0, 0, 0), reg) == Builder::attribute_select);
    CHECK(match_template(counts(0, 1, 0, 0, 0, 0), reg) == Builder::table_select);
    CHECK(match_template(counts(0, 2, 1, 0, 0, 0), reg) == Builder::table_select);
    CHECK(match_template(counts(1, 0, 0, 1, 0, 0), reg) == Builder::aggregate_select);
    CHECK(match_template(counts(3, 0, 1, 0, 1, 1), reg) == Builder::conditional_select);
    CHECK(match_template(counts(2, 0, 0, 0, 1, 1), reg) == Builder::conditional_select);

    try {
        match_template(counts(1, 1, 1, 1, 1, 1), reg);
        FAIL("expected NoTemplate");
    } catch (const NoTemplate& e) {
        CHECK(std::string(e.what()).find("111111") != std::string::npos);
    }
    CHECK_THROWS_AS(match_template({}, reg), NoTemplate);
    CHECK_THROWS_AS(match_template(counts(1, 0, 0, 0, 1, 0), reg), NoTemplate);
    CHECK_THROWS_AS(match_template(counts(1, 0, 0, 0, 1, 1), {}), NoTemplate);
}

TEST_CASE("first matching entry wins in user registries") {
    std::vector<TemplateEntry> reg{{"****11", Builder::conditional_select}, {"+0*0*+", Builder::attribute_select}};
    CHECK(match_template(counts(1, 0, 0, 0, 1, 1), reg) == Builder::conditional_select);
    CHECK(match_template(counts(1, 0, 0, 0, 1, 2), reg) == Builder::attribute_select);
    CHECK(!pattern_accepts("+0*0", counts(1, 0, 0, 0, 0, 0)));
    CHECK(!pattern_accepts("x00000", counts(0, 0, 0, 0, 0, 0)));
}
