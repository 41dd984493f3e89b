#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nlwidb/preproc.hpp"
#include "nlwidb/text.hpp"
#include "support.hpp"

using namespace nlwidb;

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!text::is_space(c)) out += c;
    return out;
}

std::vector<std::string> words(std::initializer_list<const char*> w) { return {w.begin(), w.end()}; }

} // namespace

TEST_CASE("extract_values") {
    SUBCASE("worked example") {
        auto ex = extract_values(support::worked_question);
        CHECK(ex.remainder ==
              "What is the year of establishment of department and code of department which department name "
              "equals ?");
        REQUIRE(ex.values.size() == 1);
        CHECK(ex.values[0].text == "Department of Economics and Management");
        CHECK(ex.values[0].anchor == 16);
    }
    SUBCASE("no values") {
        auto ex = extract_values(support::q2);
        CHECK(ex.remainder == support::q2);
        CHECK(ex.values.empty());
    }
    SUBCASE("two spans keep their order") {
        auto ex = extract_values(R"(say "a" and "b")");
        CHECK(ex.remainder == "say  and ");
        REQUIRE(ex.values.size() == 2);
        CHECK(ex.values[0] == ExtractedValue{"a", 1});
        CHECK(ex.values[1] == ExtractedValue{"b", 2});
    }
    SUBCASE("empty literal") {
        auto ex = extract_values(R"(x "" y)");
        REQUIRE(ex.values.size() == 1);
        CHECK(ex.values[0].text.empty());
    }
    SUBCASE("unbalanced quote names its offset") {
        try {
            extract_values(R"(name equals "Bio)");
            FAIL("expected UnbalancedQuote");
        } catch (const UnbalancedQuote& e) {
            CHECK(e.offset() == 12);
            CHECK(std::string(e.what()).find("12") != std::string::npos);
        }
    }
}

TEST_CASE("tokenize") {
    auto tokens = tokenize(extract_values(support::worked_question).remainder);
    CHECK(words_of(tokens) == words({"what", "is", "the", "year", "of", "establishment", "of", "department", "and",
                                     "code", "of", "department", "which", "department", "name", "equals"}));
    for (std::size_t i = 0; i < tokens.size(); ++i) CHECK(tokens[i].order == i);

    CHECK(tokenize("").empty());
    CHECK(tokenize("   \t ").empty());
    auto one = tokenize("Departments?");
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Token{0, "departments", 0});

    auto punct = tokenize("a , b; ?! c.");
    CHECK(words_of(punct) == words({"a", "b", "c"}));
    CHECK(punct[2].position == 4);
}

TEST_CASE("raw word view keeps case and quotes") {
    auto raw = raw_words(support::worked_question);
    REQUIRE(raw.size() == 21);
    CHECK(raw[0] == "What");
    CHECK(raw[16] == "\"Department");
    CHECK(raw[20] == "Management\"");
}

TEST_CASE("check_words") {
    const auto& dict = support::shipped().dictionary;
    CHECK(check_words(tokenize(extract_values(support::worked_question).remainder), dict).empty());
    CHECK(check_words(tokenize("What are the available rockets"), dict) == words({"rockets"}));
    CHECK(check_words({}, dict).empty());
    CHECK(check_words(tokenize("rockets and moons and rockets"), dict) == words({"rockets", "moons"}));
}

TEST_CASE("remove_escape_words") {
    const auto& esc = support::shipped().escape_words;
    auto escaped = remove_escape_words(tokenize(extract_values(support::worked_question).remainder), esc);
    CHECK(words_of(escaped) == words({"year", "of", "establishment", "of", "department", "and", "code", "of",
                                      "department", "department", "name", "equals"}));
    for (std::size_t i = 0; i < escaped.size(); ++i) CHECK(escaped[i].order == i);
    CHECK(escaped[0].position == 3);

    CHECK(remove_escape_words(tokenize("what is the a an for"), esc).empty());
    CHECK(words_of(remove_escape_words(tokenize("What are the available departments"), esc)) ==
          words({"departments"}));
}

TEST_CASE("preprocessing properties") {
    std::mt19937_64 rng(11);
    const std::vector<std::string> pool{"what", "Is", "the", "name", "of", "department?", "and", "a", "x,", "FOR"};
    const auto& dict = support::shipped().dictionary;
    const auto& esc = support::shipped().escape_words;
    auto u = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };

    for (int iter = 0; iter < 500; ++iter) {
        std::vector<std::string> parts;
        for (std::size_t i = u(0, 10); i > 0; --i)
            parts.push_back(u(0, 4) == 0 ? "\"Value " + std::to_string(i) + "\"" : pool[u(0, pool.size() - 1)]);
        std::string question = text::join(parts);

        // re-inserting each value at its anchor restores the question
        auto ex = extract_values(question);
        auto rem = text::split_whitespace(ex.remainder);
        std::size_t shift = 0;
        for (const auto& v : ex.values) {
            rem.insert(rem.begin() + static_cast<std::ptrdiff_t>(v.anchor + shift), "\"" + v.text + "\"");
            ++shift;
        }
        CHECK(strip_spaces(text::join(rem)) == strip_spaces(question));

        auto tokens = tokenize(ex.remainder);
        auto joined = text::join(words_of(tokens));
        CHECK(words_of(tokenize(joined)) == words_of(tokens));

        auto escaped = remove_escape_words(tokens, esc);
        auto escape_count = std::count_if(tokens.begin(), tokens.end(), [&](const Token& t) { return esc.contains(t.word); });
        CHECK(escaped.size() == tokens.size() - static_cast<std::size_t>(escape_count));
        std::size_t k = 0;
        for (const auto& t : tokens)
            if (k < escaped.size() && escaped[k].word == t.word && escaped[k].position == t.position) ++k;
        CHECK(k == escaped.size());

        if (check_words(tokens, dict).empty()) {
            TokenList sub;
            for (const auto& t : tokens)
                if (u(0, 1)) sub.push_back(t);
            CHECK(check_words(sub, dict).empty());
        }
    }
}
