#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "ufna/language.hpp"
#include "ufna/presentation.hpp"
#include "ufna/rng.hpp"

#include "corpus.hpp"

using namespace ufna;

TEST_CASE("parse canonical JSON") {
    const Presentation p = parse_presentation(R"({"generators":["x","y"],"relations":[["y","x"]]})");
    CHECK(p.generators == std::vector<std::string>{"x", "y"});
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0] == make_word(p, "yx"));
    CHECK(p.d == 1);
}

TEST_CASE("parse with no relations") {
    const Presentation p = parse_presentation(R"({"generators":["x","y"],"relations":[]})");
    CHECK(p.generators.size() == 2);
    CHECK(p.relations.empty());
    CHECK(p.d == 0);

    // the key may be omitted entirely
    CHECK(parse_presentation(R"({"generators":["x"]})").relations.empty());
}

TEST_CASE("parse rejects bad documents") {
    CHECK_THROWS_WITH_AS(parse_presentation(R"({"generators":["x"],"relations":[["x","z"]]})"),
                         doctest::Contains("unknown generator \"z\""), ParseError);
    CHECK_THROWS_WITH_AS(parse_presentation(R"({"generators":["x","x"]})"),
                         doctest::Contains("duplicate generator"), ParseError);
    CHECK_THROWS_WITH_AS(parse_presentation(R"({"generators":[]})"),
                         doctest::Contains("empty generator list"), ParseError);
    CHECK_THROWS_WITH_AS(parse_presentation(R"({"generators":["x"],"relations":[[]]})"),
                         doctest::Contains("empty relation"), ParseError);
    CHECK_THROWS_AS(parse_presentation("{\"generators\": [\"x\""), ParseError);
    CHECK_THROWS_AS(parse_presentation("[1,2]"), ParseError);

    try {
        parse_presentation("{\"generators\": oops}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position > 0); // syntax errors report a byte offset
    }
}

TEST_CASE("parse compact text form") {
    const Presentation p = parse_compact("gens: x y; rels: yx xx;");
    CHECK(p.generators == std::vector<std::string>{"x", "y"});
    REQUIRE(p.relations.size() == 2);
    CHECK(p.relations[0] == make_word(p, "yx"));
    CHECK(p.relations[1] == make_word(p, "xx"));

    CHECK(parse_compact("gens: x y;").relations.empty());
    CHECK(parse_compact("gens: x y; rels: ;").relations.empty());

    CHECK_THROWS_WITH_AS(parse_compact("gens: ab;"), doctest::Contains("single-character"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_compact("gens: x; rels: xz;"),
                         doctest::Contains("unknown generator"), ParseError);
    CHECK_THROWS_AS(parse_compact("gens: x y"), ParseError); // missing ';'
    CHECK_THROWS_AS(parse_compact("nope: x;"), ParseError);
}

TEST_CASE("parse_input dispatches on the first byte") {
    CHECK(parse_input("  {\"generators\":[\"x\"]}").generators.size() == 1);
    CHECK(parse_input("gens: x;").generators.size() == 1);
    CHECK_THROWS_AS(parse_input("   "), ParseError);
}

TEST_CASE("normalize reduces to the obstruction antichain") {
    SUBCASE("factor-order reduction") {
        const Presentation p = corpus::make({"x", "y"}, {"yx", "xyx"});
        const Presentation n = normalize(p);
        REQUIRE(n.relations.size() == 1);
        CHECK(n.relations[0] == make_word(n, "yx"));
        CHECK(n.d == 1);
    }
    SUBCASE("length-1 relation deletes its generator") {
        const Presentation p = corpus::make({"x", "y"}, {"x"});
        const Presentation n = normalize(p);
        CHECK(n.generators == std::vector<std::string>{"y"});
        CHECK(n.relations.empty());
        CHECK(n.d == 0);
        CHECK_FALSE(collapsed_to_scalars(n));
    }
    SUBCASE("relations touching a deleted generator vanish with it") {
        const Presentation p = corpus::make({"x", "y"}, {"x", "xy", "yy"});
        const Presentation n = normalize(p);
        CHECK(n.generators == std::vector<std::string>{"y"});
        REQUIRE(n.relations.size() == 1);
        CHECK(n.relations[0] == make_word(n, "yy"));
    }
    SUBCASE("dedupe") {
        Presentation p = corpus::make({"x", "y"}, {"xx", "xx"});
        CHECK(normalize(p).relations.size() == 1);
    }
    SUBCASE("collapse to scalars is a condition, not a crash") {
        const Presentation n = normalize(corpus::make({"x"}, {"x"}));
        CHECK(collapsed_to_scalars(n));
        CHECK(n.relations.empty());
        CHECK(n.d == 0);
    }
}

TEST_CASE("normalize is idempotent") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Presentation p;
        const int g = 1 + static_cast<int>(rng.below(4));
        static const std::vector<std::string> names = {"a", "b", "c", "d"};
        p.generators.assign(names.begin(), names.begin() + g);
        const int r = static_cast<int>(rng.below(7));
        for (int i = 0; i < r; ++i) {
            Word w;
            const int len = 1 + static_cast<int>(rng.below(4));
            for (int j = 0; j < len; ++j)
                w.letters.push_back(static_cast<std::int32_t>(rng.below(g)));
            p.relations.push_back(std::move(w));
        }
        p.d = derived_d(p.relations);

        const Presentation once = normalize(p);
        const Presentation twice = normalize(once);
        CHECK(once.generators == twice.generators);
        CHECK(once.relations == twice.relations);
        CHECK(once.d == twice.d);
    }
}

namespace {

std::set<std::string> language_by_name(const Presentation& p, int n) {
    std::set<std::string> out;
    for (const Word& w : normal_words(n, p).words) {
        std::string s;
        for (std::int32_t l : w.letters) s += p.generators[l];
        out.insert(s);
    }
    return out;
}

} // namespace

TEST_CASE("normalize preserves the normal-word language") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        Presentation p;
        const int g = 1 + static_cast<int>(rng.below(3));
        static const std::vector<std::string> names = {"a", "b", "c"};
        p.generators.assign(names.begin(), names.begin() + g);
        const int r = static_cast<int>(rng.below(6));
        for (int i = 0; i < r; ++i) {
            Word w;
            const int len = 1 + static_cast<int>(rng.below(3));
            for (int j = 0; j < len; ++j)
                w.letters.push_back(static_cast<std::int32_t>(rng.below(g)));
            p.relations.push_back(std::move(w));
        }
        p.d = derived_d(p.relations);
        const Presentation n = normalize(p);
        for (int deg = 0; deg <= 5; ++deg)
            CHECK(language_by_name(p, deg) == language_by_name(n, deg));
    }
}

TEST_CASE("word order and display") {
    const Presentation p = corpus::p1();
    CHECK(make_word(p, "xy") < make_word(p, "yx"));
    CHECK(make_word(p, "y") < make_word(p, "xx")); // shortlex ranks by length first
    CHECK(word_string(p, make_word(p, "xyx")) == "xyx");
    CHECK(word_string(p, Word{}) == "1");

    Presentation multi;
    multi.generators = {"u1", "v"};
    CHECK(word_string(multi, Word{{0, 1}}) == "u1.v");
    CHECK_THROWS_AS(make_word(p, "xz"), ParseError);
}

TEST_CASE("subword, concat, factor") {
    const Presentation p = corpus::p1();
    const Word w = make_word(p, "xyx");
    CHECK(subword(w, 0, 2) == make_word(p, "xy"));
    CHECK(subword(w, 1, 2) == make_word(p, "yx"));
    CHECK(concat(make_word(p, "x"), make_word(p, "yx")) == w);
    CHECK(is_factor(make_word(p, "yx"), w));
    CHECK_FALSE(is_factor(make_word(p, "xx"), w));
    CHECK(is_factor(Word{}, w));
}
