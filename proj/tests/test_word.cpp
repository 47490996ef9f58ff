#include <doctest.h>

#include <stdexcept>

#include "squarelab/word.hpp"

using namespace squarelab;

TEST_CASE("parse_word chars maps digits and letters") {
    Word w = parse_word("01a", WordFormat::chars);
    CHECK(w.letters == std::vector<Letter>({0, 1, 10}));
    CHECK(w.sigma == 11);
}

TEST_CASE("parse_word ints accepts separators") {
    Word w = parse_word("0, 3 1\n27", WordFormat::ints);
    CHECK(w.letters == std::vector<Letter>({0, 3, 1, 27}));
    CHECK(w.sigma == 28);
}

TEST_CASE("parse_word declared sigma is kept") {
    Word w = parse_word("010", WordFormat::chars, 4);
    CHECK(w.sigma == 4);
}

TEST_CASE("parse_word rejects letters outside the declared alphabet") {
    CHECK_THROWS_AS(parse_word("012", WordFormat::chars, 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("0 -1", WordFormat::ints), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("0?1", WordFormat::chars), std::invalid_argument);
}

TEST_CASE("format_word round-trips both formats") {
    Word w = parse_word("0110", WordFormat::chars);
    CHECK(format_word(w, WordFormat::chars) == "0110");
    Word v = parse_word("12 0 3", WordFormat::ints);
    CHECK(parse_word(format_word(v, WordFormat::ints), WordFormat::ints).letters == v.letters);
}

TEST_CASE("prefix Parikh table rows and fragments") {
    Word w = parse_word("00110", WordFormat::chars);
    PrefixParikhTable t(w);
    CHECK(t.row(0) == ParikhVector({0, 0}));
    CHECK(t.row(5) == ParikhVector({3, 2}));
    CHECK(t.fragment_parikh(Fragment{2, 3}) == ParikhVector({1, 2}));
    CHECK(t.fragment_parikh(Fragment{1, 0}) == ParikhVector({0, 0}));
    CHECK_THROWS_AS(t.fragment_parikh(Fragment{4, 3}), std::out_of_range);
}

TEST_CASE("blocks splits into maximal runs") {
    Word w = parse_word("0011012", WordFormat::chars);
    RunLengthEncoding rle = blocks(w);
    REQUIRE(rle.m() == 5);
    CHECK(rle.runs[0] == std::pair<Letter, std::size_t>{0, 2});
    CHECK(rle.runs[1] == std::pair<Letter, std::size_t>{1, 2});
    CHECK(rle.runs[4] == std::pair<Letter, std::size_t>{2, 1});
    CHECK(blocks(Word({}, 1)).m() == 0);
}

TEST_CASE("is_uniform detects single-letter fragments") {
    Word w = parse_word("00110", WordFormat::chars);
    CHECK(is_uniform(w, Fragment{1, 2}));
    CHECK(is_uniform(w, Fragment{3, 2}));
    CHECK_FALSE(is_uniform(w, Fragment{2, 2}));
    CHECK(is_uniform(w, Fragment{5, 1}));
}
