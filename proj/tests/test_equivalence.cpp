#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "squarelab/equivalence.hpp"
#include "squarelab/word.hpp"

using namespace squarelab;

namespace {

Word w(const std::string& s, int sigma = 0) { return parse_word(s, WordFormat::chars, sigma); }

std::vector<Word> all_words(int sigma, std::size_t len) {
    std::vector<Word> out;
    std::vector<Letter> cur(len, 0);
    while (true) {
        out.emplace_back(cur, sigma);
        std::size_t p = 0;
        while (p < len && cur[p] == sigma - 1) cur[p++] = 0;
        if (p == len) break;
        ++cur[p];
    }
    return out;
}

Word half(const Word& x, bool second) {
    std::size_t k = x.size() / 2;
    auto b = x.letters.begin() + (second ? k : 0);
    return Word(std::vector<Letter>(b, b + k), x.sigma);
}

} // namespace

TEST_CASE("classification of the four reference squares") {
    auto classify = [](const std::string& s) {
        Word x = w(s);
        Word u = half(x, false), v = half(x, true);
        return std::tuple{u.letters == v.letters, abelian_equiv(u, v), param_equiv(u, v),
                          op_equiv(u, v)};
    };
    CHECK(classify("12131213") == std::tuple{true, true, true, true});
    CHECK(classify("12133112") == std::tuple{false, true, false, false});
    CHECK(classify("12134142") == std::tuple{false, false, true, false});
    CHECK(classify("12131314") == std::tuple{false, false, true, true});
}

TEST_CASE("kind hierarchy on all small words") {
    for (int sigma = 1; sigma <= 3; ++sigma)
        for (std::size_t len = 1; len <= 4; ++len) {
            auto words = all_words(sigma, len);
            for (const auto& u : words)
                for (const auto& v : words) {
                    if (u.letters == v.letters) {
                        CHECK(abelian_equiv(u, v));
                        CHECK(op_equiv(u, v));
                    }
                    if (op_equiv(u, v)) CHECK(param_equiv(u, v));
                }
        }
}

TEST_CASE("equivalences are reflexive, symmetric and transitive") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> let(0, 3), len(0, 10);
    auto rnd = [&] {
        std::vector<Letter> l(len(rng));
        for (auto& c : l) c = let(rng);
        return Word(std::move(l), 4);
    };
    for (int t = 0; t < 300; ++t) {
        Word a = rnd(), b = rnd(), c = rnd();
        for (auto eq : {abelian_equiv, param_equiv, op_equiv}) {
            CHECK(eq(a, a));
            CHECK(eq(a, b) == eq(b, a));
            if (eq(a, b) && eq(b, c)) CHECK(eq(a, c));
        }
    }
}

TEST_CASE("canonical codes are complete invariants") {
    for (int sigma = 1; sigma <= 3; ++sigma)
        for (std::size_t len = 1; len <= 5; ++len) {
            auto words = all_words(sigma, len);
            for (const auto& u : words)
                for (const auto& v : words) {
                    CHECK(param_equiv(u, v) == (param_canonical(u) == param_canonical(v)));
                    CHECK(op_equiv(u, v) == (op_canonical(u) == op_canonical(v)));
                }
        }
}

TEST_CASE("is_antisquare") {
    CHECK(is_antisquare(w("01")));
    CHECK(is_antisquare(w("0110", 2)));
    CHECK_FALSE(is_antisquare(w("0101", 2)));
    CHECK_FALSE(is_antisquare(w("010", 2)));
    CHECK_FALSE(is_antisquare(Word({}, 2)));
    CHECK_THROWS_AS(is_antisquare(w("012")), std::invalid_argument);
}

TEST_CASE("last_occurrence_word and ind") {
    CHECK(last_occurrence_word(w("abcba")).letters == std::vector<Letter>({12, 11, 10}));
    CHECK(last_occurrence_word(w("ababb", 12)).letters == std::vector<Letter>({10, 11}));
    Word x = w("abcba");
    CHECK(ind(x, 12) == 2);
    CHECK(ind(x, 11) == 1);
    CHECK(ind(x, 10) == 0);
    CHECK_THROWS_AS(ind(w("00"), 1), std::invalid_argument);
}

TEST_CASE("h_encode worked examples") {
    // a, b, c as 0, 1, 2 and pi = abc
    Permutation pi = {0, 1, 2};
    CHECK(h_encode(pi, w("01210")) == CodeWord({2, 2, 2, 1, 2}));
    CHECK(h_encode(pi, w("01011", 3)) == CodeWord({2, 2, 1, 1, 0}));
    CHECK_THROWS_AS(h_encode(Permutation{0, 1}, w("012")), std::invalid_argument);
}

TEST_CASE("odot composes h_encode across concatenation") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> let(0, 2), len(0, 6);
    for (int t = 0; t < 200; ++t) {
        std::vector<Letter> a(len(rng)), b(len(rng));
        for (auto& c : a) c = let(rng);
        for (auto& c : b) c = let(rng);
        Word v(a, 3), x(b, 3);
        Permutation pi = {0, 1, 2};
        std::shuffle(pi.begin(), pi.end(), rng);
        std::vector<Letter> cat(a);
        cat.insert(cat.end(), b.begin(), b.end());
        CodeWord lhs = h_encode(pi, Word(cat, 3));
        CodeWord rhs = h_encode(pi, v);
        CodeWord tail = h_encode(odot(pi, v), x);
        rhs.insert(rhs.end(), tail.begin(), tail.end());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("extend_bijection pairs leftovers ascending") {
    Bijection f(4);
    f.map[0] = 2; // domain {0}, image {2}
    Bijection g = extend_bijection(f, 4);
    CHECK(g.map == std::vector<Letter>({2, 1, 0, 3}));

    Bijection id = extend_bijection(Bijection(3), 3);
    CHECK(id.map == std::vector<Letter>({0, 1, 2}));
}

TEST_CASE("perm_order is the lcm of cycle lengths") {
    Bijection f(5);
    f.map = {1, 0, 3, 4, 2}; // 2-cycle and 3-cycle
    CHECK(perm_order(f) == 6);
    Bijection id(3);
    id.map = {0, 1, 2};
    CHECK(perm_order(id) == 1);
}

TEST_CASE("witness_bijection matches the positionwise map") {
    Bijection f = witness_bijection(w("0102", 4), w("1210", 4));
    CHECK(f.map[0] == 1);
    CHECK(f.map[1] == 2);
    CHECK(f.map[2] == 0);
    CHECK_THROWS_AS(witness_bijection(w("00", 2), w("01", 2)), std::invalid_argument);
    CHECK_THROWS_AS(witness_bijection(w("0", 2), w("01", 2)), std::invalid_argument);
}

TEST_CASE("construct_pi turns a parameterized square into an ordinary one") {
    // u = ab, v = ba
    Permutation pi = construct_pi(w("01", 2), w("10", 2));
    CHECK(pi == Permutation({1, 0}));
    CHECK(h_encode(pi, w("0110", 2)) == CodeWord({0, 1, 0, 1}));

    for (int sigma = 1; sigma <= 3; ++sigma)
        for (std::size_t k = 1; k <= 3; ++k) {
            auto words = all_words(sigma, k);
            for (const auto& u : words)
                for (const auto& v : words) {
                    if (!param_equiv(u, v)) continue;
                    Permutation p = construct_pi(u, v);
                    std::vector<Letter> uv(u.letters);
                    uv.insert(uv.end(), v.letters.begin(), v.letters.end());
                    CodeWord z = h_encode(p, Word(uv, sigma));
                    CHECK(std::equal(z.begin(), z.begin() + k, z.begin() + k));
                }
        }
}
