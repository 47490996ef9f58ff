#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "squarelab/counting.hpp"
#include "squarelab/equivalence.hpp"
#include "squarelab/families.hpp"
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

Word random_word(std::mt19937_64& rng, std::size_t max_len, int sigma) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> let_dist(0, sigma - 1);
    std::vector<Letter> letters(len_dist(rng));
    for (auto& c : letters) c = let_dist(rng);
    return Word(std::move(letters), sigma);
}

const SquareKind kAllKinds[] = {SquareKind::ordinary, SquareKind::abelian, SquareKind::param,
                                SquareKind::op};

} // namespace

TEST_CASE("kind names round-trip") {
    for (SquareKind k : kAllKinds) CHECK(kind_from_name(kind_name(k)) == k);
    CHECK_THROWS_AS(kind_from_name("nope"), std::invalid_argument);
}

TEST_CASE("fibonacci counts") {
    Word f5 = fibonacci_word(5);
    CHECK(count_distinct_squares(f5, SquareKind::abelian) == 13);
    CHECK(count_nonequivalent_squares(f5, SquareKind::abelian) == 5);
}

TEST_CASE("trivial words") {
    CHECK(count_distinct_squares(w("00"), SquareKind::abelian) == 1);
    CHECK(count_nonequivalent_squares(w("00"), SquareKind::abelian) == 1);
    CHECK(count_distinct_squares(Word({}, 1), SquareKind::ordinary) == 0);
    CHECK(count_distinct_squares(w("01"), SquareKind::ordinary) == 0);
    CHECK(count_distinct_squares(w("01"), SquareKind::param) == 1);
}

TEST_CASE("scan_squares visits lengths ascending and respects min_length") {
    Word x = w("010010");
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    scan_squares(x, SquareKind::abelian, [&](std::size_t s, std::size_t l) {
        seen.emplace_back(s, l);
        return true;
    });
    for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1].second <= seen[i].second);
    for (auto& [s, l] : seen) {
        CHECK(l % 2 == 0);
        CHECK(s >= 1);
        CHECK(s + l - 1 <= x.size());
        Word u(std::vector<Letter>(x.letters.begin() + s - 1, x.letters.begin() + s - 1 + l / 2), 2);
        Word v(std::vector<Letter>(x.letters.begin() + s - 1 + l / 2, x.letters.begin() + s - 1 + l), 2);
        CHECK(abelian_equiv(u, v));
    }
    std::vector<std::pair<std::size_t, std::size_t>> longer;
    scan_squares(x, SquareKind::abelian, [&](std::size_t s, std::size_t l) {
        longer.emplace_back(s, l);
        return true;
    }, 4);
    for (auto& [s, l] : longer) CHECK(l >= 4);
    CHECK(longer.size() < seen.size());
}

TEST_CASE("early stop from the callback") {
    int calls = 0;
    scan_squares(w("00000000"), SquareKind::ordinary, [&](std::size_t, std::size_t) {
        ++calls;
        return false;
    });
    CHECK(calls == 1);
}

TEST_CASE("optimized counters match the oracle exhaustively") {
    for (int sigma = 1; sigma <= 3; ++sigma)
        for (std::size_t len = 0; len <= 7; ++len)
            for (const auto& x : all_words(sigma, len))
                for (SquareKind k : kAllKinds) {
                    CHECK(count_distinct_squares(x, k) ==
                          oracle_count(x, k, CountMode::distinct));
                    CHECK(count_nonequivalent_squares(x, k) ==
                          oracle_count(x, k, CountMode::classes));
                }
}

TEST_CASE("optimized counters match the oracle on random words") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> sig(1, 4);
    for (int t = 0; t < 60; ++t) {
        Word x = random_word(rng, 80, sig(rng));
        for (SquareKind k : kAllKinds) {
            CHECK(count_distinct_squares(x, k) == oracle_count(x, k, CountMode::distinct));
            CHECK(count_nonequivalent_squares(x, k) == oracle_count(x, k, CountMode::classes));
            CHECK(per_length_class_counts(x, k) == oracle_per_length_class_counts(x, k));
        }
    }
}

TEST_CASE("oracle refuses long words") {
    CHECK_THROWS_AS(oracle_count(w_family(7), SquareKind::abelian, CountMode::classes),
                    std::invalid_argument);
}

TEST_CASE("classes never exceed distinct and respect kind inclusions") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Word x = random_word(rng, 60, 3);
        for (SquareKind k : kAllKinds)
            CHECK(count_nonequivalent_squares(x, k) <= count_distinct_squares(x, k));
        // every ordinary square is op, param, abelian; every op square is param
        CHECK(count_distinct_squares(x, SquareKind::ordinary) <=
              count_distinct_squares(x, SquareKind::op));
        CHECK(count_distinct_squares(x, SquareKind::op) <=
              count_distinct_squares(x, SquareKind::param));
        CHECK(count_distinct_squares(x, SquareKind::ordinary) <=
              count_distinct_squares(x, SquareKind::abelian));
    }
}

TEST_CASE("square_vectors") {
    auto v5 = square_vectors(fibonacci_word(5));
    CHECK(v5.size() == 5);
    CHECK(v5.count({1, 1}) == 1);
    CHECK(v5.count({3, 2}) == 1);

    // the vector is the Parikh vector of either half, so 00 gives (1, 0)
    auto v00 = square_vectors(w("00"));
    CHECK(v00 == std::set<std::pair<std::int64_t, std::int64_t>>{{1, 0}});

    auto v2 = square_vectors(w_family(2));
    CHECK(v2.count({7, 7}) == 1);
    CHECK(v2.count({8, 7}) == 1);

    CHECK_THROWS_AS(square_vectors(w("012")), std::invalid_argument);
}

TEST_CASE("square_vectors cardinality equals abelian class count") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        Word x = random_word(rng, 100, 2);
        CHECK(static_cast<std::int64_t>(square_vectors(x).size()) ==
              count_nonequivalent_squares(x, SquareKind::abelian));
    }
}

TEST_CASE("per-length abelian class counts never exceed the block count") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 80; ++t) {
        Word x = random_word(rng, 120, 2);
        std::size_t m = blocks(x).m();
        std::int64_t total = 0;
        for (auto& [len, cnt] : per_length_class_counts(x, SquareKind::abelian)) {
            CHECK(cnt <= static_cast<std::int64_t>(m));
            total += cnt;
        }
        CHECK(2 * total <= static_cast<std::int64_t>(x.size() * m));
    }
}

TEST_CASE("imbalanced parameterized fragments") {
    CHECK(count_imbalanced_param_fragments(w("0101")) == 3);
    CHECK(count_imbalanced_param_fragments(w("0000")) == 0);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        Word x = random_word(rng, 50, 3);
        // recount from the definition
        std::int64_t expect = 0;
        for (std::size_t len = 2; len <= x.size(); len += 2)
            for (std::size_t i = 0; i + len <= x.size(); ++i) {
                Word u(std::vector<Letter>(x.letters.begin() + i, x.letters.begin() + i + len / 2),
                       x.sigma);
                Word v(std::vector<Letter>(x.letters.begin() + i + len / 2,
                                           x.letters.begin() + i + len),
                       x.sigma);
                if (!param_equiv(u, v)) continue;
                std::vector<char> au(x.sigma, 0), av(x.sigma, 0);
                for (Letter c : u.letters) au[c] = 1;
                for (Letter c : v.letters) av[c] = 1;
                if (au != av) ++expect;
            }
        CHECK(count_imbalanced_param_fragments(x) == expect);
    }
}

TEST_CASE("rightmost prefix squares on the two reference words") {
    Word op_word = parse_word("0 3 1 6 2 7 4 8 5 11 9 13 10 16 12 17 14 20 15 21 18 22 19 25 23 26 24 27",
                              WordFormat::ints);
    auto op_lens = rightmost_prefix_squares(op_word, SquareKind::op);
    CHECK(op_lens == std::vector<std::size_t>({16, 20, 28}));

    Word pm_word = parse_word("0 1 2 0 3 0 1 3 0 2 3 1 3 0", WordFormat::ints);
    auto pm_lens = rightmost_prefix_squares(pm_word, SquareKind::param);
    CHECK(pm_lens == std::vector<std::size_t>({8, 10, 14}));
}

TEST_CASE("ordinary words have at most two rightmost prefix squares") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        Word x = random_word(rng, 40, 2);
        CHECK(rightmost_prefix_squares(x, SquareKind::ordinary).size() <= 2);
    }
}

TEST_CASE("counting bounds hold on random words") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> sig(1, 4);
    for (int t = 0; t < 60; ++t) {
        Word x = random_word(rng, 120, sig(rng));
        BoundsReport rep = verify_paper_bounds(x);
        CHECK(rep.all_ok);
        CHECK(rep.checks.size() == (x.empty() ? 7u : 8u));
    }
}

TEST_CASE("uniform gap property") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 60; ++t) CHECK(check_uniform_gap_lemma(random_word(rng, 100, 2)).ok);
    for (int k = 1; k <= 5; ++k) CHECK(check_uniform_gap_lemma(w_family(k)).ok);
}

TEST_CASE("u_k contains the expected two-parameter family of Abelian squares") {
    for (int k = 1; k <= 8; ++k) {
        Word uk = u_family(k);
        auto occ = enumerate_squares(uk, SquareKind::abelian);
        std::set<std::pair<std::size_t, std::size_t>> found;
        for (const auto& o : occ) found.insert({o.fragment.start, o.fragment.length});
        // fragments 0^a 1 0^b 0^{k-b} 1 0^{a+2b-k} starting right of the
        // leading zeros
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b) {
                if (a + 2 * b < k) continue;
                std::size_t start = static_cast<std::size_t>(k - a) + 1; // 1-based
                std::size_t len = 2 * static_cast<std::size_t>(a + b + 1);
                CHECK(found.count({start, len}) == 1);
            }
    }
}

TEST_CASE("every second letter of psi images is 1") {
    for (const Word& base : {thue_morse_prefix(500), thue_squarefree_prefix(500)}) {
        Word img = apply_morphism(psi_rules(), base);
        for (std::size_t i = 0; i < img.size(); i += 2) CHECK(img[i] == 1);
    }
}

TEST_CASE("count_report fields and formats") {
    Word f5 = fibonacci_word(5);
    CountReport rep = count_report(f5, SquareKind::abelian);
    CHECK(rep.n == 13);
    CHECK(rep.sigma == 2);
    CHECK(rep.distinct_count == 13);
    CHECK(rep.class_count == 5);
    CHECK(rep.blocks_m == blocks(f5).m());
    CHECK(rep.min_length == 2);

    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["n"] == 13);
    CHECK(j["sigma"] == 2);
    CHECK(j["kind"] == "abelian");
    CHECK(j["distinct"] == 13);
    CHECK(j["classes"] == 5);
    CHECK(j.contains("per_length"));
    CHECK(j.contains("blocks"));
    CHECK(j.contains("min_length"));
    CHECK(j.contains("elapsed_ms"));

    std::string csv = rep.to_csv();
    CHECK(csv.rfind("kind,n,sigma,length,classes", 0) == 0);

    CountReport via_oracle = count_report(f5, SquareKind::abelian, 2, true);
    CHECK(via_oracle.distinct_count == 13);
    CHECK(via_oracle.class_count == 5);
}

TEST_CASE("min_length filters short squares consistently") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 30; ++t) {
        Word x = random_word(rng, 40, 2);
        for (SquareKind k : {SquareKind::abelian, SquareKind::param}) {
            CHECK(count_distinct_squares(x, k, 4) == oracle_count(x, k, CountMode::distinct, 300, 4));
            CHECK(count_nonequivalent_squares(x, k, 4) ==
                  oracle_count(x, k, CountMode::classes, 300, 4));
        }
    }
}
