// squarelab: count, construct, verify and search nonstandard squares.
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "squarelab/avoidance.hpp"
#include "squarelab/counting.hpp"
#include "squarelab/equivalence.hpp"
#include "squarelab/families.hpp"
#include "squarelab/word.hpp"

namespace {

using namespace squarelab;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

WordFormat word_format_from(const std::string& s) {
    if (s == "chars") return WordFormat::chars;
    if (s == "ints") return WordFormat::ints;
    throw CLI::ValidationError("--format", "expected chars or ints");
}

Word load_word(const std::string& word_arg, const std::string& file_arg,
               const std::string& family_arg, const std::string& input_format, int sigma) {
    int sources = (!word_arg.empty()) + (!file_arg.empty()) + (!family_arg.empty());
    if (sources != 1)
        throw CLI::ValidationError("input", "need exactly one of --word/--file/--family");
    try {
        if (!family_arg.empty()) return generate_family(family_arg);
        std::string text = word_arg;
        if (!file_arg.empty()) {
            std::ifstream in(file_arg);
            if (!in) throw ParseError("cannot open file '" + file_arg + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        return parse_word(text, word_format_from(input_format), sigma);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Letter pad_letter_for(const std::string& family_spec) {
    // w_k is appended with ones, everything else with zeros
    return family_spec.rfind("w:", 0) == 0 ? 1 : 0;
}

// ---------------------------------------------------------------- count ----

int cmd_count(const std::string& word_arg, const std::string& file_arg,
              const std::string& family_arg, const std::string& input_format, int sigma,
              const std::string& kind_arg, const std::string& mode,
              std::size_t min_length, const std::string& out_format, bool use_oracle) {
    Word w = load_word(word_arg, file_arg, family_arg, input_format, sigma);
    SquareKind kind = kind_from_name(kind_arg);
    CountReport rep = count_report(w, kind, min_length, use_oracle);

    if (out_format == "json") {
        std::cout << rep.to_json() << "\n";
    } else if (out_format == "csv") {
        std::cout << rep.to_csv();
    } else {
        if (mode == "distinct" || mode == "both")
            std::cout << "distinct=" << rep.distinct_count << "\n";
        if (mode == "classes" || mode == "both")
            std::cout << "classes=" << rep.class_count << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------- generate ----

int cmd_generate(const std::string& family_arg, long length, const std::string& out_format) {
    Word w = generate_family(family_arg);
    if (length >= 0) {
        std::size_t n = static_cast<std::size_t>(length);
        if (n < w.size())
            w = Word(std::vector<Letter>(w.letters.begin(), w.letters.begin() + n), w.sigma);
        else
            w = pad_to_length(w, n, pad_letter_for(family_arg));
    }
    std::cout << format_word(w, word_format_from(out_format)) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- verify ---

void require(bool cond, const std::string& msg) {
    if (!cond) throw CheckFailure(msg);
}

Word random_word(std::mt19937_64& rng, std::size_t max_len, int sigma) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> let_dist(0, sigma - 1);
    std::vector<Letter> letters(len_dist(rng));
    for (auto& c : letters) c = let_dist(rng);
    return Word(std::move(letters), sigma);
}

void verify_lemma3(int k) {
    require(n_set(k).size() == static_cast<std::size_t>(k) * (k + 1),
            "|N_k| != k(k+1) for k=" + std::to_string(k));
    Word wk = w_family(k);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k - 1; ++j) {
            Word q = q_word(k, i, j);
            std::int64_t ell = static_cast<std::int64_t>(i) * k +
                               static_cast<std::int64_t>(j) * (k + 1);
            require(static_cast<std::int64_t>(q.size()) == 4 * ell, "bad |q| length");
            std::int64_t pos = q_position(k, i, j);
            require(pos >= 1 && pos - 1 + static_cast<std::int64_t>(q.size()) <=
                                     static_cast<std::int64_t>(wk.size()),
                    "q position out of range");
            for (std::size_t d = 0; d < q.size(); ++d)
                require(wk[static_cast<std::size_t>(pos - 1) + d] == q[d],
                        "q_{" + std::to_string(i) + "," + std::to_string(j) +
                            "} does not occur at position " + std::to_string(pos));
            if (ell > 0) {
                PrefixParikhTable tab(q);
                ParikhVector half = tab.fragment_parikh(Fragment{1, q.size() / 2});
                require(half[0] == ell && half[1] == ell,
                        "q_{i,j} is not a balanced Abelian square");
            }
        }
    std::cout << "lemma3: all q_{i,j} balanced and found at predicted positions, k="
              << k << "\n";
}

void verify_lemma4(int k) {
    auto vectors = square_vectors(w_family(k));
    std::int64_t need = (k + 2) / 2; // ceil((k+1)/2)
    for (std::int64_t ell : n_set(k)) {
        // (0, 0) comes from the empty square and is always available
        std::int64_t count = ell == 0 ? 1 : 0;
        for (auto& [r, l] : vectors)
            if (l == ell) ++count;
        require(count >= need, "only " + std::to_string(count) + " square vectors for l=" +
                                   std::to_string(ell) + ", need " + std::to_string(need));
    }
    std::cout << "lemma4: every l in N_" << k << " has >= " << need << " square vectors\n";
}

void verify_lemma5(std::size_t max_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 200; ++t) {
        Word w = random_word(rng, max_len, 2);
        auto rep = check_uniform_gap_lemma(w);
        require(rep.ok, "uniform-gap violation on random word: " + rep.to_text());
    }
    for (int k = 1; k <= 6; ++k)
        require(check_uniform_gap_lemma(w_family(k)).ok, "uniform-gap violation on w_k");
    std::cout << "lemma5: uniform-gap property holds on all tested words\n";
}

void verify_blocks(std::size_t max_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto check = [](const Word& w) {
        std::size_t m = blocks(w).m();
        auto per_length = per_length_class_counts(w, SquareKind::abelian);
        std::int64_t total = 0;
        for (auto& [len, cnt] : per_length) {
            require(cnt <= static_cast<std::int64_t>(m), "per-length class count exceeds m");
            total += cnt;
        }
        require(2 * total <= static_cast<std::int64_t>(w.size() * m),
                "total abelian classes exceed nm/2");
    };
    for (int t = 0; t < 200; ++t) check(random_word(rng, max_len, 2));
    for (int k = 1; k <= 6; ++k) check(w_family(k));
    std::cout << "blocks: per-length <= m and total <= nm/2 on all tested words\n";
}

void verify_bounds(std::size_t max_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> sig_dist(1, 4);
    for (int t = 0; t < 100; ++t) {
        Word w = random_word(rng, max_len, sig_dist(rng));
        auto rep = verify_paper_bounds(w);
        require(rep.all_ok, "bound violation:\n" + rep.to_text() + "\non word " +
                                format_word(w, WordFormat::ints));
    }
    std::cout << "bounds: all counting inequalities hold on tested words\n";
}

void verify_op_free(std::size_t length) {
    Word base = thue_squarefree_prefix((length + 1) / 2);
    Word image = apply_morphism(psi_rules(), base);
    if (image.size() > length)
        image = Word(std::vector<Letter>(image.letters.begin(), image.letters.begin() + length),
                     image.sigma);
    auto rep = is_op_square_free(image);
    require(rep.pass, "op-square found: " + rep.to_json());
    std::cout << "op-free: psi(thue) is op-square-free to length " << image.size() << "\n";
}

void verify_param_cube_free(std::size_t length) {
    Word base = thue_morse_prefix((length + 1) / 2);
    Word image = apply_morphism(psi_rules(), base);
    if (image.size() > length)
        image = Word(std::vector<Letter>(image.letters.begin(), image.letters.begin() + length),
                     image.sigma);
    auto rep = is_param_cube_free(image);
    require(rep.pass, "param cube found: " + rep.to_json());
    std::cout << "param-cube-free: psi(tm) is parameterized-cube-free to length "
              << image.size() << "\n";
}

Word from_string(const std::string& s, int sigma) { return parse_word(s, WordFormat::chars, sigma); }

void verify_h_machinery(std::uint64_t seed) {
    // frozen worked examples (letters a,b,c as 0,1,2)
    Word abcba = from_string("01210", 3), ababb = from_string("01011", 3);
    Permutation abc = {0, 1, 2};
    require(h_encode(abc, abcba) == CodeWord({2, 2, 2, 1, 2}), "h(abcba) != 22212");
    require(h_encode(abc, ababb) == CodeWord({2, 2, 1, 1, 0}), "h(ababb) != 22110");
    require(last_occurrence_word(abcba).letters == std::vector<Letter>({2, 1, 0}),
            "L(abcba) != cba");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> sig_dist(1, 4);
    for (int t = 0; t < 1000; ++t) {
        int sigma = sig_dist(rng);
        Word u = random_word(rng, 8, sigma), v = random_word(rng, 8, sigma),
             w = random_word(rng, 8, sigma);
        Permutation pi(sigma);
        for (int i = 0; i < sigma; ++i) pi[i] = i;
        std::shuffle(pi.begin(), pi.end(), rng);
        Bijection f(sigma);
        Permutation fp(pi);
        std::shuffle(fp.begin(), fp.end(), rng);
        for (int i = 0; i < sigma; ++i) f.map[i] = fp[i];
        auto apply = [&](const Word& x) {
            Word y = x;
            for (auto& c : y.letters) c = f.map[c];
            return y;
        };

        // last-occurrence identities
        std::vector<Letter> uwvw(u.letters);
        uwvw.insert(uwvw.end(), w.letters.begin(), w.letters.end());
        uwvw.insert(uwvw.end(), v.letters.begin(), v.letters.end());
        uwvw.insert(uwvw.end(), w.letters.begin(), w.letters.end());
        std::vector<Letter> uvw(u.letters);
        uvw.insert(uvw.end(), v.letters.begin(), v.letters.end());
        uvw.insert(uvw.end(), w.letters.begin(), w.letters.end());
        require(last_occurrence_word(Word(uwvw, sigma)).letters ==
                    last_occurrence_word(Word(uvw, sigma)).letters,
                "L(uwvw) != L(uvw)");

        std::vector<Letter> ulvw(u.letters);
        auto lv = last_occurrence_word(v).letters;
        ulvw.insert(ulvw.end(), lv.begin(), lv.end());
        ulvw.insert(ulvw.end(), w.letters.begin(), w.letters.end());
        require(last_occurrence_word(Word(uvw, sigma)).letters ==
                    last_occurrence_word(Word(ulvw, sigma)).letters,
                "L(uvw) != L(u L(v) w)");

        auto fu = apply(u);
        auto lfu = last_occurrence_word(fu).letters;
        auto flu = last_occurrence_word(u);
        for (auto& c : flu.letters) c = f.map[c];
        require(lfu == flu.letters, "f(L(u)) != L(f(u))");

        Permutation fpi(pi);
        for (auto& c : fpi) c = f.map[c];
        require(h_encode(pi, u) == h_encode(fpi, fu), "h_pi(u) != h_f(pi)(f(u))");

        // composition across concatenation
        std::vector<Letter> vw_cat(v.letters);
        vw_cat.insert(vw_cat.end(), w.letters.begin(), w.letters.end());
        CodeWord lhs = h_encode(pi, Word(vw_cat, sigma));
        CodeWord rhs = h_encode(pi, v);
        CodeWord tail = h_encode(odot(pi, v), w);
        rhs.insert(rhs.end(), tail.begin(), tail.end());
        require(lhs == rhs, "h_pi(vw) != h_pi(v) h_{pi.v}(w)");

        // equal code fragments are parameterized-equivalent
        CodeWord z = h_encode(pi, u);
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = i; j < u.size(); ++j)
                for (std::size_t len = 1; i + len <= u.size() && j + len <= u.size(); ++len)
                    if (std::equal(z.begin() + i, z.begin() + i + len, z.begin() + j))
                        require(param_equiv(Word(std::vector<Letter>(u.letters.begin() + i,
                                                                     u.letters.begin() + i + len),
                                                 sigma),
                                            Word(std::vector<Letter>(u.letters.begin() + j,
                                                                     u.letters.begin() + j + len),
                                                 sigma)),
                                "equal h-code fragments are not param-equivalent");
    }

    // every small parameterized square gets an ordinary-square encoding
    for (int sigma = 1; sigma <= 3; ++sigma)
        for (std::size_t len = 2; len <= 10; len += 2) {
            std::vector<Letter> word(len, 0);
            while (true) {
                Word uv(word, sigma);
                std::size_t k = len / 2;
                Word u(std::vector<Letter>(word.begin(), word.begin() + k), sigma);
                Word v(std::vector<Letter>(word.begin() + k, word.end()), sigma);
                if (param_equiv(u, v)) {
                    Permutation pi = construct_pi(u, v);
                    CodeWord z = h_encode(pi, uv);
                    require(std::equal(z.begin(), z.begin() + k, z.begin() + k),
                            "h_{construct_pi}(uv) is not an ordinary square");
                }
                std::size_t p = 0;
                while (p < len && word[p] == sigma - 1) word[p++] = 0;
                if (p == len) break;
                ++word[p];
            }
        }
    std::cout << "h-machinery: worked examples, identities and encodings all hold\n";
}

void verify_obs_psi() {
    for (Letter a = 0; a < 3; ++a)
        for (Letter b = 0; b < 3; ++b)
            for (Letter c = 0; c < 3; ++c)
                require(psi_observation_check(a, b, c),
                        "psi observation fails on (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
    std::cout << "obs-psi: all 27 triples pass\n";
}

void verify_antisquare(std::size_t max_len) {
    for (std::size_t len = 2; len <= max_len; len += 2)
        for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
            std::vector<Letter> letters(len);
            for (std::size_t i = 0; i < len; ++i) letters[i] = (bits >> i) & 1;
            require(antisquare_dichotomy_check(Word(letters, 2)),
                    "antisquare dichotomy fails");
        }
    std::cout << "antisquare: dichotomy holds for all binary words of length <= "
              << max_len << "\n";
}

int cmd_verify(const std::string& check, int k, std::size_t length, std::uint64_t seed) {
    try {
        if (check == "lemma3") verify_lemma3(k);
        else if (check == "lemma4") verify_lemma4(k);
        else if (check == "lemma5") verify_lemma5(length ? length : 200, seed);
        else if (check == "blocks") verify_blocks(length ? length : 200, seed);
        else if (check == "bounds") verify_bounds(length ? length : 200, seed);
        else if (check == "op-free") verify_op_free(length ? length : 100000);
        else if (check == "param-cube-free") verify_param_cube_free(length ? length : 100000);
        else if (check == "h-machinery") verify_h_machinery(seed);
        else if (check == "obs-psi") verify_obs_psi();
        else if (check == "antisquare") verify_antisquare(length ? std::min<std::size_t>(length, 20) : 12);
        else throw CLI::ValidationError("--check", "unknown check '" + check + "'");
    } catch (const CheckFailure& e) {
        std::cerr << "FAIL: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

// ----------------------------------------------------------------- scan ----

int cmd_scan(const std::string& family, int k_from, int k_to, bool fit,
             const std::string& out_format) {
    if (family != "w")
        throw CLI::ValidationError("--family", "only the w family is scannable");
    if (k_from < 1 || k_to < k_from)
        throw CLI::ValidationError("--k-from/--k-to", "need 1 <= k-from <= k-to");
    struct Row {
        int k;
        std::size_t n;
        std::int64_t sq_classes;
        double lower, upper, elapsed_ms;
    };
    std::vector<Row> rows;
    for (int k = k_from; k <= k_to; ++k) {
        Word wk = w_family(k);
        CountReport rep = count_report(wk, SquareKind::abelian);
        double lower = static_cast<double>(k) * (k + 1) * (k + 1) / 2.0;
        double upper = static_cast<double>(wk.size()) * 8.0 * k / 2.0;
        rows.push_back({k, wk.size(), rep.class_count, lower, upper, rep.elapsed_ms});
    }
    double slope = 0.0;
    if (fit && rows.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto& r : rows) {
            double x = std::log(static_cast<double>(r.n));
            double y = std::log(static_cast<double>(r.sq_classes));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double m = static_cast<double>(rows.size());
        slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    }
    if (out_format == "json") {
        nlohmann::json j;
        j["rows"] = nlohmann::json::array();
        for (auto& r : rows)
            j["rows"].push_back({{"k", r.k},
                                 {"n", r.n},
                                 {"sq_classes", r.sq_classes},
                                 {"lower", r.lower},
                                 {"upper", r.upper},
                                 {"elapsed_ms", r.elapsed_ms}});
        if (fit) j["fitted_exponent"] = slope;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "k,n,sq_classes,lower,upper,elapsed_ms\n";
        for (auto& r : rows)
            std::cout << r.k << ',' << r.n << ',' << r.sq_classes << ',' << r.lower << ','
                      << r.upper << ',' << r.elapsed_ms << "\n";
        if (fit) std::cout << "fitted_exponent=" << slope << "\n";
    }
    for (auto& r : rows)
        if (static_cast<double>(r.sq_classes) < r.lower ||
            static_cast<double>(r.sq_classes) > r.upper) {
            std::cerr << "FAIL: scan row k=" << r.k << " outside [lower, upper]\n";
            return kExitCheckFailed;
        }
    return kExitOk;
}

// --------------------------------------------------------------- search ----

int cmd_search(const std::string& avoid, int sigma, std::int64_t budget,
               bool require_exhaustive) {
    SearchResult res = longest_avoiding_word(sigma, avoid_kind_from_name(avoid), budget);
    std::cout << res.to_json() << "\n";
    if (require_exhaustive && !res.exhausted) return kExitCheckFailed;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"squarelab: nonstandard squares in words"};
    app.require_subcommand(1);

    int threads = 0; // accepted for interface stability; results never depend on it
    if (const char* env = std::getenv("SQUARELAB_THREADS")) threads = std::atoi(env);
    app.add_option("--threads", threads, "worker count (affects time only)");

    // count
    auto* count = app.add_subcommand("count", "count squares in a word");
    std::string c_word, c_file, c_family, c_input_format = "chars", c_kind = "abelian",
                c_mode = "both", c_format = "text";
    int c_sigma = 0;
    std::size_t c_min_length = 2;
    bool c_oracle = false;
    count->add_option("--word", c_word, "word given inline");
    count->add_option("--file", c_file, "word read from a file");
    count->add_option("--family", c_family, "family spec, e.g. fib:5, w:4, psi(thue:1000)");
    count->add_option("--input-format", c_input_format, "chars|ints")->capture_default_str();
    count->add_option("--sigma", c_sigma, "declared alphabet size (0 = infer)");
    count->add_option("--kind", c_kind, "abelian|param|op|ordinary")->capture_default_str();
    count->add_option("--mode", c_mode, "distinct|classes|both")->capture_default_str();
    count->add_option("--min-length", c_min_length, "minimum square length")->capture_default_str();
    count->add_option("--format", c_format, "json|csv|text")->capture_default_str();
    count->add_flag("--oracle", c_oracle, "force the brute-force path");

    // generate
    auto* generate = app.add_subcommand("generate", "emit a family word");
    std::string g_family, g_format = "chars";
    long g_length = -1;
    generate->add_option("--family", g_family, "family spec")->required();
    generate->add_option("--length", g_length, "truncate/pad to this length");
    generate->add_option("--format", g_format, "chars|ints")->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "run a named property check");
    std::string v_check;
    int v_k = 4;
    std::size_t v_length = 0;
    std::uint64_t v_seed = 12345;
    verify->add_option("--check", v_check,
                       "lemma3|lemma4|lemma5|blocks|bounds|op-free|param-cube-free|"
                       "h-machinery|obs-psi|antisquare")
        ->required();
    verify->add_option("--k", v_k, "family parameter")->capture_default_str();
    verify->add_option("--length", v_length, "word length / instance size");
    verify->add_option("--seed", v_seed, "RNG seed")->capture_default_str();

    // scan
    auto* scan = app.add_subcommand("scan", "growth scan of SQ'_Abel over w_k");
    int s_from = 2, s_to = 8;
    bool s_fit = false;
    std::string s_family = "w", s_format = "text";
    scan->add_option("--family", s_family, "family to scan (only w)")->capture_default_str();
    scan->add_option("--k-from", s_from, "first k")->capture_default_str();
    scan->add_option("--k-to", s_to, "last k")->capture_default_str();
    scan->add_flag("--fit", s_fit, "fit log-log slope");
    scan->add_option("--format", s_format, "text|json")->capture_default_str();

    // search
    auto* search = app.add_subcommand("search", "longest kind-free word search");
    std::string a_avoid = "param-square";
    int a_sigma = 2;
    std::int64_t a_budget = 10'000'000;
    bool a_require_exhaustive = false;
    search->add_option("--avoid", a_avoid, "param-square|param-cube|op-square|square")
        ->capture_default_str();
    search->add_option("--sigma", a_sigma, "alphabet size")->capture_default_str();
    search->add_option("--budget", a_budget, "DFS node budget")->capture_default_str();
    search->add_flag("--require-exhaustive", a_require_exhaustive,
                     "fail unless the search tree was exhausted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed())
            return cmd_count(c_word, c_file, c_family, c_input_format, c_sigma, c_kind, c_mode,
                             c_min_length, c_format, c_oracle);
        if (generate->parsed()) return cmd_generate(g_family, g_length, g_format);
        if (verify->parsed()) return cmd_verify(v_check, v_k, v_length, v_seed);
        if (scan->parsed()) return cmd_scan(s_family, s_from, s_to, s_fit, s_format);
        if (search->parsed()) return cmd_search(a_avoid, a_sigma, a_budget, a_require_exhaustive);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
