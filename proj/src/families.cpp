#include "squarelab/families.hpp"

#include <bit>
#include <stdexcept>

namespace squarelab {

namespace {

void append_run(std::vector<Letter>& out, Letter c, std::int64_t count) {
    out.insert(out.end(), static_cast<std::size_t>(count), c);
}

void check_qp_params(int k, int i, int j) {
    if (k < 1 || i < 0 || i > k || j < 0 || j > k - 1)
        throw std::invalid_argument("q/p parameters out of range: need 1<=k, 0<=i<=k, 0<=j<=k-1");
}

} // namespace

Word fibonacci_word(int k) {
    if (k < 0) throw std::invalid_argument("fibonacci_word: k must be >= 0");
    std::vector<Letter> prev = {0};      // Fib_0
    if (k == 0) return Word(prev, 2);
    std::vector<Letter> cur = {0, 1};    // Fib_1
    for (int i = 2; i <= k; ++i) {
        std::vector<Letter> next(cur);
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Word(std::move(cur), 2);
}

Word u_family(int k) {
    if (k < 1) throw std::invalid_argument("u_family: k must be >= 1");
    std::vector<Letter> out;
    out.reserve(4 * static_cast<std::size_t>(k) + 2);
    append_run(out, 0, k);
    out.push_back(1);
    append_run(out, 0, k);
    out.push_back(1);
    append_run(out, 0, 2 * static_cast<std::int64_t>(k));
    return Word(std::move(out), 2);
}

Word w_family(int k) {
    if (k < 1) throw std::invalid_argument("w_family: k must be >= 1");
    std::vector<Letter> out;
    out.reserve(8 * static_cast<std::size_t>(k) * k + 2 * k);
    for (int rep = 0; rep < 3 * k; ++rep) {
        append_run(out, 0, k);
        append_run(out, 1, k);
    }
    for (int rep = 0; rep < k; ++rep) {
        append_run(out, 0, k + 1);
        append_run(out, 1, k + 1);
    }
    return Word(std::move(out), 2);
}

std::set<std::int64_t> n_set(int k) {
    if (k < 1) throw std::invalid_argument("n_set: k must be >= 1");
    std::set<std::int64_t> s;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k - 1; ++j)
            s.insert(static_cast<std::int64_t>(i) * k + static_cast<std::int64_t>(j) * (k + 1));
    return s;
}

Word q_word(int k, int i, int j) {
    check_qp_params(k, i, j);
    std::vector<Letter> out;
    append_run(out, 1, j);
    for (int rep = 0; rep < 2 * i + j; ++rep) {
        append_run(out, 0, k);
        append_run(out, 1, k);
    }
    for (int rep = 0; rep < j; ++rep) {
        append_run(out, 0, k + 1);
        append_run(out, 1, k + 1);
    }
    append_run(out, 0, j);
    return Word(std::move(out), 2);
}

Word p_prefix(int k, int i, int j) {
    check_qp_params(k, i, j);
    std::vector<Letter> out;
    append_run(out, 1, j);
    for (int rep = 0; rep < i + j; ++rep) {
        append_run(out, 0, k);
        append_run(out, 1, k);
    }
    append_run(out, 0, j);
    return Word(std::move(out), 2);
}

std::int64_t q_position(int k, int i, int j) {
    return 6LL * k * k - 4LL * i * k - (2LL * k + 1) * j + 1;
}

Word thue_squarefree_prefix(std::size_t n) {
    // fixed point of 0 -> 012, 1 -> 02, 2 -> 1, grown by rewriting
    std::vector<Letter> cur = {0};
    while (cur.size() < n) {
        std::vector<Letter> next;
        next.reserve(cur.size() * 3);
        for (Letter c : cur) {
            switch (c) {
                case 0: next.push_back(0); next.push_back(1); next.push_back(2); break;
                case 1: next.push_back(0); next.push_back(2); break;
                default: next.push_back(1); break;
            }
        }
        cur = std::move(next);
    }
    cur.resize(n);
    return Word(std::move(cur), 3);
}

Word thue_morse_prefix(std::size_t n) {
    std::vector<Letter> out(n);
    for (std::size_t p = 0; p < n; ++p)
        out[p] = static_cast<Letter>(std::popcount(p) & 1);
    return Word(std::move(out), 2);
}

const MorphismRules& psi_rules() {
    static const MorphismRules rules = {{0, {1, 0}}, {1, {1, 1}}, {2, {1, 2}}};
    return rules;
}

Word apply_morphism(const MorphismRules& rules, const Word& w) {
    std::vector<Letter> out;
    Letter mx = -1;
    for (Letter c : w.letters) {
        auto it = rules.find(c);
        if (it == rules.end())
            throw std::invalid_argument("apply_morphism: no rule for letter " + std::to_string(c));
        for (Letter d : it->second) {
            out.push_back(d);
            if (d > mx) mx = d;
        }
    }
    int sigma = out.empty() ? w.sigma : mx + 1;
    return Word(std::move(out), sigma);
}

Word pad_to_length(const Word& w, std::size_t n, Letter letter) {
    if (n < w.size()) throw std::invalid_argument("pad_to_length: target shorter than word");
    if (letter >= w.sigma || letter < 0)
        throw std::invalid_argument("pad_to_length: letter outside alphabet");
    std::vector<Letter> out(w.letters);
    out.insert(out.end(), n - w.size(), letter);
    return Word(std::move(out), w.sigma);
}

Word generate_family(const std::string& spec) {
    if (spec.rfind("psi(", 0) == 0 && spec.back() == ')')
        return apply_morphism(psi_rules(), generate_family(spec.substr(4, spec.size() - 5)));

    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad family spec '" + spec + "': expected name:params");
    std::string name = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);

    std::vector<long> nums;
    std::size_t pos = 0;
    while (pos < params.size()) {
        auto comma = params.find(',', pos);
        std::string tok = params.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            nums.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad family spec '" + spec + "': bad number '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    auto need = [&](std::size_t n) {
        if (nums.size() != n)
            throw std::invalid_argument("bad family spec '" + spec + "': wrong parameter count");
    };
    if (name == "fib") { need(1); return fibonacci_word(static_cast<int>(nums[0])); }
    if (name == "u") { need(1); return u_family(static_cast<int>(nums[0])); }
    if (name == "w") { need(1); return w_family(static_cast<int>(nums[0])); }
    if (name == "q") { need(3); return q_word(static_cast<int>(nums[0]), static_cast<int>(nums[1]), static_cast<int>(nums[2])); }
    if (name == "p") { need(3); return p_prefix(static_cast<int>(nums[0]), static_cast<int>(nums[1]), static_cast<int>(nums[2])); }
    if (name == "thue") { need(1); return thue_squarefree_prefix(static_cast<std::size_t>(nums[0])); }
    if (name == "tm") { need(1); return thue_morse_prefix(static_cast<std::size_t>(nums[0])); }
    throw std::invalid_argument("bad family spec '" + spec + "': unknown family '" + name + "'");
}

} // namespace squarelab
