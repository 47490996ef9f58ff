#include "squarelab/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace squarelab {

namespace {

int joint_sigma(const Word& u, const Word& v) { return std::max(u.sigma, v.sigma); }

// Builds the positionwise letter map u -> v; returns false on conflict or
// non-injectivity.
bool build_positionwise(const Word& u, const Word& v, Bijection& f) {
    Bijection g(f.sigma()); // inverse direction
    for (std::size_t i = 0; i < u.size(); ++i) {
        Letter a = u[i], b = v[i];
        if (f.map[a] == -1 && g.map[b] == -1) {
            f.map[a] = b;
            g.map[b] = a;
        } else if (f.map[a] != b || g.map[b] != a) {
            return false;
        }
    }
    return true;
}

} // namespace

bool abelian_equiv(const Word& u, const Word& v) {
    if (u.size() != v.size()) return false;
    int s = joint_sigma(u, v);
    std::vector<std::int64_t> cnt(s, 0);
    for (Letter c : u.letters) ++cnt[c];
    for (Letter c : v.letters) --cnt[c];
    return std::all_of(cnt.begin(), cnt.end(), [](std::int64_t x) { return x == 0; });
}

bool param_equiv(const Word& u, const Word& v) {
    if (u.size() != v.size()) return false;
    Bijection f(joint_sigma(u, v));
    return build_positionwise(u, v, f);
}

bool op_equiv(const Word& u, const Word& v) {
    if (u.size() != v.size()) return false;
    Bijection f(joint_sigma(u, v));
    if (!build_positionwise(u, v, f)) return false;
    // the witness map must be strictly increasing on Alph(u)
    Letter prev = -1;
    for (Letter a = 0; a < f.sigma(); ++a) {
        if (f.map[a] == -1) continue;
        if (f.map[a] <= prev) return false;
        prev = f.map[a];
    }
    return true;
}

CodeWord param_canonical(const Word& w) {
    CodeWord code;
    code.reserve(w.size());
    std::vector<Letter> rank(w.sigma, -1);
    Letter next = 0;
    for (Letter c : w.letters) {
        if (rank[c] == -1) rank[c] = next++;
        code.push_back(rank[c]);
    }
    return code;
}

CodeWord op_canonical(const Word& w) {
    std::vector<char> present(w.sigma, 0);
    for (Letter c : w.letters) present[c] = 1;
    std::vector<Letter> rank(w.sigma, 0);
    Letter r = 0;
    for (int c = 0; c < w.sigma; ++c)
        if (present[c]) rank[c] = r++;
    CodeWord code;
    code.reserve(w.size());
    for (Letter c : w.letters) code.push_back(rank[c]);
    return code;
}

bool is_antisquare(const Word& w) {
    for (Letter c : w.letters)
        if (c > 1) throw std::invalid_argument("is_antisquare: word is not binary");
    if (w.empty() || w.size() % 2 != 0) return false;
    std::size_t k = w.size() / 2;
    for (std::size_t i = 0; i < k; ++i)
        if (w[i] == w[i + k]) return false;
    return true;
}

Word last_occurrence_word(const Word& w) {
    std::vector<std::size_t> last(w.sigma, 0);
    std::vector<char> seen(w.sigma, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        last[w[i]] = i;
        seen[w[i]] = 1;
    }
    std::vector<Letter> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (seen[w[i]] && last[w[i]] == i) out.push_back(w[i]);
    return Word(std::move(out), w.sigma);
}

int ind(const Word& w, Letter a) {
    Word l = last_occurrence_word(w);
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] == a) return static_cast<int>(l.size() - 1 - i);
    throw std::invalid_argument("ind: letter " + std::to_string(a) + " does not occur");
}

CodeWord h_encode(const Permutation& pi, const Word& w) {
    // order[j] lists letters of pi w[1..i-1] by last occurrence, earliest first
    std::vector<Letter> order(pi);
    std::vector<int> pos(std::max<std::size_t>(pi.size(), static_cast<std::size_t>(w.sigma)), -1);
    for (std::size_t j = 0; j < order.size(); ++j) pos[order[j]] = static_cast<int>(j);

    CodeWord z;
    z.reserve(w.size());
    for (Letter c : w.letters) {
        if (c >= static_cast<Letter>(pos.size()) || pos[c] < 0)
            throw std::invalid_argument("h_encode: pi does not cover letter " + std::to_string(c));
        int p = pos[c];
        z.push_back(static_cast<Letter>(order.size() - 1 - p));
        // move c to the back, shifting the tail left
        for (std::size_t j = p; j + 1 < order.size(); ++j) {
            order[j] = order[j + 1];
            pos[order[j]] = static_cast<int>(j);
        }
        order.back() = c;
        pos[c] = static_cast<int>(order.size() - 1);
    }
    return z;
}

Permutation odot(const Permutation& pi, const Word& v) {
    std::vector<Letter> cat(pi);
    cat.insert(cat.end(), v.letters.begin(), v.letters.end());
    int s = 0;
    for (Letter c : cat) s = std::max(s, c + 1);
    Word l = last_occurrence_word(Word(std::move(cat), std::max(s, 1)));
    return l.letters;
}

Bijection extend_bijection(const Bijection& f, int sigma) {
    Bijection out(sigma);
    std::vector<char> in_dom(sigma, 0), in_img(sigma, 0);
    for (Letter a = 0; a < f.sigma() && a < sigma; ++a) {
        if (f.map[a] == -1) continue;
        Letter b = f.map[a];
        if (b >= sigma || in_img[b]) throw std::invalid_argument("extend_bijection: f not bijective");
        out.map[a] = b;
        in_dom[a] = 1;
        in_img[b] = 1;
    }
    // pair image-only letters onto domain-only letters in ascending order
    std::vector<Letter> from, to;
    for (Letter c = 0; c < sigma; ++c) {
        if (in_img[c] && !in_dom[c]) from.push_back(c);
        if (in_dom[c] && !in_img[c]) to.push_back(c);
    }
    for (std::size_t i = 0; i < from.size(); ++i) out.map[from[i]] = to[i];
    for (Letter c = 0; c < sigma; ++c)
        if (out.map[c] == -1) out.map[c] = c;
    return out;
}

std::int64_t perm_order(const Bijection& f) {
    int s = f.sigma();
    std::vector<char> done(s, 0);
    std::int64_t r = 1;
    for (Letter a = 0; a < s; ++a) {
        if (done[a]) continue;
        std::int64_t len = 0;
        Letter c = a;
        do {
            done[c] = 1;
            c = f.map[c];
            ++len;
        } while (c != a);
        r = std::lcm(r, len);
    }
    return r;
}

Bijection witness_bijection(const Word& u, const Word& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("witness_bijection: lengths differ");
    Bijection f(joint_sigma(u, v));
    if (!build_positionwise(u, v, f))
        throw std::invalid_argument("witness_bijection: words are not parameterized-equivalent");
    return f;
}

Permutation construct_pi(const Word& u, const Word& v) {
    int sigma = joint_sigma(u, v);
    Bijection f = extend_bijection(witness_bijection(u, v), sigma);
    std::int64_t r = perm_order(f);

    std::vector<char> used(sigma, 0);
    for (Letter c : u.letters) used[c] = 1;
    for (Letter c : v.letters) used[c] = 1;

    std::vector<Letter> cat;
    for (Letter c = 0; c < sigma; ++c)
        if (!used[c]) cat.push_back(c); // rho: ascending leftover letters

    std::vector<Letter> img(u.letters);
    for (std::int64_t step = 0; step < r; ++step) {
        cat.insert(cat.end(), img.begin(), img.end());
        for (Letter& c : img) c = f.map[c];
    }
    Word l = last_occurrence_word(Word(std::move(cat), sigma));
    return l.letters;
}

} // namespace squarelab
