// Brute-force reference counters. Everything here retests fragments from
// the definitions and deduplicates by sorting; it deliberately shares no
// code with the optimized scanners.
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "squarelab/counting.hpp"

namespace squarelab {

namespace {

using Letters = std::vector<Letter>;

bool halves_abelian(const Letters& u, const Letters& v) {
    Letters a(u), b(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool halves_param(const Letters& u, const Letters& v, int sigma) {
    std::vector<Letter> f(sigma, -1), g(sigma, -1);
    for (std::size_t i = 0; i < u.size(); ++i) {
        Letter a = u[i], b = v[i];
        if (f[a] == -1 && g[b] == -1) {
            f[a] = b;
            g[b] = a;
        } else if (f[a] != b || g[b] != a) {
            return false;
        }
    }
    return true;
}

bool halves_op(const Letters& u, const Letters& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) {
            if ((u[i] < u[j]) != (v[i] < v[j])) return false;
            if ((u[i] == u[j]) != (v[i] == v[j])) return false;
        }
    return true;
}

bool is_kind_square(const Letters& frag, SquareKind kind, int sigma) {
    std::size_t k = frag.size() / 2;
    Letters u(frag.begin(), frag.begin() + k), v(frag.begin() + k, frag.end());
    switch (kind) {
        case SquareKind::ordinary: return u == v;
        case SquareKind::abelian: return halves_abelian(u, v);
        case SquareKind::param: return halves_param(u, v, sigma);
        case SquareKind::op: return halves_op(u, v);
    }
    return false;
}

Letters class_key(const Letters& frag, SquareKind kind) {
    switch (kind) {
        case SquareKind::ordinary:
            return frag;
        case SquareKind::abelian: {
            Letters key(frag);
            std::sort(key.begin(), key.end());
            return key;
        }
        case SquareKind::param: {
            // first-occurrence relabeling, recomputed locally
            Letters key;
            key.reserve(frag.size());
            std::vector<Letter> seen;
            for (Letter c : frag) {
                auto it = std::find(seen.begin(), seen.end(), c);
                if (it == seen.end()) {
                    key.push_back(static_cast<Letter>(seen.size()));
                    seen.push_back(c);
                } else {
                    key.push_back(static_cast<Letter>(it - seen.begin()));
                }
            }
            return key;
        }
        case SquareKind::op: {
            Letters alph(frag);
            std::sort(alph.begin(), alph.end());
            alph.erase(std::unique(alph.begin(), alph.end()), alph.end());
            Letters key;
            key.reserve(frag.size());
            for (Letter c : frag)
                key.push_back(static_cast<Letter>(
                    std::lower_bound(alph.begin(), alph.end(), c) - alph.begin()));
            return key;
        }
    }
    return frag;
}

std::vector<Letters> collect_keys(const Word& w, SquareKind kind, CountMode mode,
                                  std::size_t limit, std::size_t min_length) {
    if (w.size() > limit)
        throw std::invalid_argument("oracle_count: word exceeds oracle limit");
    std::vector<Letters> keys;
    for (std::size_t len = 2; len <= w.size(); len += 2) {
        if (len < min_length) continue;
        for (std::size_t i = 0; i + len <= w.size(); ++i) {
            Letters frag(w.letters.begin() + i, w.letters.begin() + i + len);
            if (!is_kind_square(frag, kind, w.sigma)) continue;
            keys.push_back(mode == CountMode::distinct ? frag : class_key(frag, kind));
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

} // namespace

std::int64_t oracle_count(const Word& w, SquareKind kind, CountMode mode,
                          std::size_t limit, std::size_t min_length) {
    return static_cast<std::int64_t>(collect_keys(w, kind, mode, limit, min_length).size());
}

std::map<std::size_t, std::int64_t> oracle_per_length_class_counts(
    const Word& w, SquareKind kind, std::size_t limit, std::size_t min_length) {
    auto keys = collect_keys(w, kind, CountMode::classes, limit, min_length);
    std::map<std::size_t, std::int64_t> per_length;
    for (const auto& key : keys) ++per_length[key.size()];
    return per_length;
}

} // namespace squarelab
