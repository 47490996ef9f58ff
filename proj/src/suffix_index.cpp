#include "suffix_index.hpp"

#include <algorithm>
#include <numeric>

namespace squarelab::detail {

SuffixIndex::SuffixIndex(const Word& w) : n_(w.size()) {
    std::size_t n = n_;
    sa_.resize(n);
    rank_.resize(n);
    if (n == 0) return;

    std::iota(sa_.begin(), sa_.end(), 0);
    std::vector<int> cls(n), tmp(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = w[i];

    for (std::size_t len = 1;; len *= 2) {
        auto key = [&](int i) {
            int second = static_cast<std::size_t>(i) + len < n ? cls[i + len] + 1 : 0;
            return std::pair<int, int>(cls[i], second);
        };
        std::sort(sa_.begin(), sa_.end(), [&](int a, int b) { return key(a) < key(b); });
        tmp[sa_[0]] = 0;
        for (std::size_t r = 1; r < n; ++r)
            tmp[sa_[r]] = tmp[sa_[r - 1]] + (key(sa_[r - 1]) < key(sa_[r]) ? 1 : 0);
        cls = tmp;
        if (cls[sa_[n - 1]] == static_cast<int>(n) - 1) break;
    }
    for (std::size_t i = 0; i < n; ++i) rank_[i] = cls[i];

    // Kasai
    lcp_.assign(n, 0); // lcp_[r] = lcp(sa[r-1], sa[r]), lcp_[0] unused
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank_[i] == 0) {
            h = 0;
            continue;
        }
        std::size_t j = sa_[rank_[i] - 1];
        if (h > 0) --h;
        while (i + h < n && j + h < n && w[i + h] == w[j + h]) ++h;
        lcp_[rank_[i]] = static_cast<int>(h);
    }

    log2_.assign(n + 1, 0);
    for (std::size_t i = 2; i <= n; ++i) log2_[i] = log2_[i / 2] + 1;
    int levels = log2_[n] + 1;
    sparse_.assign(levels, std::vector<std::int32_t>(n));
    for (std::size_t i = 0; i < n; ++i) sparse_[0][i] = lcp_[i];
    for (int l = 1; l < levels; ++l)
        for (std::size_t i = 0; i + (1u << l) <= n; ++i)
            sparse_[l][i] = std::min(sparse_[l - 1][i], sparse_[l - 1][i + (1u << (l - 1))]);
}

std::size_t SuffixIndex::lcp_between_ranks(int ra, int rb) const {
    // min of lcp_[ra+1 .. rb]
    int lo = ra + 1, hi = rb;
    int l = log2_[hi - lo + 1];
    return static_cast<std::size_t>(
        std::min(sparse_[l][lo], sparse_[l][hi - (1 << l) + 1]));
}

bool SuffixIndex::fragments_equal(std::size_t i, std::size_t j, std::size_t len) const {
    if (i == j) return true;
    int ra = rank_[i], rb = rank_[j];
    if (ra > rb) std::swap(ra, rb);
    return lcp_between_ranks(ra, rb) >= len;
}

} // namespace squarelab::detail
