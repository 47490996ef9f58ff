#include "scan_detail.hpp"

#include <limits>

namespace squarelab::detail {

std::vector<std::int64_t> prev_distances(const Word& w) {
    std::size_t n = w.size();
    std::vector<std::int64_t> dist(n);
    std::vector<std::int64_t> last(w.sigma, -1);
    for (std::size_t t = 0; t < n; ++t) {
        Letter c = w[t];
        dist[t] = last[c] < 0 ? static_cast<std::int64_t>(n) + 1
                              : static_cast<std::int64_t>(t) - last[c];
        last[c] = static_cast<std::int64_t>(t);
    }
    return dist;
}

std::vector<std::int32_t> next_occurrence_table(const Word& w) {
    std::size_t n = w.size();
    int sigma = w.sigma;
    std::vector<std::int32_t> nxt((n + 1) * sigma);
    for (int a = 0; a < sigma; ++a) nxt[n * sigma + a] = static_cast<std::int32_t>(n);
    for (std::size_t p = n; p-- > 0;) {
        for (int a = 0; a < sigma; ++a) nxt[p * sigma + a] = nxt[(p + 1) * sigma + a];
        nxt[p * sigma + w[p]] = static_cast<std::int32_t>(p);
    }
    return nxt;
}

void param_square_flags(const std::vector<std::int64_t>& dist, std::size_t n,
                        std::size_t k, std::vector<char>& flags) {
    // For each pair (t, t+k) the truncated prev-codes of the two halves first
    // differ at offset min(dist[t], dist[t+k]) unless the distances are equal,
    // so the fragment at i is a square iff i > beta(t) for all t in [i, i+k).
    constexpr std::int64_t NEG = std::numeric_limits<std::int64_t>::min() / 2;
    if (n < 2 * k) {
        flags.clear();
        return;
    }
    std::size_t cnt = n - 2 * k + 1; // starts 0..n-2k
    flags.assign(cnt, 0);

    thread_local std::vector<std::int64_t> beta;
    thread_local std::vector<std::size_t> deq;
    beta.resize(n - k);
    for (std::size_t t = 0; t + k < n; ++t) {
        std::int64_t e1 = dist[t], e2 = dist[t + k];
        beta[t] = (e1 == e2) ? NEG : static_cast<std::int64_t>(t) - std::min(e1, e2);
    }

    // sliding window max over beta, window size k
    deq.resize(n - k);
    std::size_t head = 0, tail = 0; // [head, tail)
    for (std::size_t t = 0; t < k; ++t) {
        while (tail > head && beta[deq[tail - 1]] <= beta[t]) --tail;
        deq[tail++] = t;
    }
    for (std::size_t i = 0;; ++i) {
        flags[i] = beta[deq[head]] < static_cast<std::int64_t>(i) ? 1 : 0;
        if (i + 1 >= cnt) break;
        if (deq[head] == i) ++head;
        std::size_t t = i + k;
        while (tail > head && beta[deq[tail - 1]] <= beta[t]) --tail;
        deq[tail++] = t;
    }
}

bool op_witness_monotone(const Word& w, const std::vector<std::int32_t>& nxt,
                         std::size_t i, std::size_t k) {
    int sigma = w.sigma;
    Letter prev = -1;
    for (int a = 0; a < sigma; ++a) {
        std::int32_t t = nxt[i * sigma + a];
        if (static_cast<std::size_t>(t) >= i + k) continue; // a absent from the first half
        Letter b = w[static_cast<std::size_t>(t) + k];
        if (b <= prev) return false;
        prev = b;
    }
    return true;
}

} // namespace squarelab::detail
