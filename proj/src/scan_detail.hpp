#ifndef SQUARELAB_SCAN_DETAIL_HPP
#define SQUARELAB_SCAN_DETAIL_HPP

#include <cstdint>
#include <vector>

#include "squarelab/word.hpp"

namespace squarelab::detail {

// dist[t] = distance to the previous occurrence of w[t], or n+1 if none.
std::vector<std::int64_t> prev_distances(const Word& w);

// nxt[p * sigma + a] = smallest index >= p with w[index] == a, or n.
std::vector<std::int32_t> next_occurrence_table(const Word& w);

// flags[i] = 1 iff the fragment w[i..i+2k-1] (0-based) is a parameterized
// square, for 0 <= i <= n-2k. Derived from the prev-encoding: halves match
// iff no pair (t, t+k) inside the window mismatches before offset k.
void param_square_flags(const std::vector<std::int64_t>& dist, std::size_t n,
                        std::size_t k, std::vector<char>& flags);

// True iff the positionwise witness of the parameterized square at (i, 2k)
// is strictly increasing, i.e. the fragment is an op square.
bool op_witness_monotone(const Word& w, const std::vector<std::int32_t>& nxt,
                         std::size_t i, std::size_t k);

} // namespace squarelab::detail

#endif
