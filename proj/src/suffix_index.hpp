#ifndef SQUARELAB_SUFFIX_INDEX_HPP
#define SQUARELAB_SUFFIX_INDEX_HPP

#include <cstdint>
#include <vector>

#include "squarelab/word.hpp"

namespace squarelab::detail {

// Suffix array + LCP + range-minimum table, used to deduplicate same-length
// fragments exactly (no probabilistic fingerprints).
class SuffixIndex {
public:
    explicit SuffixIndex(const Word& w);

    int rank_of(std::size_t i) const { return rank_[i]; }

    // lcp between the suffixes at rank positions ra < rb
    std::size_t lcp_between_ranks(int ra, int rb) const;

    bool fragments_equal(std::size_t i, std::size_t j, std::size_t len) const;

private:
    std::size_t n_;
    std::vector<int> sa_, rank_, lcp_;
    std::vector<std::vector<std::int32_t>> sparse_;
    std::vector<int> log2_;
};

} // namespace squarelab::detail

#endif
