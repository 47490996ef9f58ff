#ifndef SQUARELAB_COUNTING_HPP
#define SQUARELAB_COUNTING_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "squarelab/equivalence.hpp"
#include "squarelab/word.hpp"

namespace squarelab {

struct SquareOccurrence {
    Fragment fragment;
    SquareKind kind;
};

enum class CountMode { distinct, classes };

struct CountReport {
    std::size_t n = 0;
    int sigma = 1;
    SquareKind kind = SquareKind::ordinary;
    std::int64_t distinct_count = 0; // SQ
    std::int64_t class_count = 0;    // SQ'
    std::map<std::size_t, std::int64_t> per_length; // length -> class count
    std::size_t blocks_m = 0;
    std::size_t min_length = 2;
    double elapsed_ms = 0.0;

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
};

struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = true;
};

struct BoundsReport {
    std::vector<BoundCheck> checks;
    bool all_ok = true;
    std::string to_text() const;
};

struct UniformGapReport {
    bool ok = true;
    // counterexample, 1-based, set when ok == false
    std::size_t i = 0, j = 0, length = 0;
    std::string to_text() const;
};

const char* kind_name(SquareKind kind);
SquareKind kind_from_name(const std::string& name);

/// Calls cb(start, length) (1-based start) for every kind-square fragment of
/// length >= min_length, lengths ascending, starts ascending within a length.
/// Scanning stops when cb returns false.
void scan_squares(const Word& w, SquareKind kind,
                  const std::function<bool(std::size_t, std::size_t)>& cb,
                  std::size_t min_length = 2);

std::vector<SquareOccurrence> enumerate_squares(const Word& w, SquareKind kind,
                                                std::size_t min_length = 2);

/// Number of distinct subwords of w that are kind-squares (SQ).
std::int64_t count_distinct_squares(const Word& w, SquareKind kind,
                                    std::size_t min_length = 2);

/// Number of kind-equivalence classes among kind-square fragments (SQ').
std::int64_t count_nonequivalent_squares(const Word& w, SquareKind kind,
                                         std::size_t min_length = 2);

std::map<std::size_t, std::int64_t> per_length_class_counts(const Word& w, SquareKind kind,
                                                            std::size_t min_length = 2);

CountReport count_report(const Word& w, SquareKind kind, std::size_t min_length = 2,
                         bool use_oracle = false);

/// Parikh vectors (r, l) = (#0s, #1s) of halves of Abelian-square fragments;
/// binary words only.
std::set<std::pair<std::int64_t, std::int64_t>> square_vectors(const Word& w);

/// Occurrences (not distinct words) of parameterized squares uv with
/// Alph(u) != Alph(v).
std::int64_t count_imbalanced_param_fragments(const Word& w);

/// Lengths of prefixes that are kind-squares with no later kind-equivalent
/// occurrence in w.
std::vector<std::size_t> rightmost_prefix_squares(const Word& w, SquareKind kind,
                                                  std::size_t min_length = 2);

/// Independent brute-force counter; tests every fragment with definitional
/// predicates and deduplicates by sorting. Shares nothing with the optimized
/// path beyond the Word type.
std::int64_t oracle_count(const Word& w, SquareKind kind, CountMode mode,
                          std::size_t limit = 300, std::size_t min_length = 2);

/// Brute-force per-length class counts, same independence contract as
/// oracle_count.
std::map<std::size_t, std::int64_t> oracle_per_length_class_counts(
    const Word& w, SquareKind kind, std::size_t limit = 300, std::size_t min_length = 2);

/// Asserts the known upper bounds on square counts of w and reports margins.
BoundsReport verify_paper_bounds(const Word& w);

/// For every pair of same-length Abelian-square fragments at i < j whose gap
/// w[i+k..j+k-1] is uniform, asserts equal Parikh vectors.
UniformGapReport check_uniform_gap_lemma(const Word& w);

} // namespace squarelab

#endif
