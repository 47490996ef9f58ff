#ifndef SQUARELAB_AVOIDANCE_HPP
#define SQUARELAB_AVOIDANCE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "squarelab/word.hpp"

namespace squarelab {

enum class AvoidKind { ordinary_square, param_square, param_cube, op_square };

const char* avoid_kind_name(AvoidKind kind);
AvoidKind avoid_kind_from_name(const std::string& name);

// Nontriviality thresholds shared by all checkers: length-2 squares and
// length-3 cubes are unavoidable under parameterized/op equivalence.
inline constexpr std::size_t kNontrivialSquareLength = 4;
inline constexpr std::size_t kNontrivialCubeLength = 6;

struct AvoidanceReport {
    std::size_t checked_length = 0;
    bool pass = true;
    std::optional<Fragment> violation; // 1-based, set when pass == false
    std::string violation_kind;

    std::string to_json() const;
};

struct SearchResult {
    int sigma = 1;
    AvoidKind kind = AvoidKind::param_square;
    std::size_t max_length = 0;
    Word witness;
    bool exhausted = false;
    std::int64_t nodes_visited = 0;

    std::string to_json() const;
};

/// Fails iff some fragment xx (ordinary, length >= 2) occurs.
AvoidanceReport is_square_free(const Word& w);

/// Fails iff some fragment of even length >= 4 has op-equivalent halves.
AvoidanceReport is_op_square_free(const Word& w);

/// Fails iff some fragment of even length >= 4 has param-equivalent halves.
AvoidanceReport is_param_square_free(const Word& w);

/// Fails iff some fragment of length 3t >= 6 splits into u v x with uv and
/// vx both parameterized squares.
AvoidanceReport is_param_cube_free(const Word& w);

/// Depth-first search for the longest kind-free word over sigma letters.
/// exhausted = true certifies that max_length is globally maximal.
SearchResult longest_avoiding_word(int sigma, AvoidKind kind,
                                   std::int64_t node_budget = 10'000'000);

/// Checks both implications of the psi helper observation on one triple:
/// 1a ~ 1b <=> a = b, and a1b ~ 1c1 => a = b (op equivalence).
bool psi_observation_check(Letter a, Letter b, Letter c);

/// For a binary word of even length: param-equivalent halves iff the word is
/// an ordinary square or an antisquare.
bool antisquare_dichotomy_check(const Word& w);

} // namespace squarelab

#endif
