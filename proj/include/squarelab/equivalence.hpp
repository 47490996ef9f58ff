#ifndef SQUARELAB_EQUIVALENCE_HPP
#define SQUARELAB_EQUIVALENCE_HPP

#include <vector>

#include "squarelab/word.hpp"

namespace squarelab {

/// A bijective letter map. Entries are -1 where the map is undefined,
/// so a partial bijection Alph(u) -> Alph(v) and a total one on the
/// whole alphabet share the representation.
struct Bijection {
    std::vector<Letter> map; // map[a] = f(a), or -1

    explicit Bijection(int sigma) : map(sigma, -1) {}
    int sigma() const { return static_cast<int>(map.size()); }
    bool defined(Letter a) const { return map[a] >= 0; }
    Letter operator()(Letter a) const { return map[a]; }
};

/// A permutation of the full alphabet, stored as a word listing each
/// letter exactly once.
using Permutation = std::vector<Letter>;

enum class SquareKind { ordinary, abelian, param, op };

using CodeWord = std::vector<Letter>;

bool abelian_equiv(const Word& u, const Word& v);
bool param_equiv(const Word& u, const Word& v);
bool op_equiv(const Word& u, const Word& v);

/// Relabels letters by order of first occurrence; complete invariant for
/// parameterized equivalence.
CodeWord param_canonical(const Word& w);

/// Replaces each letter by its 0-based rank within the sorted alphabet of w;
/// complete invariant for order-preserving equivalence.
CodeWord op_canonical(const Word& w);

/// True iff w = x xbar for a nonempty binary x.
bool is_antisquare(const Word& w);

/// L(w): keeps only the last occurrence of each distinct letter.
Word last_occurrence_word(const Word& w);

/// 0-based index of a in L(w) counted from the right, i.e. the number of
/// distinct letters after the last occurrence of a.
int ind(const Word& w, Letter a);

/// h_pi encoding: output[i] = ind(pi w[1..i-1], w[i]); output letters are
/// in {0, ..., sigma-1}.
CodeWord h_encode(const Permutation& pi, const Word& w);

/// pi (.) v = L(pi v), again a permutation of the full alphabet.
Permutation odot(const Permutation& pi, const Word& v);

/// Extends a bijection Alph(u) -> Alph(v) to a total bijection on the
/// alphabet: identity outside Alph(u) u Alph(v), and the leftover letters
/// of Alph(v) \ Alph(u) paired onto Alph(u) \ Alph(v) in ascending order.
Bijection extend_bijection(const Bijection& f, int sigma);

/// Least r >= 1 with f^r = id (lcm of cycle lengths).
std::int64_t perm_order(const Bijection& f);

/// Positionwise witness bijection for param_equiv(u, v); throws if the
/// words are not parameterized-equivalent.
Bijection witness_bijection(const Word& u, const Word& v);

/// Permutation pi such that h_encode(pi, uv) is an ordinary square,
/// for parameterized-equivalent u, v.
Permutation construct_pi(const Word& u, const Word& v);

} // namespace squarelab

#endif
