#ifndef SQUARELAB_FAMILIES_HPP
#define SQUARELAB_FAMILIES_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "squarelab/word.hpp"

namespace squarelab {

/// Fib_0 = 0, Fib_1 = 01, Fib_k = Fib_{k-1} Fib_{k-2}.
Word fibonacci_word(int k);

/// u_k = 0^k 1 0^k 1 0^{2k}, length 4k+2.
Word u_family(int k);

/// w_k = (0^k 1^k)^{3k} (0^{k+1} 1^{k+1})^k, length 8k^2+2k.
Word w_family(int k);

/// N_k = { ik + j(k+1) : 0 <= i <= k, 0 <= j <= k-1 }; |N_k| = k(k+1).
std::set<std::int64_t> n_set(int k);

/// q_{i,j} = 1^j (0^k 1^k)^{2i+j} (0^{k+1} 1^{k+1})^j 0^j, length 4l
/// with l = ik + j(k+1).
Word q_word(int k, int i, int j);

/// p_{i,j} = 1^j (0^k 1^k)^{i+j} 0^j, the balanced half of q_{i,j}.
Word p_prefix(int k, int i, int j);

/// 1-based position at which q_{i,j} occurs in w_k: 6k^2 - 4ik - (2k+1)j + 1.
std::int64_t q_position(int k, int i, int j);

/// Prefix of the fixed point of 0 -> 012, 1 -> 02, 2 -> 1
/// (square-free; starts 012021012102012021).
Word thue_squarefree_prefix(std::size_t n);

/// Prefix of the Thue-Morse word 0110100110010110...
Word thue_morse_prefix(std::size_t n);

using MorphismRules = std::map<Letter, std::vector<Letter>>;

/// psi: 0 -> 10, 1 -> 11, 2 -> 12.
const MorphismRules& psi_rules();

Word apply_morphism(const MorphismRules& rules, const Word& w);

/// w followed by (n - |w|) copies of letter; n < |w| is an error.
Word pad_to_length(const Word& w, std::size_t n, Letter letter);

/// Parses CLI family specs: fib:5, u:3, w:4, q:4,2,1, p:4,2,1,
/// thue:1000, tm:1000, psi(thue:1000).
Word generate_family(const std::string& spec);

} // namespace squarelab

#endif
