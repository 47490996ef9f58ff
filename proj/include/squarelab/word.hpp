#ifndef SQUARELAB_WORD_HPP
#define SQUARELAB_WORD_HPP

#include <cstdint>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace squarelab {

using Letter = int;

/// A finite word over the ordered alphabet {0, ..., sigma-1}.
/// sigma is carried explicitly so Parikh vector dimensions stay stable
/// even when some letters do not occur.
struct Word {
    std::vector<Letter> letters;
    int sigma = 1;

    Word() = default;
    Word(std::vector<Letter> l, int s) : letters(std::move(l)), sigma(s) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Letter operator[](std::size_t i) const { return letters[i]; } // 0-based
};

/// An occurrence w[start..start+length-1]; positions are 1-based.
struct Fragment {
    std::size_t start = 1;
    std::size_t length = 0;

    bool in_range(const Word& w) const {
        return start >= 1 && start + length - 1 <= w.size() + (length == 0 ? 1 : 0) &&
               (length == 0 || start + length - 1 <= w.size());
    }
};

using ParikhVector = std::vector<std::int64_t>;

/// Row i holds the Parikh vector of the i-th prefix; row 0 is the zero vector.
class PrefixParikhTable {
public:
    explicit PrefixParikhTable(const Word& w);

    int sigma() const { return sigma_; }
    std::size_t word_length() const { return n_; }

    ParikhVector row(std::size_t i) const;

    /// Parikh vector of a fragment, computed as row(end) - row(start-1).
    ParikhVector fragment_parikh(const Fragment& f) const;

    std::int64_t count_at(std::size_t row, Letter c) const {
        return data_[row * sigma_ + c];
    }

private:
    std::size_t n_ = 0;
    int sigma_ = 1;
    std::vector<std::int64_t> data_; // (n+1) x sigma, row-major
};

struct RunLengthEncoding {
    std::vector<std::pair<Letter, std::size_t>> runs;
    std::size_t m() const { return runs.size(); }
};

enum class WordFormat { chars, ints };

/// chars: '0'..'9' map to 0..9, 'a'..'z' to 10..35.
/// ints: whitespace- or comma-separated non-negative integers.
/// sigma == 0 infers the alphabet size as 1 + max letter.
Word parse_word(const std::string& text, WordFormat format, int sigma = 0);
std::string format_word(const Word& w, WordFormat format);

PrefixParikhTable parikh_prefix_table(const Word& w);
ParikhVector fragment_parikh(const PrefixParikhTable& t, const Fragment& f);
RunLengthEncoding blocks(const Word& w);
bool is_uniform(const Word& w, const Fragment& f);

} // namespace squarelab

#endif
