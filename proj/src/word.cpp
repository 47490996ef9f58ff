#include "squarelab/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace squarelab {

namespace {

int infer_sigma(const std::vector<Letter>& letters) {
    Letter mx = -1;
    for (Letter c : letters) mx = std::max(mx, c);
    return mx + 1 >= 1 ? mx + 1 : 1;
}

void check_fragment(const Word& w, const Fragment& f, const char* what) {
    if (f.start < 1 || (f.length > 0 && f.start + f.length - 1 > w.size()))
        throw std::out_of_range(std::string(what) + ": fragment (" +
                                std::to_string(f.start) + "," + std::to_string(f.length) +
                                ") out of range for word of length " + std::to_string(w.size()));
}

} // namespace

Word parse_word(const std::string& text, WordFormat format, int sigma) {
    std::vector<Letter> letters;
    if (format == WordFormat::chars) {
        for (char ch : text) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            Letter c;
            if (ch >= '0' && ch <= '9') c = ch - '0';
            else if (ch >= 'a' && ch <= 'z') c = 10 + (ch - 'a');
            else throw std::invalid_argument(std::string("parse_word: bad character '") + ch + "'");
            letters.push_back(c);
        }
    } else {
        std::string norm = text;
        std::replace(norm.begin(), norm.end(), ',', ' ');
        std::istringstream in(norm);
        std::string tok;
        while (in >> tok) {
            try {
                std::size_t pos = 0;
                long v = std::stol(tok, &pos);
                if (pos != tok.size() || v < 0) throw std::invalid_argument("");
                letters.push_back(static_cast<Letter>(v));
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_word: bad token '" + tok + "'");
            }
        }
    }
    int s = sigma > 0 ? sigma : infer_sigma(letters);
    for (Letter c : letters)
        if (c >= s)
            throw std::invalid_argument("parse_word: letter " + std::to_string(c) +
                                        " >= sigma " + std::to_string(s));
    return Word(std::move(letters), s);
}

std::string format_word(const Word& w, WordFormat format) {
    std::string out;
    if (format == WordFormat::chars) {
        for (Letter c : w.letters) {
            if (c < 10) out.push_back(static_cast<char>('0' + c));
            else if (c < 36) out.push_back(static_cast<char>('a' + (c - 10)));
            else throw std::invalid_argument("format_word: letter too large for chars format");
        }
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(w[i]);
        }
    }
    return out;
}

PrefixParikhTable::PrefixParikhTable(const Word& w)
    : n_(w.size()), sigma_(w.sigma), data_((w.size() + 1) * w.sigma, 0) {
    for (std::size_t i = 1; i <= n_; ++i) {
        for (int c = 0; c < sigma_; ++c) data_[i * sigma_ + c] = data_[(i - 1) * sigma_ + c];
        ++data_[i * sigma_ + w[i - 1]];
    }
}

ParikhVector PrefixParikhTable::row(std::size_t i) const {
    ParikhVector v(sigma_);
    for (int c = 0; c < sigma_; ++c) v[c] = data_[i * sigma_ + c];
    return v;
}

ParikhVector PrefixParikhTable::fragment_parikh(const Fragment& f) const {
    if (f.start < 1 || (f.length > 0 && f.start + f.length - 1 > n_))
        throw std::out_of_range("fragment_parikh: fragment out of range");
    ParikhVector v(sigma_);
    std::size_t lo = f.start - 1, hi = f.start + f.length - 1;
    for (int c = 0; c < sigma_; ++c)
        v[c] = data_[hi * sigma_ + c] - data_[lo * sigma_ + c];
    return v;
}

PrefixParikhTable parikh_prefix_table(const Word& w) { return PrefixParikhTable(w); }

ParikhVector fragment_parikh(const PrefixParikhTable& t, const Fragment& f) {
    return t.fragment_parikh(f);
}

RunLengthEncoding blocks(const Word& w) {
    RunLengthEncoding rle;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        rle.runs.emplace_back(w[i], j - i);
        i = j;
    }
    return rle;
}

bool is_uniform(const Word& w, const Fragment& f) {
    check_fragment(w, f, "is_uniform");
    for (std::size_t i = 1; i < f.length; ++i)
        if (w[f.start - 1 + i] != w[f.start - 1]) return false;
    return true;
}

} // namespace squarelab
