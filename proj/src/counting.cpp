#include "squarelab/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "scan_detail.hpp"
#include "suffix_index.hpp"

namespace squarelab {

namespace {

using detail::SuffixIndex;

Word subword(const Word& w, std::size_t i0, std::size_t len) {
    return Word(std::vector<Letter>(w.letters.begin() + i0, w.letters.begin() + i0 + len),
                w.sigma);
}

std::size_t min_half(std::size_t min_length) {
    return std::max<std::size_t>(1, (min_length + 1) / 2);
}

// Per-shift square starts (0-based) for one half-length k.
class ShiftScanner {
public:
    ShiftScanner(const Word& w, SquareKind kind)
        : w_(w), kind_(kind), n_(w.size()) {
        if (kind == SquareKind::abelian) tab_.emplace(w);
        if (kind == SquareKind::param || kind == SquareKind::op)
            dist_ = detail::prev_distances(w);
        if (kind == SquareKind::op) nxt_ = detail::next_occurrence_table(w);
    }

    // fills starts with all 0-based i such that w[i..i+2k-1] is a kind-square
    void starts_for(std::size_t k, std::vector<std::size_t>& starts) {
        starts.clear();
        if (n_ < 2 * k) return;
        switch (kind_) {
            case SquareKind::ordinary: {
                // match[i] = common prefix length of w[i..] and w[i+k..]
                match_.assign(n_ - k + 1, 0);
                for (std::size_t i = n_ - k; i-- > 0;)
                    match_[i] = w_[i] == w_[i + k] ? match_[i + 1] + 1 : 0;
                for (std::size_t i = 0; i + 2 * k <= n_; ++i)
                    if (match_[i] >= k) starts.push_back(i);
                break;
            }
            case SquareKind::abelian: {
                for (std::size_t i = 0; i + 2 * k <= n_; ++i) {
                    bool eq = true;
                    for (int c = 0; c < w_.sigma && eq; ++c)
                        eq = tab_->count_at(i + k, c) - tab_->count_at(i, c) ==
                             tab_->count_at(i + 2 * k, c) - tab_->count_at(i + k, c);
                    if (eq) starts.push_back(i);
                }
                break;
            }
            case SquareKind::param:
            case SquareKind::op: {
                detail::param_square_flags(dist_, n_, k, flags_);
                for (std::size_t i = 0; i + 2 * k <= n_; ++i) {
                    if (!flags_[i]) continue;
                    if (kind_ == SquareKind::op &&
                        !detail::op_witness_monotone(w_, nxt_, i, k))
                        continue;
                    starts.push_back(i);
                }
                break;
            }
        }
    }

private:
    const Word& w_;
    SquareKind kind_;
    std::size_t n_;
    std::optional<PrefixParikhTable> tab_;
    std::vector<std::int64_t> dist_;
    std::vector<std::int32_t> nxt_;
    std::vector<std::size_t> match_;
    std::vector<char> flags_;
};

// Exact distinct-as-words count among same-length fragments: group the
// starts in suffix-rank order; adjacent fragments are equal iff their
// suffixes share an LCP of at least len.
std::int64_t distinct_among(const SuffixIndex& idx, std::vector<std::size_t>& starts,
                            std::size_t len) {
    if (starts.empty()) return 0;
    std::sort(starts.begin(), starts.end(), [&](std::size_t a, std::size_t b) {
        return idx.rank_of(a) < idx.rank_of(b);
    });
    std::int64_t groups = 1;
    for (std::size_t p = 1; p < starts.size(); ++p)
        if (idx.lcp_between_ranks(idx.rank_of(starts[p - 1]), idx.rank_of(starts[p])) < len)
            ++groups;
    return groups;
}

struct VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct CodeHash {
    std::size_t operator()(const CodeWord& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Canonical-code trie over a word: assigns one node id per distinct
// parameterized-canonical prefix, so whole-fragment class keys are node ids.
class CodeTrie {
public:
    explicit CodeTrie(int sigma) : sigma_(sigma) {}

    std::int32_t child(std::int32_t node, Letter c) {
        std::uint64_t key = static_cast<std::uint64_t>(node) * sigma_ + c;
        auto [it, inserted] = children_.try_emplace(key, next_);
        if (inserted) ++next_;
        return it->second;
    }

private:
    int sigma_;
    std::int32_t next_ = 1; // 0 is the root
    std::unordered_map<std::uint64_t, std::int32_t> children_;
};

// Distinct parameterized classes per half-length, via per-start incremental
// canonical codes walked through a shared trie.
std::map<std::size_t, std::int64_t> param_classes_per_length(
    const Word& w, const std::vector<std::vector<std::int32_t>>& halfks_by_start) {
    CodeTrie trie(std::max(w.sigma, 1));
    std::vector<std::pair<std::int32_t, std::int32_t>> seen; // (k, node)
    std::vector<Letter> rank(w.sigma);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& ks = halfks_by_start[i];
        if (ks.empty()) continue;
        std::fill(rank.begin(), rank.end(), -1);
        Letter next = 0;
        std::int32_t node = 0;
        std::size_t idx = 0;
        std::size_t needed = 2 * static_cast<std::size_t>(ks.back());
        for (std::size_t d = 0; d < needed; ++d) {
            Letter c = w[i + d];
            if (rank[c] == -1) rank[c] = next++;
            node = trie.child(node, rank[c]);
            if ((d + 1) % 2 == 0 && idx < ks.size() &&
                d + 1 == 2 * static_cast<std::size_t>(ks[idx])) {
                seen.emplace_back(ks[idx], node);
                ++idx;
            }
        }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    std::map<std::size_t, std::int64_t> per_length;
    for (auto [k, node] : seen) ++per_length[2 * static_cast<std::size_t>(k)];
    return per_length;
}

double factorial_d(int s) {
    double f = 1.0;
    for (int i = 2; i <= s; ++i) f *= i;
    return f;
}

} // namespace

const char* kind_name(SquareKind kind) {
    switch (kind) {
        case SquareKind::ordinary: return "ordinary";
        case SquareKind::abelian: return "abelian";
        case SquareKind::param: return "param";
        case SquareKind::op: return "op";
    }
    return "?";
}

SquareKind kind_from_name(const std::string& name) {
    if (name == "ordinary") return SquareKind::ordinary;
    if (name == "abelian") return SquareKind::abelian;
    if (name == "param") return SquareKind::param;
    if (name == "op") return SquareKind::op;
    throw std::invalid_argument("unknown square kind '" + name + "'");
}

void scan_squares(const Word& w, SquareKind kind,
                  const std::function<bool(std::size_t, std::size_t)>& cb,
                  std::size_t min_length) {
    ShiftScanner scanner(w, kind);
    std::vector<std::size_t> starts;
    for (std::size_t k = min_half(min_length); 2 * k <= w.size(); ++k) {
        scanner.starts_for(k, starts);
        for (std::size_t i : starts)
            if (!cb(i + 1, 2 * k)) return;
    }
}

std::vector<SquareOccurrence> enumerate_squares(const Word& w, SquareKind kind,
                                                std::size_t min_length) {
    std::vector<SquareOccurrence> out;
    scan_squares(w, kind, [&](std::size_t start, std::size_t len) {
        out.push_back({Fragment{start, len}, kind});
        return true;
    }, min_length);
    return out;
}

CountReport count_report(const Word& w, SquareKind kind, std::size_t min_length,
                         bool use_oracle) {
    auto t0 = std::chrono::steady_clock::now();
    CountReport rep;
    rep.n = w.size();
    rep.sigma = w.sigma;
    rep.kind = kind;
    rep.min_length = min_length;
    rep.blocks_m = blocks(w).m();

    if (use_oracle) {
        rep.distinct_count = oracle_count(w, kind, CountMode::distinct, w.size(), min_length);
        rep.per_length = oracle_per_length_class_counts(w, kind, w.size(), min_length);
        for (auto& [len, cnt] : rep.per_length) rep.class_count += cnt;
    } else {
        ShiftScanner scanner(w, kind);
        SuffixIndex idx(w);
        PrefixParikhTable tab(w);

        std::vector<std::vector<std::int32_t>> halfks_by_start;
        if (kind == SquareKind::param) halfks_by_start.resize(w.size());

        std::vector<std::size_t> starts;
        for (std::size_t k = min_half(min_length); 2 * k <= w.size(); ++k) {
            scanner.starts_for(k, starts);
            if (starts.empty()) continue;
            std::size_t len = 2 * k;

            switch (kind) {
                case SquareKind::abelian: {
                    std::unordered_set<ParikhVector, VecHash> keys;
                    for (std::size_t i : starts)
                        keys.insert(tab.fragment_parikh(Fragment{i + 1, k}));
                    rep.per_length[len] = static_cast<std::int64_t>(keys.size());
                    break;
                }
                case SquareKind::op: {
                    std::unordered_set<CodeWord, CodeHash> keys;
                    for (std::size_t i : starts)
                        keys.insert(op_canonical(subword(w, i, len)));
                    rep.per_length[len] = static_cast<std::int64_t>(keys.size());
                    break;
                }
                case SquareKind::param:
                    for (std::size_t i : starts)
                        halfks_by_start[i].push_back(static_cast<std::int32_t>(k));
                    break;
                case SquareKind::ordinary:
                    break; // classes coincide with distinct words
            }

            std::int64_t d = distinct_among(idx, starts, len);
            rep.distinct_count += d;
            if (kind == SquareKind::ordinary) rep.per_length[len] = d;
        }

        if (kind == SquareKind::param)
            rep.per_length = param_classes_per_length(w, halfks_by_start);
        for (auto& [len, cnt] : rep.per_length) rep.class_count += cnt;
    }

    auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

std::int64_t count_distinct_squares(const Word& w, SquareKind kind, std::size_t min_length) {
    return count_report(w, kind, min_length).distinct_count;
}

std::int64_t count_nonequivalent_squares(const Word& w, SquareKind kind,
                                         std::size_t min_length) {
    return count_report(w, kind, min_length).class_count;
}

std::map<std::size_t, std::int64_t> per_length_class_counts(const Word& w, SquareKind kind,
                                                            std::size_t min_length) {
    return count_report(w, kind, min_length).per_length;
}

std::set<std::pair<std::int64_t, std::int64_t>> square_vectors(const Word& w) {
    for (Letter c : w.letters)
        if (c > 1) throw std::invalid_argument("square_vectors: word is not binary");
    Word b(w.letters, 2);
    PrefixParikhTable tab(b);
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    scan_squares(b, SquareKind::abelian, [&](std::size_t start, std::size_t len) {
        ParikhVector half = tab.fragment_parikh(Fragment{start, len / 2});
        out.emplace(half[0], half[1]);
        return true;
    });
    return out;
}

std::int64_t count_imbalanced_param_fragments(const Word& w) {
    PrefixParikhTable tab(w);
    std::int64_t count = 0;
    scan_squares(w, SquareKind::param, [&](std::size_t start, std::size_t len) {
        std::size_t k = len / 2;
        for (int c = 0; c < w.sigma; ++c) {
            bool in_u = tab.count_at(start - 1 + k, c) - tab.count_at(start - 1, c) > 0;
            bool in_v = tab.count_at(start - 1 + len, c) - tab.count_at(start - 1 + k, c) > 0;
            if (in_u != in_v) {
                ++count;
                break;
            }
        }
        return true;
    });
    return count;
}

std::vector<std::size_t> rightmost_prefix_squares(const Word& w, SquareKind kind,
                                                  std::size_t min_length) {
    auto equiv = [&](const Word& u, const Word& v) {
        switch (kind) {
            case SquareKind::ordinary: return u.letters == v.letters;
            case SquareKind::abelian: return abelian_equiv(u, v);
            case SquareKind::param: return param_equiv(u, v);
            case SquareKind::op: return op_equiv(u, v);
        }
        return false;
    };
    std::vector<std::size_t> out;
    std::size_t first_len = std::max<std::size_t>(2, min_length);
    if (first_len % 2 != 0) ++first_len;
    for (std::size_t len = first_len; len <= w.size(); len += 2) {
        Word u = subword(w, 0, len / 2), v = subword(w, len / 2, len / 2);
        if (!equiv(u, v)) continue;
        Word prefix = subword(w, 0, len);
        bool later = false;
        for (std::size_t i = 1; i + len <= w.size() && !later; ++i)
            later = equiv(prefix, subword(w, i, len));
        if (!later) out.push_back(len);
    }
    return out;
}

BoundsReport verify_paper_bounds(const Word& w) {
    BoundsReport rep;
    std::size_t n = w.size();
    int sigma = w.sigma;
    std::size_t m = blocks(w).m();

    CountReport abel = count_report(w, SquareKind::abelian);
    CountReport param = count_report(w, SquareKind::param);
    CountReport op = count_report(w, SquareKind::op);
    CountReport ord = count_report(w, SquareKind::ordinary);

    auto add = [&](const std::string& name, double lhs, double rhs) {
        bool ok = lhs <= rhs;
        rep.checks.push_back({name, lhs, rhs, ok});
        rep.all_ok = rep.all_ok && ok;
    };

    double nd = static_cast<double>(n);
    double choose2 = sigma >= 2 ? sigma * (sigma - 1) / 2.0 : 0.0;
    double sfact = factorial_d(sigma);

    if (n >= 1)
        add("abelian_classes_le_(n-1)^(11/6)",
            static_cast<double>(abel.class_count), std::pow(nd - 1.0, 11.0 / 6.0));
    add("abelian_classes_le_nm/2", static_cast<double>(abel.class_count), nd * m / 2.0);
    std::int64_t max_per_len = 0;
    for (auto& [len, cnt] : abel.per_length) max_per_len = std::max(max_per_len, cnt);
    add("abelian_per_length_le_m", static_cast<double>(max_per_len), static_cast<double>(m));
    add("op_distinct_le_(C(s,2)+11/6)n",
        static_cast<double>(op.distinct_count), (choose2 + 11.0 / 6.0) * nd);
    add("param_classes_le_2*s!*n",
        static_cast<double>(param.class_count), 2.0 * sfact * nd);
    add("param_distinct_le_2*(s!)^2*n",
        static_cast<double>(param.distinct_count), 2.0 * sfact * sfact * nd);
    add("ordinary_distinct_le_11n/6",
        static_cast<double>(ord.distinct_count), 11.0 * nd / 6.0);
    add("imbalanced_param_fragments_le_C(s,2)n",
        static_cast<double>(count_imbalanced_param_fragments(w)), choose2 * nd);
    return rep;
}

UniformGapReport check_uniform_gap_lemma(const Word& w) {
    UniformGapReport rep;
    std::size_t n = w.size();
    if (n < 2) return rep;

    // run_end[t] = last 0-based index of the maximal uniform run containing t
    std::vector<std::size_t> run_end(n);
    for (std::size_t i = n; i-- > 0;)
        run_end[i] = (i + 1 < n && w[i + 1] == w[i]) ? run_end[i + 1] : i;

    PrefixParikhTable tab(w);
    ShiftScanner scanner(w, SquareKind::abelian);
    std::vector<std::size_t> starts;
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        scanner.starts_for(k, starts);
        for (std::size_t p = 0; p < starts.size(); ++p) {
            std::size_t i = starts[p];
            // j with uniform gap w[i+k..j+k-1] satisfy j+k-1 <= run_end[i+k]
            std::size_t jmax = run_end[i + k] + 1 >= k ? run_end[i + k] + 1 - k : 0;
            ParikhVector pi = tab.fragment_parikh(Fragment{i + 1, 2 * k});
            for (std::size_t q = p + 1; q < starts.size() && starts[q] <= jmax; ++q) {
                ParikhVector pj = tab.fragment_parikh(Fragment{starts[q] + 1, 2 * k});
                if (pi != pj) {
                    rep.ok = false;
                    rep.i = i + 1;
                    rep.j = starts[q] + 1;
                    rep.length = 2 * k;
                    return rep;
                }
            }
        }
    }
    return rep;
}

std::string CountReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["sigma"] = sigma;
    j["kind"] = kind_name(kind);
    j["distinct"] = distinct_count;
    j["classes"] = class_count;
    nlohmann::json pl = nlohmann::json::object();
    for (auto& [len, cnt] : per_length) pl[std::to_string(len)] = cnt;
    j["per_length"] = pl;
    j["blocks"] = blocks_m;
    j["min_length"] = min_length;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

std::string CountReport::to_csv() const {
    std::ostringstream out;
    out << "kind,n,sigma,length,classes\n";
    for (auto& [len, cnt] : per_length)
        out << kind_name(kind) << ',' << n << ',' << sigma << ',' << len << ',' << cnt << '\n';
    return out.str();
}

std::string CountReport::to_text() const {
    std::ostringstream out;
    out << kind_name(kind) << " squares in word of length " << n << " (sigma=" << sigma
        << ", blocks=" << blocks_m << ")\n"
        << "  distinct (SQ):  " << distinct_count << "\n"
        << "  classes (SQ'):  " << class_count << "\n"
        << "  elapsed: " << elapsed_ms << " ms\n";
    return out.str();
}

std::string BoundsReport::to_text() const {
    std::ostringstream out;
    for (const auto& c : checks)
        out << (c.ok ? "  ok   " : "  FAIL ") << c.name << ": " << c.lhs << " <= " << c.rhs
            << "\n";
    out << (all_ok ? "all bounds hold\n" : "BOUND VIOLATION\n");
    return out.str();
}

std::string UniformGapReport::to_text() const {
    if (ok) return "uniform-gap property holds\n";
    std::ostringstream out;
    out << "violation: squares of length " << length << " at " << i << " and " << j
        << " with uniform gap but unequal Parikh vectors\n";
    return out.str();
}

} // namespace squarelab
