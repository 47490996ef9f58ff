#include "squarelab/avoidance.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "scan_detail.hpp"
#include "squarelab/counting.hpp"
#include "squarelab/equivalence.hpp"

namespace squarelab {

namespace {

AvoidanceReport scan_report(const Word& w, SquareKind kind, std::size_t min_length,
                            const char* violation_kind) {
    AvoidanceReport rep;
    rep.checked_length = w.size();
    scan_squares(w, kind, [&](std::size_t start, std::size_t len) {
        rep.pass = false;
        rep.violation = Fragment{start, len};
        rep.violation_kind = violation_kind;
        return false;
    }, min_length);
    return rep;
}

// DFS over extensions; checks only fragments ending at the newest position.
class AvoidanceSearch {
public:
    AvoidanceSearch(int sigma, AvoidKind kind, std::int64_t budget)
        : sigma_(sigma), kind_(kind), budget_(budget) {}

    SearchResult run() {
        best_word_.clear();
        recurse(-1);
        SearchResult res;
        res.sigma = sigma_;
        res.kind = kind_;
        res.max_length = best_word_.size();
        res.witness = Word(best_word_, sigma_);
        res.exhausted = !aborted_;
        res.nodes_visited = nodes_;
        return res;
    }

private:
    bool param_halves(std::size_t i, std::size_t k) const {
        thread_local std::vector<Letter> f, g;
        f.assign(sigma_, -1);
        g.assign(sigma_, -1);
        for (std::size_t d = 0; d < k; ++d) {
            Letter a = cur_[i + d], b = cur_[i + k + d];
            if (f[a] == -1 && g[b] == -1) {
                f[a] = b;
                g[b] = a;
            } else if (f[a] != b || g[b] != a) {
                return false;
            }
        }
        return true;
    }

    bool op_halves(std::size_t i, std::size_t k) const {
        if (!param_halves(i, k)) return false;
        thread_local std::vector<Letter> f;
        f.assign(sigma_, -1);
        for (std::size_t d = 0; d < k; ++d) f[cur_[i + d]] = cur_[i + k + d];
        Letter prev = -1;
        for (Letter a = 0; a < sigma_; ++a) {
            if (f[a] == -1) continue;
            if (f[a] <= prev) return false;
            prev = f[a];
        }
        return true;
    }

    // the word stayed kind-free after appending the last letter?
    bool last_position_ok() const {
        std::size_t n = cur_.size();
        switch (kind_) {
            case AvoidKind::ordinary_square:
                for (std::size_t k = 1; 2 * k <= n; ++k) {
                    std::size_t i = n - 2 * k;
                    if (std::equal(cur_.begin() + i, cur_.begin() + i + k,
                                   cur_.begin() + i + k))
                        return false;
                }
                return true;
            case AvoidKind::param_square:
                for (std::size_t k = kNontrivialSquareLength / 2; 2 * k <= n; ++k)
                    if (param_halves(n - 2 * k, k)) return false;
                return true;
            case AvoidKind::op_square:
                for (std::size_t k = kNontrivialSquareLength / 2; 2 * k <= n; ++k)
                    if (op_halves(n - 2 * k, k)) return false;
                return true;
            case AvoidKind::param_cube:
                for (std::size_t t = kNontrivialCubeLength / 3; 3 * t <= n; ++t) {
                    std::size_t i = n - 3 * t;
                    if (param_halves(i, t) && param_halves(i + t, t)) return false;
                }
                return true;
        }
        return true;
    }

    void recurse(int max_used) {
        ++nodes_;
        if (cur_.size() > best_word_.size()) best_word_ = cur_;
        if (nodes_ >= budget_) {
            aborted_ = true;
            return;
        }
        // Letter bijections preserve param squares/cubes and ordinary squares,
        // so first-occurrence canonical form prunes the sigma! symmetry there.
        // Op equivalence only survives increasing bijections; that search
        // branches over the whole alphabet.
        Letter hi = kind_ == AvoidKind::op_square
                        ? sigma_ - 1
                        : std::min(max_used + 1, sigma_ - 1);
        for (Letter c = 0; c <= hi; ++c) {
            cur_.push_back(c);
            if (last_position_ok()) {
                recurse(std::max(max_used, static_cast<int>(c)));
                if (aborted_) {
                    cur_.pop_back();
                    return;
                }
            }
            cur_.pop_back();
        }
    }

    int sigma_;
    AvoidKind kind_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<Letter> cur_;
    std::vector<Letter> best_word_;
};

} // namespace

const char* avoid_kind_name(AvoidKind kind) {
    switch (kind) {
        case AvoidKind::ordinary_square: return "square";
        case AvoidKind::param_square: return "param-square";
        case AvoidKind::param_cube: return "param-cube";
        case AvoidKind::op_square: return "op-square";
    }
    return "?";
}

AvoidKind avoid_kind_from_name(const std::string& name) {
    if (name == "square") return AvoidKind::ordinary_square;
    if (name == "param-square") return AvoidKind::param_square;
    if (name == "param-cube") return AvoidKind::param_cube;
    if (name == "op-square") return AvoidKind::op_square;
    throw std::invalid_argument("unknown avoidance kind '" + name + "'");
}

AvoidanceReport is_square_free(const Word& w) {
    return scan_report(w, SquareKind::ordinary, 2, "square");
}

AvoidanceReport is_op_square_free(const Word& w) {
    return scan_report(w, SquareKind::op, kNontrivialSquareLength, "op-square");
}

AvoidanceReport is_param_square_free(const Word& w) {
    return scan_report(w, SquareKind::param, kNontrivialSquareLength, "param-square");
}

AvoidanceReport is_param_cube_free(const Word& w) {
    AvoidanceReport rep;
    std::size_t n = w.size();
    rep.checked_length = n;
    auto dist = detail::prev_distances(w);
    std::vector<char> flags;
    for (std::size_t t = kNontrivialCubeLength / 3; 3 * t <= n; ++t) {
        detail::param_square_flags(dist, n, t, flags);
        for (std::size_t i = 0; i + 3 * t <= n; ++i) {
            if (flags[i] && flags[i + t]) {
                rep.pass = false;
                rep.violation = Fragment{i + 1, 3 * t};
                rep.violation_kind = "param-cube";
                return rep;
            }
        }
    }
    return rep;
}

SearchResult longest_avoiding_word(int sigma, AvoidKind kind, std::int64_t node_budget) {
    if (sigma < 1) throw std::invalid_argument("longest_avoiding_word: sigma must be >= 1");
    return AvoidanceSearch(sigma, kind, node_budget).run();
}

bool psi_observation_check(Letter a, Letter b, Letter c) {
    auto word = [](std::initializer_list<Letter> l) { return Word(std::vector<Letter>(l), 3); };
    bool first = op_equiv(word({1, a}), word({1, b})) == (a == b);
    bool second = !op_equiv(word({a, 1, b}), word({1, c, 1})) || a == b;
    return first && second;
}

bool antisquare_dichotomy_check(const Word& w) {
    if (w.size() % 2 != 0)
        throw std::invalid_argument("antisquare_dichotomy_check: odd length");
    for (Letter c : w.letters)
        if (c < 0 || c > 1)
            throw std::invalid_argument("antisquare_dichotomy_check: word is not binary");
    std::size_t k = w.size() / 2;
    Word u(std::vector<Letter>(w.letters.begin(), w.letters.begin() + k), 2);
    Word v(std::vector<Letter>(w.letters.begin() + k, w.letters.end()), 2);
    bool lhs = param_equiv(u, v);
    bool rhs = u.letters == v.letters || is_antisquare(w);
    return lhs == rhs;
}

std::string AvoidanceReport::to_json() const {
    nlohmann::json j;
    j["checked_length"] = checked_length;
    j["verdict"] = pass ? "pass" : "fail";
    if (violation) {
        j["violation"] = {{"start", violation->start},
                          {"length", violation->length},
                          {"kind", violation_kind}};
    } else {
        j["violation"] = nullptr;
    }
    return j.dump(2);
}

std::string SearchResult::to_json() const {
    nlohmann::json j;
    j["sigma"] = sigma;
    j["kind"] = avoid_kind_name(kind);
    j["max_length"] = max_length;
    j["witness"] = format_word(witness, WordFormat::chars);
    j["exhausted"] = exhausted;
    j["nodes_visited"] = nodes_visited;
    return j.dump(2);
}

} // namespace squarelab
