#include "plm/words.hpp"

#include "plm/limits.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace plm {

std::size_t Evaluation::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::size_t Evaluation::support() const noexcept {
    return static_cast<std::size_t>(std::count_if(counts_.begin(), counts_.end(), [](auto c) { return c > 0; }));
}

std::size_t max_letter(Word const& w) noexcept {
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

Evaluation evaluation(Word const& w, std::size_t rank) {
    Evaluation e = Evaluation::zero(rank);
    for (Letter a : w) {
        if (a == 0 || a > rank) {
            throw std::invalid_argument("symbol " + std::to_string(a) + " outside 1.." + std::to_string(rank));
        }
        ++e[a];
    }
    return e;
}

bool is_standard(Word const& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (Letter a : w) {
        if (a == 0 || a > w.size() || seen[a]) return false;
        seen[a] = true;
    }
    return true;
}

Word rotate(Word const& w, std::size_t k) {
    if (k > w.size()) throw std::out_of_range("rotation index out of range");
    Word r;
    r.reserve(w.size());
    r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

Word concat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::size_t multinomial(Evaluation const& e) {
    std::size_t result = 1;
    std::size_t n = 0;
    for (auto c : e.counts()) {
        for (std::size_t i = 1; i <= c; ++i) {
            ++n;
            result = result * n / i;
        }
    }
    return result;
}

std::pair<Word, std::vector<Letter>> compress_alphabet(Word const& w) {
    std::vector<Letter> symbols(w.begin(), w.end());
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    Word out;
    out.reserve(w.size());
    for (Letter a : w) {
        auto it = std::lower_bound(symbols.begin(), symbols.end(), a);
        out.push_back(static_cast<Letter>(it - symbols.begin()) + 1);
    }
    return {std::move(out), std::move(symbols)};
}

EvaluationWords::EvaluationWords(Evaluation const& e) : EvaluationWords(e, limits().max_total) {}

EvaluationWords::EvaluationWords(Evaluation const& e, std::size_t limit) {
    if (e.total() > limit) {
        throw LimitExceeded("evaluation total " + std::to_string(e.total()) + " exceeds limit " +
                            std::to_string(limit));
    }
    for (Letter a = 1; a <= e.rank(); ++a) first_.insert(first_.end(), e[a], a);
}

EvaluationWords::iterator& EvaluationWords::iterator::operator++() {
    if (!std::next_permutation(current_.begin(), current_.end())) done_ = true;
    return *this;
}

std::vector<Word> words_with_evaluation(Evaluation const& e) {
    EvaluationWords ws(e);
    return std::vector<Word>(ws.begin(), ws.end());
}

namespace {

void fill_evaluations(std::vector<std::size_t>& counts, std::size_t i, std::size_t remaining,
                      std::vector<Evaluation>& out) {
    if (i + 1 == counts.size()) {
        counts[i] = remaining;
        out.emplace_back(counts);
        return;
    }
    for (std::size_t c = remaining + 1; c-- > 0;) {
        counts[i] = c;
        fill_evaluations(counts, i + 1, remaining - c, out);
    }
}

}  // namespace

std::vector<Evaluation> evaluations_with_total(std::size_t rank, std::size_t total) {
    std::vector<Evaluation> out;
    if (rank == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<std::size_t> counts(rank, 0);
    fill_evaluations(counts, 0, total, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Evaluation> evaluations_up_to(std::size_t rank, std::size_t max_total) {
    std::vector<Evaluation> out;
    for (std::size_t t = 0; t <= max_total; ++t) {
        auto part = evaluations_with_total(rank, t);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

CochargeSeq cochseq(Word const& w) {
    if (!is_standard(w)) throw std::invalid_argument("cochseq needs a standard word");
    std::size_t n = w.size();
    std::vector<std::size_t> pos(n + 1);
    for (std::size_t i = 0; i < n; ++i) pos[w[i]] = i;
    CochargeSeq c;
    c.labels.resize(n);
    // Going around the circle from i to i+1 passes the marker exactly when i+1 sits to the right of i.
    for (std::size_t i = 1; i < n; ++i) {
        c.labels[i] = c.labels[i - 1] + (pos[i + 1] < pos[i] ? 1 : 0);
    }
    return c;
}

std::string to_string(Word const& w) {
    bool digits = std::all_of(w.begin(), w.end(), [](Letter a) { return a <= 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!digits && i > 0) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

std::string to_string(Evaluation const& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.rank(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(e.counts()[i]);
    }
    return s + ")";
}

std::string to_string(CochargeSeq const& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.labels.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(c.labels[i]);
    }
    return s + ")";
}

namespace {

std::size_t parse_number(std::string_view tok) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
        throw std::invalid_argument("not a number: '" + std::string(tok) + "'");
    }
    return v;
}

std::vector<std::size_t> parse_list(std::string_view s) {
    std::vector<std::size_t> out;
    while (!s.empty()) {
        auto comma = s.find(',');
        auto tok = s.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        out.push_back(parse_number(tok));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

Word parse_word(std::string_view s) {
    Word w;
    if (s.find(',') != std::string_view::npos) {
        for (auto v : parse_list(s)) w.push_back(static_cast<Letter>(v));
    } else {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("bad symbol '" + std::string(1, ch) + "'");
            w.push_back(static_cast<Letter>(ch - '0'));
        }
    }
    for (Letter a : w) {
        if (a == 0) throw std::invalid_argument("symbols start at 1");
    }
    return w;
}

Evaluation parse_evaluation(std::string_view s) {
    return Evaluation(parse_list(s));
}

std::ostream& operator<<(std::ostream& os, Word const& w) { return os << to_string(w); }
std::ostream& operator<<(std::ostream& os, Evaluation const& e) { return os << to_string(e); }

}  // namespace plm
