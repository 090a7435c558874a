#include "plm/stalactic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace plm {

StalacticTableau::StalacticTableau(std::vector<Column> columns) : columns_(std::move(columns)) {
    std::set<Letter> seen;
    for (auto const& c : columns_) {
        if (c.height == 0 || c.symbol == 0 || !seen.insert(c.symbol).second)
            throw std::invalid_argument("not a stalactic tableau");
    }
}

std::size_t StalacticTableau::size() const noexcept {
    std::size_t n = 0;
    for (auto const& c : columns_) n += c.height;
    return n;
}

Word StalacticTableau::top_row() const {
    Word w;
    for (auto const& c : columns_) w.push_back(c.symbol);
    return w;
}

Word StalacticTableau::reading() const {
    Word w;
    for (auto const& c : columns_) w.insert(w.end(), c.height - 1, c.symbol);
    auto top = top_row();
    w.insert(w.end(), top.begin(), top.end());
    return w;
}

std::string StalacticTableau::key() const {
    std::string s;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i > 0) s += '|';
        s += std::to_string(columns_[i].symbol) + "^" + std::to_string(columns_[i].height);
    }
    return s;
}

std::string StalacticTableau::draw() const {
    std::size_t rows = 0, width = 1;
    for (auto const& c : columns_) {
        rows = std::max(rows, c.height);
        width = std::max(width, std::to_string(c.symbol).size());
    }
    std::ostringstream os;
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line;
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            auto cell = r < columns_[i].height ? std::to_string(columns_[i].symbol) : std::string();
            if (i > 0) line += ' ';
            line += std::string(width - cell.size(), ' ') + cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

StalacticTableau stal_insert(StalacticTableau t, Letter a) {
    auto it = std::find_if(t.columns_.begin(), t.columns_.end(), [a](auto const& c) { return c.symbol == a; });
    if (it == t.columns_.end()) t.columns_.insert(t.columns_.begin(), {a, 1});
    else ++it->height;
    return t;
}

StalacticTableau p_stal(Word const& w) {
    StalacticTableau t;
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = stal_insert(std::move(t), *it);
    return t;
}

Word iota(StalacticTableau const& t) {
    Word w;
    for (auto const& c : t.columns())
        if (c.height == 1) w.push_back(c.symbol);
    return w;
}

Word least_rotation(Word const& w) {
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k) best = std::min(best, rotate(w, k));
    return best;
}

Kappa kappa(StalacticTableau const& t, std::size_t rank) {
    return Kappa{least_rotation(iota(t)), evaluation(t.reading(), rank)};
}

namespace {

Word drop_leftmost(Word w, Word const& symbols) {
    for (Letter b : symbols) w.erase(std::find(w.begin(), w.end(), b));
    return w;
}

}  // namespace

StalPath stal_path(StalacticTableau const& t, StalacticTableau const& u) {
    std::size_t rank = std::max(max_letter(t.reading()), max_letter(u.reading()));
    if (kappa(t, rank) != kappa(u, rank)) throw std::invalid_argument("stal_path: kappa values differ");

    Word bs;
    Word lower;
    for (auto const& c : t.columns()) {
        if (c.height > 1) bs.push_back(c.symbol);
    }
    std::sort(bs.begin(), bs.end());
    for (Letter b : bs) {
        auto it = std::find_if(t.columns().begin(), t.columns().end(), [b](auto const& c) { return c.symbol == b; });
        lower.insert(lower.end(), it->height - 1, b);
    }
    Word t1 = drop_leftmost(t.reading(), bs);
    Word u1 = drop_leftmost(u.reading(), bs);
    Word it = iota(t), iu = iota(u);
    std::size_t h = 0;
    while (h < it.size() && rotate(it, h) != iu) ++h;
    if (h == it.size() && !it.empty()) throw std::logic_error("stal_path: iota words are not rotations");

    Word mid_left(it.begin(), it.begin() + static_cast<std::ptrdiff_t>(h));
    mid_left.insert(mid_left.end(), bs.begin(), bs.end());
    Word mid_right(it.begin() + static_cast<std::ptrdiff_t>(h), it.end());
    mid_right.insert(mid_right.end(), lower.begin(), lower.end());

    std::vector<StalStep> candidates{{bs, t1}, {mid_left, mid_right}, {u1, bs}};
    StalPath path;
    path.tableaux.push_back(t);
    for (auto& st : candidates) {
        auto const& cur = path.tableaux.back();
        if (p_stal(concat(st.left, st.right)) != cur)
            throw std::logic_error("stal_path: factorisation does not represent " + cur.key());
        auto next = p_stal(concat(st.right, st.left));
        if (next == cur) continue;
        path.tableaux.push_back(next);
        path.steps.push_back(std::move(st));
    }
    if (path.tableaux.back() != u) throw std::logic_error("stal_path: did not reach the target");
    // The three fixed steps can revisit a tableau (t == u, for one); cut the loop out.
    for (std::size_t i = 0; i < path.tableaux.size(); ++i) {
        for (std::size_t j = path.tableaux.size() - 1; j > i; --j) {
            if (path.tableaux[j] != path.tableaux[i]) continue;
            path.tableaux.erase(path.tableaux.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                path.tableaux.begin() + static_cast<std::ptrdiff_t>(j + 1));
            path.steps.erase(path.steps.begin() + static_cast<std::ptrdiff_t>(i),
                             path.steps.begin() + static_cast<std::ptrdiff_t>(j));
            break;
        }
    }
    return path;
}

std::pair<Word, Word> stal_oconj_witness(Word const& u, Word const& v) {
    auto rank = std::max(max_letter(u), max_letter(v));
    if (evaluation(u, rank) != evaluation(v, rank)) throw std::invalid_argument("stal_oconj_witness: evaluations differ");
    Word g = p_stal(u).top_row();
    Word h = p_stal(v).top_row();
    if (p_stal(concat(g, u)) != p_stal(concat(v, g)) || p_stal(concat(u, h)) != p_stal(concat(h, v)))
        throw std::logic_error("stal_oconj_witness: witness fails for " + to_string(u) + ", " + to_string(v));
    return {g, h};
}

}  // namespace plm
