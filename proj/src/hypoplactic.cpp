#include "plm/hypoplactic.hpp"

#include <algorithm>
#include <sstream>

namespace plm {

bool QuasiRibbonTableau::valid(std::vector<Row> const& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty() || !std::is_sorted(rows[r].begin(), rows[r].end())) return false;
        if (r > 0 && rows[r - 1].back() >= rows[r].front()) return false;
    }
    return true;
}

QuasiRibbonTableau::QuasiRibbonTableau(std::vector<Row> rows) : rows_(std::move(rows)) {
    if (!valid(rows_)) throw std::invalid_argument("not a quasi-ribbon tableau");
}

std::size_t QuasiRibbonTableau::size() const noexcept {
    std::size_t n = 0;
    for (auto const& r : rows_) n += r.size();
    return n;
}

std::vector<std::size_t> QuasiRibbonTableau::offsets() const {
    std::vector<std::size_t> off(rows_.size(), 0);
    for (std::size_t r = 1; r < rows_.size(); ++r) off[r] = off[r - 1] + rows_[r - 1].size() - 1;
    return off;
}

std::vector<std::vector<Letter>> QuasiRibbonTableau::columns() const {
    std::vector<std::vector<Letter>> cols;
    auto off = offsets();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            std::size_t col = off[r] + c;
            if (col >= cols.size()) cols.resize(col + 1);
            cols[col].push_back(rows_[r][c]);
        }
    }
    return cols;
}

bool QuasiRibbonTableau::contains(Letter a) const {
    return std::any_of(rows_.begin(), rows_.end(),
                       [a](Row const& r) { return std::binary_search(r.begin(), r.end(), a); });
}

std::size_t QuasiRibbonTableau::row_of(Letter a) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (std::binary_search(rows_[r].begin(), rows_[r].end(), a)) return r;
    }
    throw std::invalid_argument("symbol " + std::to_string(a) + " not in tableau");
}

Word QuasiRibbonTableau::col_reading() const {
    Word w;
    for (auto const& col : columns()) w.insert(w.end(), col.rbegin(), col.rend());
    return w;
}

Word QuasiRibbonTableau::row_reading() const {
    Word w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

std::string QuasiRibbonTableau::key() const {
    std::string s;
    auto off = offsets();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r > 0) s += '/';
        s += std::to_string(off[r]) + ":" + to_string(rows_[r]);
    }
    return s;
}

std::string QuasiRibbonTableau::draw() const {
    std::size_t width = 1;
    for (auto const& r : rows_)
        for (Letter a : r) width = std::max(width, std::to_string(a).size());
    std::ostringstream os;
    auto off = offsets();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        os << std::string(off[r] * (width + 1), ' ');
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            auto cell = std::to_string(rows_[r][c]);
            if (c > 0) os << ' ';
            os << std::string(width - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

QuasiRibbonTableau hypo_insert(QuasiRibbonTableau t, Letter a) {
    auto& rows = t.rows_;
    if (rows.empty() || a < rows.front().front()) {
        rows.insert(rows.begin(), QuasiRibbonTableau::Row{a});
        return t;
    }
    if (a >= rows.back().back()) {
        rows.back().push_back(a);
        return t;
    }
    // x is the last entry <= a; a goes right after it and whatever followed x drops to a new row below a.
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), a);
        if (it == row.begin()) continue;  // cannot happen after the first row: handled above
        if (it == row.end()) {
            if (a < rows[r + 1].front()) {
                row.push_back(a);
                return t;
            }
            continue;
        }
        QuasiRibbonTableau::Row tail(it, row.end());
        row.erase(it, row.end());
        row.push_back(a);
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(r) + 1, std::move(tail));
        return t;
    }
    throw std::logic_error("hypo_insert: no split position");
}

QuasiRibbonTableau p_hypo(Word const& w) {
    QuasiRibbonTableau t;
    for (Letter a : w) t = hypo_insert(std::move(t), a);
    return t;
}

bool has_inversion(Word const& w, std::size_t i) {
    auto [rel, symbols] = compress_alphabet(w);
    if (i == 0 || i + 1 > symbols.size()) throw std::invalid_argument("not enough distinct symbols");
    auto lo = static_cast<Letter>(i), hi = static_cast<Letter>(i + 1);
    auto first_hi = std::find(rel.begin(), rel.end(), hi);
    auto last_lo = std::find(rel.rbegin(), rel.rend(), lo).base() - 1;
    return first_hi < last_lo;
}

char const* to_string(HypoStep::Kind k) {
    switch (k) {
        case HypoStep::Kind::same_same: return "same/same";
        case HypoStep::Kind::split_split: return "split/split";
        case HypoStep::Kind::same_split: return "same/split";
        case HypoStep::Kind::split_same: return "split/same";
    }
    return "?";
}

namespace {

QuasiRibbonTableau relabel(QuasiRibbonTableau const& t, std::vector<Letter> const& symbols) {
    auto rows = t.rows();
    for (auto& r : rows)
        for (auto& a : r) a = symbols.at(a - 1);
    return QuasiRibbonTableau(std::move(rows));
}

}  // namespace

HypoPath hypo_path(QuasiRibbonTableau const& t, QuasiRibbonTableau const& u) {
    auto tw = t.row_reading(), uw = u.row_reading();
    {
        auto a = tw, b = uw;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw std::invalid_argument("hypo_path: evaluations differ");
    }
    auto [trel, symbols] = compress_alphabet(tw);
    auto urel = compress_alphabet(uw).first;
    auto const target = p_hypo(urel);
    auto cur = p_hypo(trel);
    auto const k = static_cast<Letter>(symbols.size());

    HypoPath path;
    path.tableaux.push_back(t);
    for (Letter i = 1; i < k; ++i) {
        bool cur_same = cur.row_of(i) == cur.row_of(i + 1);
        bool target_same = target.row_of(i) == target.row_of(i + 1);
        HypoStep step{};
        step.symbol = symbols[i - 1];
        if (cur_same == target_same) {
            step.kind = cur_same ? HypoStep::Kind::same_same : HypoStep::Kind::split_split;
            path.steps.push_back(std::move(step));
            continue;
        }
        Word s, rest;
        if (cur_same) {
            // Cut the column reading after the column holding the rightmost i.
            step.kind = HypoStep::Kind::same_split;
            auto cols = cur.columns();
            std::size_t cut = 0;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (std::find(cols[c].begin(), cols[c].end(), i) != cols[c].end()) cut = c + 1;
            }
            for (std::size_t c = 0; c < cols.size(); ++c) {
                auto& dst = c < cut ? s : rest;
                dst.insert(dst.end(), cols[c].rbegin(), cols[c].rend());
            }
        } else {
            // Cut the row reading (bottom row first) after the row holding the symbols i+1.
            step.kind = HypoStep::Kind::split_same;
            auto const& rows = cur.rows();
            std::size_t r_hi = cur.row_of(i + 1);
            for (std::size_t r = rows.size(); r-- > 0;) {
                auto& dst = r >= r_hi ? s : rest;
                dst.insert(dst.end(), rows[r].begin(), rows[r].end());
            }
        }
        auto next = p_hypo(concat(rest, s));
        if (p_hypo(concat(s, rest)) != cur) throw std::logic_error("hypo_path: factorisation does not represent T");
        if ((next.row_of(i) == next.row_of(i + 1)) != target_same) {
            throw std::logic_error("hypo_path: step did not fix symbols " + std::to_string(i));
        }
        cur = next;
        for (auto& a : s) a = symbols[a - 1];
        for (auto& a : rest) a = symbols[a - 1];
        step.left = std::move(s);
        step.right = std::move(rest);
        path.steps.push_back(std::move(step));
        path.tableaux.push_back(relabel(cur, symbols));
    }
    if (cur != target) throw std::logic_error("hypo_path: did not reach the target");
    return path;
}

}  // namespace plm
