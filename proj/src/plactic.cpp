#include "plm/plactic.hpp"

#include <algorithm>

namespace plm {

bool YoungTableau::valid(std::vector<Row> const& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto const& row = rows[r];
        if (row.empty() || !std::is_sorted(row.begin(), row.end())) return false;
        if (r == 0) continue;
        auto const& above = rows[r - 1];
        if (row.size() > above.size()) return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (above[c] >= row[c]) return false;
        }
    }
    return true;
}

YoungTableau::YoungTableau(std::vector<Row> rows) : rows_(std::move(rows)) {
    if (!valid(rows_)) throw std::invalid_argument("not a Young tableau");
}

std::size_t YoungTableau::size() const noexcept {
    std::size_t n = 0;
    for (auto const& r : rows_) n += r.size();
    return n;
}

bool YoungTableau::is_standard() const { return plm::is_standard(reading()); }

Word YoungTableau::reading() const {
    Word w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

std::string YoungTableau::key() const {
    std::string s;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r > 0) s += '/';
        s += to_string(rows_[r]);
    }
    return s;
}

std::string YoungTableau::draw() const {
    bool wide = std::any_of(rows_.begin(), rows_.end(), [](Row const& r) {
        return std::any_of(r.begin(), r.end(), [](Letter a) { return a > 9; });
    });
    std::string s;
    for (auto const& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            auto cell = std::to_string(row[c]);
            if (wide && cell.size() < 2) cell.insert(0, " ");
            s += (c > 0 ? " " : "") + cell;
        }
        s += '\n';
    }
    return s;
}

YoungTableau schensted_insert(YoungTableau t, Letter a) {
    for (auto& row : t.rows_) {
        auto it = std::upper_bound(row.begin(), row.end(), a);
        if (it == row.end()) {
            row.push_back(a);
            return t;
        }
        std::swap(*it, a);
    }
    t.rows_.push_back({a});
    return t;
}

YoungTableau p_plac(Word const& w) {
    YoungTableau t;
    for (Letter a : w) t = schensted_insert(std::move(t), a);
    return t;
}

CochargeSeq plac_cochseq(YoungTableau const& t) {
    if (!t.is_standard()) throw std::invalid_argument("cochseq needs a standard tableau");
    return cochseq(t.reading());
}

}  // namespace plm
