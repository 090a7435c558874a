#pragma once

#include "plm/words.hpp"

#include <string>
#include <vector>

namespace plm {

class YoungTableau {
public:
    using Row = std::vector<Letter>;

    YoungTableau() = default;
    // Throws std::invalid_argument unless rows form a semistandard Young tableau.
    explicit YoungTableau(std::vector<Row> rows);

    std::vector<Row> const& rows() const noexcept { return rows_; }
    bool empty() const noexcept { return rows_.empty(); }
    std::size_t size() const noexcept;
    bool is_standard() const;

    // Rows from bottom to top, each left to right.
    Word reading() const;
    std::string key() const;
    std::string draw() const;

    friend bool operator==(YoungTableau const&, YoungTableau const&) = default;

    static bool valid(std::vector<Row> const& rows);

private:
    friend YoungTableau schensted_insert(YoungTableau t, Letter a);
    std::vector<Row> rows_;
};

YoungTableau schensted_insert(YoungTableau t, Letter a);
YoungTableau p_plac(Word const& w);
CochargeSeq plac_cochseq(YoungTableau const& t);

}  // namespace plm
