#pragma once

#include "plm/words.hpp"

#include <string>
#include <vector>

namespace plm {

// Rows are stored top to bottom; each row starts in the column where the previous row ends,
// so the offsets are implied by the row lengths.
class QuasiRibbonTableau {
public:
    using Row = std::vector<Letter>;

    QuasiRibbonTableau() = default;
    explicit QuasiRibbonTableau(std::vector<Row> rows);

    std::vector<Row> const& rows() const noexcept { return rows_; }
    bool empty() const noexcept { return rows_.empty(); }
    std::size_t size() const noexcept;
    std::vector<std::size_t> offsets() const;
    // Columns left to right, entries top to bottom.
    std::vector<std::vector<Letter>> columns() const;
    std::size_t row_of(Letter a) const;
    bool contains(Letter a) const;

    Word col_reading() const;
    Word row_reading() const;
    std::string key() const;
    std::string draw() const;

    friend bool operator==(QuasiRibbonTableau const&, QuasiRibbonTableau const&) = default;

    static bool valid(std::vector<Row> const& rows);

private:
    friend QuasiRibbonTableau hypo_insert(QuasiRibbonTableau t, Letter a);
    std::vector<Row> rows_;
};

QuasiRibbonTableau hypo_insert(QuasiRibbonTableau t, Letter a);
QuasiRibbonTableau p_hypo(Word const& w);

// i is 1-based: compares the i-th and (i+1)-th smallest distinct symbols of w.
bool has_inversion(Word const& w, std::size_t i);

struct HypoStep {
    enum class Kind { same_same, split_split, same_split, split_same };
    Kind kind;
    Letter symbol;  // the step moves symbol+1 into place
    Word left;      // representing word of the previous tableau is left·right
    Word right;
};

struct HypoPath {
    std::vector<QuasiRibbonTableau> tableaux;  // consecutive duplicates removed
    std::vector<HypoStep> steps;               // one per pair i, i+1; identity steps have empty words
};

HypoPath hypo_path(QuasiRibbonTableau const& t, QuasiRibbonTableau const& u);
char const* to_string(HypoStep::Kind k);

}  // namespace plm
