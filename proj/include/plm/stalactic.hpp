#pragma once

#include "plm/words.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plm {

class StalacticTableau {
public:
    struct Column {
        Letter symbol;
        std::size_t height;
        friend bool operator==(Column const&, Column const&) = default;
    };

    StalacticTableau() = default;
    // Throws std::invalid_argument on repeated symbols or zero heights.
    explicit StalacticTableau(std::vector<Column> columns);

    std::vector<Column> const& columns() const noexcept { return columns_; }
    bool empty() const noexcept { return columns_.empty(); }
    std::size_t size() const noexcept;
    Word top_row() const;
    // Lower cells first, then the top row.
    Word reading() const;
    std::string key() const;
    std::string draw() const;

    friend bool operator==(StalacticTableau const&, StalacticTableau const&) = default;

private:
    friend StalacticTableau stal_insert(StalacticTableau t, Letter a);
    std::vector<Column> columns_;
};

StalacticTableau stal_insert(StalacticTableau t, Letter a);
// Inserts right to left; columns end up in the order of the rightmost occurrences.
StalacticTableau p_stal(Word const& w);

// Symbols of height-1 columns, left to right.
Word iota(StalacticTableau const& t);

struct Kappa {
    Word iota_class;  // least rotation of iota
    Evaluation evaluation;
    friend bool operator==(Kappa const&, Kappa const&) = default;
};
Kappa kappa(StalacticTableau const& t, std::size_t rank);
Word least_rotation(Word const& w);

struct StalStep {
    Word left;  // previous tableau is p_stal(left·right), next is p_stal(right·left)
    Word right;
};

struct StalPath {
    std::vector<StalacticTableau> tableaux;  // consecutive duplicates removed
    std::vector<StalStep> steps;             // only the steps that change the tableau
};

// Throws std::invalid_argument when the kappa values differ.
StalPath stal_path(StalacticTableau const& t, StalacticTableau const& u);

// g and h as column words of p_stal(u) and p_stal(v); checks gu = vg and uh = hv.
std::pair<Word, Word> stal_oconj_witness(Word const& u, Word const& v);

}  // namespace plm
