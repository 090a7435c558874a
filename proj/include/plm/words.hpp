#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plm {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Letter a : w) {
            h ^= a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// Symbol counts indexed by 1..rank.
class Evaluation {
public:
    Evaluation() = default;
    explicit Evaluation(std::vector<std::size_t> counts) : counts_(std::move(counts)) {}
    static Evaluation zero(std::size_t rank) { return Evaluation(std::vector<std::size_t>(rank, 0)); }

    std::size_t rank() const noexcept { return counts_.size(); }
    std::size_t operator[](Letter a) const { return counts_.at(a - 1); }
    std::size_t& operator[](Letter a) { return counts_.at(a - 1); }
    std::size_t total() const noexcept;
    std::size_t support() const noexcept;
    std::vector<std::size_t> const& counts() const noexcept { return counts_; }

    friend bool operator==(Evaluation const&, Evaluation const&) = default;
    friend auto operator<=>(Evaluation const&, Evaluation const&) = default;

private:
    std::vector<std::size_t> counts_;
};

struct CochargeSeq {
    std::vector<unsigned> labels;
    friend bool operator==(CochargeSeq const&, CochargeSeq const&) = default;
};

std::size_t max_letter(Word const& w) noexcept;
Evaluation evaluation(Word const& w, std::size_t rank);
inline Evaluation evaluation(Word const& w) { return evaluation(w, max_letter(w)); }
bool is_standard(Word const& w);
Word rotate(Word const& w, std::size_t k);
Word concat(Word a, Word const& b);
std::size_t multinomial(Evaluation const& e);

// Relabels the distinct symbols of w as 1..k preserving order; returns the relabelled
// word and the map back (index i holds the original symbol of i+1).
std::pair<Word, std::vector<Letter>> compress_alphabet(Word const& w);

// Distinct arrangements of a multiset in lexicographic order.
class EvaluationWords {
public:
    explicit EvaluationWords(Evaluation const& e);
    EvaluationWords(Evaluation const& e, std::size_t limit);

    class iterator {
    public:
        using value_type = Word;
        using difference_type = std::ptrdiff_t;
        using reference = Word const&;
        using pointer = Word const*;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(iterator const& a, iterator const& b) { return a.done_ == b.done_; }

    private:
        friend class EvaluationWords;
        explicit iterator(Word first) : current_(std::move(first)), done_(false) {}
        Word current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(first_); }
    iterator end() const { return iterator(); }

private:
    Word first_;
};

std::vector<Word> words_with_evaluation(Evaluation const& e);
// All evaluations of the given rank with total at most max_total, ordered by total then lexicographically.
std::vector<Evaluation> evaluations_up_to(std::size_t rank, std::size_t max_total);
std::vector<Evaluation> evaluations_with_total(std::size_t rank, std::size_t total);

CochargeSeq cochseq(Word const& w);

// Digit strings when every symbol is a single digit, comma separated otherwise.
std::string to_string(Word const& w);
std::string to_string(Evaluation const& e);
std::string to_string(CochargeSeq const& c);
Word parse_word(std::string_view s);
Evaluation parse_evaluation(std::string_view s);
std::ostream& operator<<(std::ostream& os, Word const& w);
std::ostream& operator<<(std::ostream& os, Evaluation const& e);

}  // namespace plm
