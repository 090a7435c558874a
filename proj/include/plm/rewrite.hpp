#pragma once

#include "plm/words.hpp"

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace plm {

// A rule side is a list of blocks of adjacent letters; consecutive blocks are separated
// by arbitrary (possibly empty) factors. Lowercase letters in the textual form are
// variables, digits are fixed symbols and '_' separates blocks.
class RewriteRule {
public:
    class Binding {
    public:
        Letter operator()(char var) const { return values_[static_cast<unsigned char>(var - 'a')]; }

    private:
        friend class RewriteRule;
        std::array<Letter, 26> values_{};
    };
    using Constraint = std::function<bool(Binding const&)>;

    RewriteRule(std::string name, std::string_view lhs, std::string_view rhs, Constraint constraint = {});

    std::string const& name() const noexcept { return name_; }
    std::string const& lhs() const noexcept { return lhs_text_; }
    std::string const& rhs() const noexcept { return rhs_text_; }

    // Every word reachable from w by a single application, in either direction.
    void apply_all(Word const& w, std::vector<Word>& out) const;
    std::vector<Word> apply_all(Word const& w) const {
        std::vector<Word> out;
        apply_all(w, out);
        return out;
    }

private:
    struct Atom {
        bool variable;
        Letter value;  // variable index or fixed symbol
    };
    using Side = std::vector<std::vector<Atom>>;

    static Side parse_side(std::string_view text);
    void apply_direction(Word const& w, Side const& from, Side const& to, std::vector<Word>& out) const;

    std::string name_;
    std::string lhs_text_;
    std::string rhs_text_;
    Side lhs_;
    Side rhs_;
    Constraint constraint_;
};

struct CongruenceClass {
    std::vector<Word> members;  // sorted, so the front is the canonical representative

    Word const& canonical() const { return members.front(); }
    bool contains(Word const& w) const;
    std::size_t size() const noexcept { return members.size(); }
};

using ClassPtr = std::shared_ptr<CongruenceClass const>;

class PresentedMonoid {
public:
    PresentedMonoid(std::string name, std::vector<RewriteRule> rules);

    std::string const& name() const noexcept { return name_; }
    std::vector<RewriteRule> const& rules() const noexcept { return rules_; }

    // One-step rewrites of w under every rule.
    std::vector<Word> rewrites(Word const& w) const;
    ClassPtr close(Word const& w) const;

private:
    struct Cache;
    std::string name_;
    std::vector<RewriteRule> rules_;
    std::shared_ptr<Cache> cache_;
};

ClassPtr close(PresentedMonoid const& m, Word const& w);
bool equivalent(PresentedMonoid const& m, Word const& u, Word const& v);
// Classes of all rotations of all members of the class of w, sorted by canonical word.
std::vector<ClassPtr> word_neighbors(PresentedMonoid const& m, Word const& w);

// Keys: plac, hypo, sylv, stal, taig, baxt, counterexample.
PresentedMonoid const& presentation(std::string_view key);
std::vector<std::string> presentation_keys();

namespace counterexample {
inline constexpr Letter a = 1;
inline constexpr Letter b = 2;
inline constexpr Letter x = 3;
inline constexpr Letter y = 4;

// Words over {a,b,x,y} built from the factors a, b, xy, yx with exactly one a and one b.
bool in_language(Word const& w);
std::size_t mu(Word const& w);
Word from_letters(std::string_view abxy);
std::string to_letters(Word const& w);
}  // namespace counterexample

}  // namespace plm
