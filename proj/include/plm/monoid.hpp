#pragma once

#include "plm/words.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plm {

// Canonical key -> sorted member words, for every element of one evaluation.
using Partition = std::map<std::string, std::vector<Word>>;

// Uniform view of a monoid for the shift-graph engine: a canonical key per word and a
// way to list the words of an element.
class MonoidHandle {
public:
    using KeyFn = std::function<std::string(Word const&)>;
    using ClassFn = std::function<std::vector<Word>(Word const&)>;
    using DrawFn = std::function<std::string(Word const&)>;

    MonoidHandle(std::string name, KeyFn key, DrawFn draw = {}, ClassFn cls = {});

    std::string const& name() const noexcept { return name_; }
    std::string key(Word const& w) const { return key_(w); }
    std::string draw(Word const& w) const;

    // Sorted. Uses the structural enumeration when there is one, else filters the evaluation.
    std::vector<Word> class_of(Word const& w) const;
    std::shared_ptr<Partition const> partition(Evaluation const& e) const;
    // (key, least word seen with that key) for every rotation of every member, self included.
    std::vector<std::pair<std::string, Word>> neighbors(Word const& w) const;

private:
    struct Cache;
    std::string name_;
    KeyFn key_;
    DrawFn draw_;
    ClassFn class_;
    std::shared_ptr<Cache> cache_;
};

// plac, hypo, sylv, stal, taig, baxt, counterexample
MonoidHandle const& monoid(std::string_view key);
std::vector<std::string> monoid_keys();
// Same monoid with classes and keys taken from the presentation closure.
MonoidHandle const& oracle_monoid(std::string_view key);

// Drops trailing zero counts so that evaluations of one word compare equal across ranks.
Evaluation trim(Evaluation const& e);

}  // namespace plm
