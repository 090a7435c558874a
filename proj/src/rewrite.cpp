#include "plm/rewrite.hpp"

#include "plm/limits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace plm {

RewriteRule::Side RewriteRule::parse_side(std::string_view text) {
    Side side(1);
    for (char ch : text) {
        if (ch == '_') {
            side.emplace_back();
        } else if (ch >= 'a' && ch <= 'z') {
            side.back().push_back({true, static_cast<Letter>(ch - 'a')});
        } else if (ch >= '1' && ch <= '9') {
            side.back().push_back({false, static_cast<Letter>(ch - '0')});
        } else {
            throw std::invalid_argument("bad rule character '" + std::string(1, ch) + "'");
        }
    }
    for (auto const& b : side) {
        if (b.empty()) throw std::invalid_argument("empty block in rule '" + std::string(text) + "'");
    }
    return side;
}

RewriteRule::RewriteRule(std::string name, std::string_view lhs, std::string_view rhs, Constraint constraint)
    : name_(std::move(name)),
      lhs_text_(lhs),
      rhs_text_(rhs),
      lhs_(parse_side(lhs)),
      rhs_(parse_side(rhs)),
      constraint_(std::move(constraint)) {
    if (lhs_.size() != rhs_.size()) throw std::invalid_argument("rule sides have different gap structure");
    for (std::size_t j = 0; j < lhs_.size(); ++j) {
        if (lhs_[j].size() != rhs_[j].size()) throw std::invalid_argument("rule blocks differ in length");
    }
    auto vars = [](Side const& s) {
        std::vector<Letter> v;
        for (auto const& b : s)
            for (auto const& a : b) v.push_back(a.variable ? a.value : 100 + a.value);
        std::sort(v.begin(), v.end());
        return v;
    };
    if (vars(lhs_) != vars(rhs_)) throw std::invalid_argument("rule '" + name_ + "' is not multihomogeneous");
}

void RewriteRule::apply_direction(Word const& w, Side const& from, Side const& to, std::vector<Word>& out) const {
    std::size_t const n = w.size();
    std::vector<std::size_t> tail(from.size() + 1, 0);
    for (std::size_t j = from.size(); j-- > 0;) tail[j] = tail[j + 1] + from[j].size();
    if (tail[0] > n) return;

    std::vector<std::size_t> starts(from.size());
    Binding bind;
    std::array<bool, 26> bound{};

    auto emit = [&] {
        if (constraint_ && !constraint_(bind)) return;
        Word r = w;
        for (std::size_t j = 0; j < to.size(); ++j) {
            for (std::size_t i = 0; i < to[j].size(); ++i) {
                auto const& atom = to[j][i];
                r[starts[j] + i] = atom.variable ? bind.values_[atom.value] : atom.value;
            }
        }
        if (r == w) return;
        auto sw = w, sr = r;
        std::sort(sw.begin(), sw.end());
        std::sort(sr.begin(), sr.end());
        if (sw != sr) throw std::logic_error("rule " + name_ + " changed the evaluation");
        out.push_back(std::move(r));
    };

    auto match = [&](auto& self, std::size_t j, std::size_t from_pos) -> void {
        if (j == from.size()) {
            emit();
            return;
        }
        auto const& block = from[j];
        for (std::size_t s = from_pos; s + tail[j] <= n; ++s) {
            std::array<bool, 26> saved = bound;
            bool ok = true;
            for (std::size_t i = 0; i < block.size() && ok; ++i) {
                Letter c = w[s + i];
                auto const& atom = block[i];
                if (!atom.variable) {
                    ok = atom.value == c;
                } else if (bound[atom.value]) {
                    ok = bind.values_[atom.value] == c;
                } else {
                    bound[atom.value] = true;
                    bind.values_[atom.value] = c;
                }
            }
            if (ok) {
                starts[j] = s;
                self(self, j + 1, s + block.size());
            }
            bound = saved;
        }
    };
    match(match, 0, 0);
}

void RewriteRule::apply_all(Word const& w, std::vector<Word>& out) const {
    apply_direction(w, lhs_, rhs_, out);
    apply_direction(w, rhs_, lhs_, out);
}

bool CongruenceClass::contains(Word const& w) const {
    return std::binary_search(members.begin(), members.end(), w);
}

struct PresentedMonoid::Cache {
    std::mutex mutex;
    std::unordered_map<Word, ClassPtr, WordHash> by_member;
};

PresentedMonoid::PresentedMonoid(std::string name, std::vector<RewriteRule> rules)
    : name_(std::move(name)), rules_(std::move(rules)), cache_(std::make_shared<Cache>()) {}

std::vector<Word> PresentedMonoid::rewrites(Word const& w) const {
    std::vector<Word> out;
    for (auto const& r : rules_) r.apply_all(w, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ClassPtr PresentedMonoid::close(Word const& w) const {
    check_total(w.size());
    {
        std::lock_guard lock(cache_->mutex);
        if (auto it = cache_->by_member.find(w); it != cache_->by_member.end()) return it->second;
    }
    std::unordered_set<Word, WordHash> seen{w};
    std::deque<Word> queue{w};
    std::vector<Word> scratch;
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        scratch.clear();
        for (auto const& r : rules_) r.apply_all(cur, scratch);
        for (auto& x : scratch) {
            if (seen.insert(x).second) {
                check_class_size(seen.size());
                queue.push_back(std::move(x));
            }
        }
    }
    auto cls = std::make_shared<CongruenceClass>();
    cls->members.assign(seen.begin(), seen.end());
    std::sort(cls->members.begin(), cls->members.end());

    std::lock_guard lock(cache_->mutex);
    // Another thread may have closed the same class meanwhile; keep whichever landed first.
    if (auto it = cache_->by_member.find(w); it != cache_->by_member.end()) return it->second;
    for (auto const& m : cls->members) cache_->by_member.emplace(m, cls);
    return cls;
}

ClassPtr close(PresentedMonoid const& m, Word const& w) { return m.close(w); }

bool equivalent(PresentedMonoid const& m, Word const& u, Word const& v) {
    if (u.size() != v.size()) return false;
    auto su = u, sv = v;
    std::sort(su.begin(), su.end());
    std::sort(sv.begin(), sv.end());
    if (su != sv) return false;
    return m.close(u)->contains(v);
}

std::vector<ClassPtr> word_neighbors(PresentedMonoid const& m, Word const& w) {
    std::map<Word, ClassPtr> found;
    auto cls = m.close(w);
    for (auto const& x : cls->members) {
        for (std::size_t k = 0; k <= x.size(); ++k) {
            auto r = m.close(rotate(x, k));
            found.emplace(r->canonical(), r);
        }
    }
    std::vector<ClassPtr> out;
    out.reserve(found.size());
    for (auto& [_, c] : found) out.push_back(c);
    return out;
}

namespace {

using B = RewriteRule::Binding;

std::vector<RewriteRule> plactic_rules() {
    return {
        RewriteRule("knuth-1", "acb", "cab", [](B const& v) { return v('a') <= v('b') && v('b') < v('c'); }),
        RewriteRule("knuth-2", "bac", "bca", [](B const& v) { return v('a') < v('b') && v('b') <= v('c'); }),
    };
}

std::vector<RewriteRule> hypoplactic_rules() {
    auto r = plactic_rules();
    r.emplace_back("hypo-1", "cadb", "acbd",
                   [](B const& v) { return v('a') <= v('b') && v('b') < v('c') && v('c') <= v('d'); });
    r.emplace_back("hypo-2", "bdac", "dbca",
                   [](B const& v) { return v('a') < v('b') && v('b') <= v('c') && v('c') < v('d'); });
    return r;
}

std::vector<RewriteRule> sylvester_rules() {
    return {RewriteRule("sylv", "ca_b", "ac_b", [](B const& v) { return v('a') <= v('b') && v('b') < v('c'); })};
}

std::vector<RewriteRule> stalactic_rules() { return {RewriteRule("stal", "ba_b", "ab_b")}; }

std::vector<RewriteRule> taiga_rules() {
    auto r = sylvester_rules();
    auto s = stalactic_rules();
    r.insert(r.end(), s.begin(), s.end());
    return r;
}

std::vector<RewriteRule> baxter_rules() {
    return {
        RewriteRule("baxt-1", "c_da_b", "c_ad_b",
                    [](B const& v) { return v('a') <= v('b') && v('b') < v('c') && v('c') <= v('d'); }),
        RewriteRule("baxt-2", "b_da_c", "b_ad_c",
                    [](B const& v) { return v('a') < v('b') && v('b') <= v('c') && v('c') < v('d'); }),
    };
}

// a=1, b=2, x=3, y=4
std::vector<RewriteRule> counterexample_rules() {
    return {
        RewriteRule("bxy", "234", "342"),
        RewriteRule("byx", "243", "432"),
        RewriteRule("axyb", "1342", "2431"),
    };
}

}  // namespace

PresentedMonoid const& presentation(std::string_view key) {
    static std::map<std::string, PresentedMonoid, std::less<>> const table = [] {
        std::map<std::string, PresentedMonoid, std::less<>> t;
        t.emplace("plac", PresentedMonoid("plac", plactic_rules()));
        t.emplace("hypo", PresentedMonoid("hypo", hypoplactic_rules()));
        t.emplace("sylv", PresentedMonoid("sylv", sylvester_rules()));
        t.emplace("stal", PresentedMonoid("stal", stalactic_rules()));
        t.emplace("taig", PresentedMonoid("taig", taiga_rules()));
        t.emplace("baxt", PresentedMonoid("baxt", baxter_rules()));
        t.emplace("counterexample", PresentedMonoid("counterexample", counterexample_rules()));
        return t;
    }();
    auto it = table.find(key);
    if (it == table.end()) throw std::invalid_argument("unknown presentation '" + std::string(key) + "'");
    return it->second;
}

std::vector<std::string> presentation_keys() {
    return {"plac", "hypo", "sylv", "stal", "taig", "baxt", "counterexample"};
}

namespace counterexample {

Word from_letters(std::string_view abxy) {
    Word w;
    for (char ch : abxy) {
        switch (ch) {
            case 'a': w.push_back(a); break;
            case 'b': w.push_back(b); break;
            case 'x': w.push_back(x); break;
            case 'y': w.push_back(y); break;
            default: throw std::invalid_argument("letters are a, b, x, y");
        }
    }
    return w;
}

std::string to_letters(Word const& w) {
    std::string s;
    for (Letter c : w) {
        if (c < 1 || c > 4) throw std::invalid_argument("symbol outside {a,b,x,y}");
        s += "abxy"[c - 1];
    }
    return s;
}

bool in_language(Word const& w) {
    std::size_t as = 0, bs = 0;
    for (std::size_t i = 0; i < w.size();) {
        if (w[i] == a) {
            ++as, ++i;
        } else if (w[i] == b) {
            ++bs, ++i;
        } else if (i + 1 < w.size() && ((w[i] == x && w[i + 1] == y) || (w[i] == y && w[i + 1] == x))) {
            i += 2;
        } else {
            return false;
        }
    }
    return as == 1 && bs == 1;
}

std::size_t mu(Word const& w) {
    if (!in_language(w)) throw std::invalid_argument("word " + to_letters(w) + " is not in L");
    auto pa = static_cast<std::size_t>(std::find(w.begin(), w.end(), a) - w.begin());
    auto pb = static_cast<std::size_t>(std::find(w.begin(), w.end(), b) - w.begin());
    // Read cyclically from just after a, skipping b; the xy/yx factors stay aligned.
    Word rest;
    for (std::size_t i = 1; i < w.size(); ++i) {
        Letter c = w[(pa + i) % w.size()];
        if (c != b) rest.push_back(c);
    }
    std::size_t k = 0;
    while (2 * k + 1 < rest.size() && rest[2 * k] == x && rest[2 * k + 1] == y) ++k;
    return pb > pa ? k : k + 1;
}

}  // namespace counterexample

}  // namespace plm
