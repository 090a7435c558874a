#include "plm/baxter.hpp"

#include "plm/limits.hpp"

#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace plm {

bool LeftStrictBst::valid(BinaryTree const& t) {
    // Labels in a subtree lie in [lo, hi).
    std::function<bool(NodeId, Letter, Letter)> ok = [&](NodeId id, Letter lo, Letter hi) {
        if (id == no_node) return true;
        Letter a = t.label(id);
        if (a < lo || a >= hi || t[id].multiplicity != 1) return false;
        return ok(t.left(id), lo, a) && ok(t.right(id), a, hi);
    };
    return ok(t.root(), 1, std::numeric_limits<Letter>::max());
}

LeftStrictBst::LeftStrictBst(BinaryTree t) : BinaryTree(std::move(t)) {
    if (!valid(*this)) throw std::invalid_argument("not a left strict binary search tree");
}

LeftStrictBst left_strict_insert(LeftStrictBst t, Letter a) {
    if (t.empty()) {
        t.add_root(a);
        return t;
    }
    for (NodeId x = t.root();;) {
        bool go_left = a < t.label(x);
        NodeId next = go_left ? t.left(x) : t.right(x);
        if (next == no_node) {
            t.add_child(x, go_left, a);
            return t;
        }
        x = next;
    }
}

std::string TwinPair::draw() const {
    std::ostringstream os;
    os << "left:\n" << left.draw() << "right:\n" << right.draw();
    return os.str();
}

bool TwinPair::valid() const {
    if (left.tree().labels_sorted() != right.tree().labels_sorted()) return false;
    if (left.empty()) return true;
    auto a = left.canopy(), b = right.canopy();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i]) return false;
    return true;
}

TwinPair p_baxt(Word const& w) {
    TwinPair p;
    for (Letter a : w) p.left = left_strict_insert(std::move(p.left), a);
    p.right = p_sylv(w);
    if (!p.valid()) throw std::logic_error("p_baxt: trees of " + to_string(w) + " are not twins");
    return p;
}

std::vector<Word> baxt_readings(TwinPair const& p) {
    auto const& L = p.left.tree();
    auto const& R = p.right.tree();
    auto const n = L.node_count();
    if (n > 31) throw LimitExceeded("baxt_readings: too many nodes");
    if (n == 0) return {Word{}};
    using Mask = std::uint32_t;
    // Suffixes reachable from each pair of deleted-node masks.
    std::map<std::pair<Mask, Mask>, std::vector<Word>> memo;
    auto gone = [](Mask m, NodeId id) { return id == no_node || (m >> id & 1U); };
    auto const cap = limits().max_class;

    std::function<std::vector<Word> const&(Mask, Mask)> go = [&](Mask dl, Mask dr) -> std::vector<Word> const& {
        auto key = std::make_pair(dl, dr);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<Word> out;
        if (dl == (Mask{1} << n) - 1) {
            out.push_back({});
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                auto x = static_cast<NodeId>(i);
                if (gone(dl, x) || !gone(dl, L.parent(x))) continue;  // root of the remaining forest
                Letter a = L.label(x);
                for (std::size_t j = 0; j < n; ++j) {
                    auto y = static_cast<NodeId>(j);
                    if (gone(dr, y) || R.label(y) != a) continue;
                    if (!gone(dr, R.left(y)) || !gone(dr, R.right(y))) continue;  // leaf of what remains
                    for (auto const& rest : go(dl | Mask{1} << i, dr | Mask{1} << j)) {
                        Word w{a};
                        w.insert(w.end(), rest.begin(), rest.end());
                        out.push_back(std::move(w));
                    }
                }
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            if (out.size() > cap) throw LimitExceeded("baxt_readings: more than " + std::to_string(cap) + " words");
        }
        return memo.emplace(key, std::move(out)).first->second;
    };
    return go(0, 0);
}

std::pair<Word, Word> baxt_oconj_witness(Word const& p, Word const& q) {
    auto rank = std::max(max_letter(p), max_letter(q));
    if (evaluation(p, rank) != evaluation(q, rank)) throw std::invalid_argument("baxt_oconj_witness: evaluations differ");
    Word g = concat(p, q), h = concat(q, p);
    if (p_baxt(concat(p, g)) != p_baxt(concat(g, q)) || p_baxt(concat(h, p)) != p_baxt(concat(q, h)))
        throw std::logic_error("baxt_oconj_witness: witness fails for " + to_string(p) + ", " + to_string(q));
    return {g, h};
}

}  // namespace plm
