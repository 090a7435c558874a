#include "plm/sylvester.hpp"

#include "plm/limits.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace plm {

bool RightStrictBst::valid(BinaryTree const& t) {
    // Labels in a subtree lie in (lo, hi].
    std::function<bool(NodeId, Letter, Letter)> ok = [&](NodeId id, Letter lo, Letter hi) {
        if (id == no_node) return true;
        Letter a = t.label(id);
        if (a <= lo || a > hi || t[id].multiplicity != 1) return false;
        return ok(t.left(id), lo, a) && ok(t.right(id), a, hi);
    };
    return ok(t.root(), 0, std::numeric_limits<Letter>::max());
}

RightStrictBst::RightStrictBst(BinaryTree t) : BinaryTree(std::move(t)) {
    if (!valid(*this)) throw std::invalid_argument("not a right strict binary search tree");
}

RightStrictBst sylv_insert(RightStrictBst t, Letter a) {
    if (t.empty()) {
        t.add_root(a);
        return t;
    }
    NodeId x = t.root();
    for (;;) {
        bool go_left = a <= t.label(x);
        NodeId next = go_left ? t.left(x) : t.right(x);
        if (next == no_node) {
            t.add_child(x, go_left, a);
            return t;
        }
        x = next;
    }
}

RightStrictBst p_sylv(Word const& w) {
    RightStrictBst t;
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = sylv_insert(std::move(t), *it);
    return t;
}

std::vector<Word> readings(BinaryTree const& t) {
    std::set<Word> out;
    if (t.empty()) return {Word{}};
    std::vector<int> pending(t.node_count(), 0);
    for (NodeId id : t.postorder()) {
        pending[static_cast<std::size_t>(id)] = (t.left(id) != no_node) + (t.right(id) != no_node);
    }
    std::vector<NodeId> avail;
    for (NodeId id : t.postorder())
        if (pending[static_cast<std::size_t>(id)] == 0) avail.push_back(id);
    Word w;
    auto const cap = limits().max_class;
    std::function<void()> go = [&]() {
        if (avail.empty()) {
            out.insert(w);
            if (out.size() > cap) throw LimitExceeded("readings: more than " + std::to_string(cap) + " words");
            return;
        }
        for (std::size_t i = 0; i < avail.size(); ++i) {
            NodeId id = avail[i];
            avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(i));
            w.insert(w.end(), t[id].multiplicity, t.label(id));
            NodeId par = t.parent(id);
            bool freed = par != no_node && --pending[static_cast<std::size_t>(par)] == 0;
            if (freed) avail.push_back(par);
            go();
            if (freed) avail.pop_back();
            if (par != no_node) ++pending[static_cast<std::size_t>(par)];
            w.resize(w.size() - t[id].multiplicity);
            avail.insert(avail.begin() + static_cast<std::ptrdiff_t>(i), id);
        }
    };
    go();
    return {out.begin(), out.end()};
}

namespace {

bool is_topmost(BinaryTree const& t, NodeId id) {
    for (NodeId x = t.parent(id); x != no_node; x = t.parent(x))
        if (t.label(x) == t.label(id)) return false;
    return true;
}

std::size_t count_label(BinaryTree const& t, Letter a) {
    std::size_t n = 0;
    for (NodeId id : t.postorder())
        if (t.label(id) == a) ++n;
    return n;
}

}  // namespace

bool satisfies_structure_lemmas(RightStrictBst const& t) {
    auto const& bt = t.tree();
    for (NodeId id : bt.postorder()) {
        auto same = bt.nodes_with_label(bt.label(id));
        for (std::size_t i = 1; i < same.size(); ++i)
            if (!bt.is_ancestor(same[i - 1], same[i])) return false;
        if (is_topmost(bt, id)) continue;
        if (bt.right(id) != no_node) return false;
        NodeId par = bt.parent(id);
        if (bt.left(par) == id && bt.label(par) != bt.label(id)) return false;
    }
    return true;
}

NodeClasses classify_nodes(BinaryTree const& t, Letter a) {
    auto nodes = t.nodes_with_label(a);
    if (nodes.empty()) throw std::invalid_argument("symbol " + std::to_string(a) + " not in tree");
    std::vector<std::vector<NodeId>> runs{{nodes.front()}};
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (t.parent(nodes[i]) == nodes[i - 1]) runs.back().push_back(nodes[i]);
        else runs.push_back({nodes[i]});
    }
    NodeClasses c;
    c.primary = runs.front();
    NodeId bottom = nodes.back();
    bool childless = t.left(bottom) == no_node && t.right(bottom) == no_node;
    for (std::size_t r = 1; r < runs.size(); ++r) {
        auto& dst = (r + 1 == runs.size() && childless) ? c.tertiary : c.secondary;
        dst.insert(dst.end(), runs[r].begin(), runs[r].end());
    }
    return c;
}

TraversalPlan traversal_plan(RightStrictBst const& u) {
    auto const& U = u.tree();
    TraversalPlan plan;
    for (NodeId id : U.postorder()) {
        if (!is_topmost(U, id)) continue;
        PlanStep st;
        st.node = id;
        st.u = U.label(id);
        st.B = RightStrictBst(U.copy_subtree(id));
        auto below = U.postorder(id);
        st.m = st.u;
        for (NodeId x : below) st.m = std::min(st.m, U.label(x));
        for (NodeId c = id, par = U.parent(c); par != no_node; c = par, par = U.parent(c)) {
            if (!st.p && U.right(par) == c) st.p = U.label(par);
            if (!st.q && U.left(par) == c) st.q = U.label(par);
        }

        std::vector<NodeId> drop;
        NodeId top_m = no_node;
        for (NodeId x : below) {
            if (U.label(x) != st.m) continue;
            if (top_m == no_node || U.depth(x) < U.depth(top_m)) top_m = x;
        }
        for (NodeId x : below)
            if (U.label(x) == st.m && x != top_m) drop.push_back(x);
        st.C = RightStrictBst(U.copy_subtree(id, drop));
        if (st.q) {
            for (NodeId x : classify_nodes(U, *st.q).tertiary)
                if (U.is_ancestor(id, x)) drop.push_back(x);
        }
        st.D = RightStrictBst(U.copy_subtree(id, drop));
        st.E = st.D;
        if (st.q && count_label(st.D.tree(), *st.q) > 0) {
            auto s = count_label(U, *st.q) - count_label(st.D.tree(), *st.q);
            for (std::size_t i = 0; i < s; ++i) st.E = sylv_insert(std::move(st.E), *st.q);
        }
        plan.push_back(std::move(st));
    }
    for (std::size_t h = 0; h < plan.size(); ++h) {
        for (std::size_t i = 0; i <= h; ++i) {
            bool below_other = false;
            for (std::size_t j = 0; j <= h && !below_other; ++j)
                below_other = j != i && U.is_ancestor(plan[j].node, plan[i].node);
            if (!below_other) plan[h].up.push_back(i);
        }
    }
    return plan;
}

bool satisfies_path_conditions(RightStrictBst const& t, TraversalPlan const& plan, std::size_t h, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    auto const& T = t.tree();
    auto const& ups = plan.at(h).up;
    NodeId cursor = T.root();
    for (std::size_t j = ups.size(); j-- > 0;) {
        auto const& E = plan[ups[j]].E.tree();
        std::vector<NodeId> img;
        if (j + 1 == ups.size()) {
            img = embed(E, T, cursor);
            if (img.empty()) return fail("P1: E_" + std::to_string(ups[j] + 1) + " not at the root");
        } else {
            for (NodeId at = cursor; at != no_node && img.empty(); at = T.left(at)) img = embed(E, T, at);
            if (img.empty()) return fail("P2: E_" + std::to_string(ups[j] + 1) + " not on the left path");
        }
        std::vector<char> in(T.node_count(), 0);
        for (NodeId x : img) in[static_cast<std::size_t>(x)] = 1;
        NodeId lm = img[static_cast<std::size_t>(E.leftmost(E.root()))];
        NodeId rm = img[static_cast<std::size_t>(E.rightmost(E.root()))];
        for (NodeId x : img) {
            for (NodeId c : {T.left(x), T.right(x)}) {
                if (c == no_node || in[static_cast<std::size_t>(c)]) continue;
                if (c != T.left(lm) && c != T.right(rm))
                    return fail("P3: stray subtree below E_" + std::to_string(ups[j] + 1));
            }
        }
        cursor = T.left(lm);
    }
    for (std::size_t i : ups) {
        auto const& st = plan[i];
        if (!st.p) continue;
        for (NodeId x : T.nodes_with_label(st.m))
            for (NodeId y = T.parent(x); y != no_node; y = T.parent(y))
                if (T.label(y) == *st.p) return fail("P4: m_" + std::to_string(i + 1) + " below p_" + std::to_string(i + 1));
    }
    return true;
}

namespace {

using Mask = std::vector<char>;

Mask minus(Mask a, Mask const& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i]) a[i] = 0;
    return a;
}

struct Located {
    Mask mask;
    NodeId root = no_node;
    NodeId leftmost = no_node;
    NodeId rightmost = no_node;
};

std::logic_error step_error(std::string const& rule, std::string const& msg) {
    return std::logic_error("sylv_path " + rule + ": " + msg);
}

// Word surgery on one tree: pieces are node sets read children-first, or runs of a symbol.
class Surgery {
public:
    Surgery(RightStrictBst const& t, std::string rule) : t_(t.tree()), post_(t_.postorder()), rule_(std::move(rule)) {}

    BinaryTree const& tree() const { return t_; }
    std::string const& rule() const { return rule_; }
    void set_rule(std::string r) { rule_ = std::move(r); }

    Mask none() const { return Mask(t_.node_count(), 0); }
    Mask all() const { return Mask(t_.node_count(), 1); }
    Mask sub(NodeId id) const {
        Mask m = none();
        if (id != no_node)
            for (NodeId x : t_.postorder(id)) m[static_cast<std::size_t>(x)] = 1;
        return m;
    }

    Located locate(RightStrictBst const& pattern, NodeId at) const {
        auto const& P = pattern.tree();
        auto img = embed(P, t_, at);
        if (img.empty()) throw step_error(rule_, "subtree " + P.serialize() + " not found");
        Located l;
        l.mask = none();
        for (NodeId x : img) l.mask[static_cast<std::size_t>(x)] = 1;
        l.root = at;
        l.leftmost = img[static_cast<std::size_t>(P.leftmost(P.root()))];
        l.rightmost = img[static_cast<std::size_t>(P.rightmost(P.root()))];
        return l;
    }
    NodeId lm(Located const& l) const { return t_.left(l.leftmost); }
    NodeId rm(Located const& l) const { return t_.right(l.rightmost); }

    NodeId topmost(Letter a) const {
        auto nodes = t_.nodes_with_label(a);
        if (nodes.empty()) throw step_error(rule_, "no node " + std::to_string(a));
        return nodes.front();
    }

    Surgery& nodes(Mask const& m) {
        for (NodeId id : post_)
            if (m[static_cast<std::size_t>(id)]) out().push_back(t_.label(id));
        return *this;
    }
    Surgery& node(NodeId id) {
        out().push_back(t_.label(id));
        return *this;
    }
    // Whole subtrees hanging from nodes labelled a go first.
    Surgery& nodes_first(Mask const& m, std::optional<Letter> a) {
        if (!a) return nodes(m);
        Mask early = none();
        for (NodeId id : post_) {
            if (m[static_cast<std::size_t>(id)] && t_.label(id) == *a) {
                for (NodeId x : t_.postorder(id))
                    if (m[static_cast<std::size_t>(x)]) early[static_cast<std::size_t>(x)] = 1;
            }
        }
        nodes(early);
        return nodes(minus(m, early));
    }
    Surgery& run(Letter a, long k) {
        if (k < 0) throw step_error(rule_, "negative run of " + std::to_string(a));
        out().insert(out().end(), static_cast<std::size_t>(k), a);
        return *this;
    }
    Surgery& cut() {
        second_ = true;
        return *this;
    }

    SylvStep finish() { return SylvStep{rule_, std::move(left_), std::move(right_)}; }

private:
    Word& out() { return second_ ? right_ : left_; }

    BinaryTree const& t_;
    std::vector<NodeId> post_;
    std::string rule_;
    Word left_, right_;
    bool second_ = false;
};

long as_long(std::size_t n) { return static_cast<long>(n); }

bool below_label(BinaryTree const& t, NodeId x, Letter a) {
    for (NodeId y = t.parent(x); y != no_node; y = t.parent(y))
        if (t.label(y) == a) return true;
    return false;
}

// Base case (eh == nullptr) and induction case 1 share their shape; the base case has no
// E_h and the whole tree plays the part of the right-maximal subtree.
SylvStep case_one(RightStrictBst const& cur, PlanStep const& next, Located const* eh, std::optional<Letter> qh) {
    Surgery s(cur, eh ? "1" : "base ");
    auto const& T = s.tree();
    Mask rest = eh ? s.sub(s.rm(*eh)) : s.all();
    Mask lam = eh ? s.sub(s.lm(*eh)) : s.none();
    Mask e = eh ? eh->mask : s.none();

    NodeId x = no_node;
    if (next.p && (!eh || qh != next.p)) {
        for (NodeId id : T.nodes_with_label(next.u)) {
            if (below_label(T, id, *next.p)) {
                x = id;
                break;
            }
        }
    }
    if (x != no_node) {
        s.set_rule(eh ? "1(a)" : "base 1");
        NodeId p = s.topmost(*next.p);
        if (!T.is_ancestor(T.right(p), x)) throw step_error(s.rule(), "distinguished node not right of p");
        Mask zeta = minus(rest, s.sub(p));
        Mask delta = minus(s.sub(T.right(p)), s.sub(x));
        s.nodes(s.sub(T.left(x))).nodes(s.sub(T.right(x))).node(x).cut();
        s.nodes(delta).nodes(s.sub(T.left(p))).node(p).nodes(zeta).nodes(lam).nodes(e);
        return s.finish();
    }
    s.set_rule(eh ? "1(b)" : "base 2");
    x = s.topmost(next.u);
    Mask zeta = minus(rest, s.sub(x));
    s.nodes_first(s.sub(T.left(x)), next.p).nodes(s.sub(T.right(x))).node(x).cut();
    s.nodes(zeta).nodes(lam).nodes(e);
    return s.finish();
}

std::size_t secondary_between(BinaryTree const& U, NodeId low, NodeId high, std::optional<Letter> q) {
    if (!q) return 0;
    auto sec = classify_nodes(U, *q).secondary;
    std::size_t n = 0;
    for (NodeId y = U.parent(low); y != no_node && y != high; y = U.parent(y))
        if (std::find(sec.begin(), sec.end(), y) != sec.end()) ++n;
    return n;
}

SylvStep induction_step(RightStrictBst const& cur, RightStrictBst const& target, TraversalPlan const& plan,
                        std::size_t k) {
    auto const& U = target.tree();
    auto const& a = plan[k - 1];  // u_h
    auto const& b = plan[k];      // u_{h+1}
    Surgery s(cur, "?");
    auto const& T = s.tree();
    Located eh = s.locate(a.E, T.root());
    Located dh = s.locate(a.D, T.root());
    bool e_differs = a.E.node_count() != a.D.node_count();

    if (!U.is_ancestor(b.node, a.node)) return case_one(cur, b, &eh, a.q);

    bool in_left = U.is_ancestor(U.left(b.node), a.node);
    Mask lam = s.sub(s.lm(dh));
    auto const u = b.u;

    if (in_left) {
        auto s_all = as_long(count_label(U, u));
        auto s2 = as_long(classify_nodes(U, u).primary.size());
        if (e_differs) {
            s.set_rule("2(a)");
            auto extra = as_long(a.E.node_count() - a.D.node_count());
            s.run(u, s2).cut().run(u, extra - s2).nodes(s.sub(s.rm(dh))).nodes(lam).nodes(dh.mask);
        } else {
            s.set_rule("2(b)");
            NodeId x = s.topmost(u);
            Mask delta = minus(s.sub(s.rm(dh)), s.sub(x));
            s.nodes(s.sub(T.right(x))).run(u, s2).cut().run(u, s_all - s2).nodes(delta).nodes(lam).nodes(dh.mask);
        }
        return s.finish();
    }

    auto const q = a.q;
    auto const m = a.m;
    long s_q = q ? as_long(count_label(U, *q)) - as_long(count_label(a.D.tree(), *q)) : 0;
    long s2 = as_long(secondary_between(U, a.node, b.node, q));
    long s1 = s_q - s2;
    long r = as_long(count_label(U, m)) - 1;

    // beta/delta when E_h = D_h: split the right-maximal subtree of D_h at the topmost q_h.
    Mask beta_q = s.none(), delta_q = s.sub(s.rm(dh));
    if (!e_differs && q && !T.nodes_with_label(*q).empty()) {
        NodeId xq = s.topmost(*q);
        beta_q = s.sub(T.right(xq));
        delta_q = minus(delta_q, s.sub(xq));
    }

    bool case4 = false;
    for (std::size_t i = 0; i < k; ++i) {
        if (U.is_ancestor(U.left(b.node), plan[i].node)) case4 = true;
    }

    if (!case4) {
        NodeId y = s.topmost(u);
        std::vector<NodeId> chain;  // m_h nodes outside D_h, lowest first
        for (NodeId id : T.nodes_with_label(m))
            if (!dh.mask[static_cast<std::size_t>(id)]) chain.push_back(id);
        std::reverse(chain.begin(), chain.end());
        if (as_long(chain.size()) != r) throw step_error("3", "unexpected number of nodes m_h");
        chain.push_back(dh.leftmost);
        if (T.label(dh.leftmost) != m) throw step_error("3", "leftmost node of D_h is not m_h");
        if (!T.is_ancestor(T.left(chain.front()), y)) throw step_error("3", "u_{h+1} not below the lowest m_h");

        s.set_rule(e_differs ? "3(a)" : "3(b)");
        // With no q_h above D_h, beta has to follow the remaining q_h or it lands under u_{h+1}.
        bool late_beta = !e_differs && s2 == 0;
        s.nodes(s.sub(T.left(y)));
        if (!e_differs && !late_beta) s.nodes(beta_q);
        s.run(q.value_or(0), s2).node(y).cut();
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i > 0) s.node(chain[i - 1]);
            s.nodes(minus(s.sub(T.left(chain[i])), s.sub(i == 0 ? y : chain[i - 1])));
        }
        if (late_beta) s.nodes(beta_q);
        s.run(q.value_or(0), s1);
        s.nodes(e_differs ? s.sub(s.rm(dh)) : delta_q).nodes(dh.mask);
        return s.finish();
    }

    auto const& ups = a.up;
    if (ups.size() < 2) throw step_error("4", "no earlier subtree E_g");
    auto const& g = plan[ups[ups.size() - 2]];
    Located eg, dg;
    {
        bool found = false;
        for (NodeId at = s.lm(eh); at != no_node && !found; at = T.left(at)) {
            if (embed(g.E.tree(), T, at).empty()) continue;
            eg = s.locate(g.E, at);
            dg = s.locate(g.D, at);
            found = true;
        }
        if (!found) throw step_error("4", "E_g not on the left path");
    }
    bool g_differs = g.E.node_count() != g.D.node_count();
    Mask lam_g = s.sub(s.lm(dg));
    long t2 = as_long(classify_nodes(U, u).primary.size());
    long t = as_long(count_label(U, u)) - as_long(count_label(g.D.tree(), u));
    long t1 = t - t2;
    long o2 = 0, r2 = 0;
    for (NodeId y = T.parent(dg.root); y != no_node; y = T.parent(y)) {
        if (T.label(y) == u) ++o2;
        if (T.label(y) == m && !dh.mask[static_cast<std::size_t>(y)]) ++r2;
    }
    long o1 = t - o2, r1 = r - r2;
    Letter qq = q.value_or(0);

    if (e_differs && g_differs) {
        s.set_rule("4(a)");
        s.run(qq, s2).run(u, t2).cut();
        s.run(u, t1).nodes(lam_g).nodes(dg.mask).nodes(s.sub(s.rm(dh))).run(m, r).run(qq, s1).nodes(dh.mask);
    } else if (e_differs) {
        Mask beta = s.sub(s.rm(dh));
        if (o2 == 0) {
            s.set_rule("4(b)(1)");
            s.run(qq, s2).run(u, t2).cut();
            s.run(u, t1).run(m, r1).nodes(lam_g).nodes(dg.mask).run(m, r2).nodes(beta).run(qq, s1).nodes(dh.mask);
        } else if (o2 >= t2) {
            s.set_rule("4(b)(2)");
            s.run(qq, s2).run(u, o1).nodes(lam_g).nodes(dg.mask).run(u, t2).cut();
            s.run(u, o2 - t2).run(m, r).nodes(beta).run(qq, s1).nodes(dh.mask);
        } else {
            s.set_rule("4(b)(3)");
            s.run(qq, s2).run(u, t2 - o2).cut();
            s.run(u, o1 - t2 + o2).nodes(lam_g).nodes(dg.mask).run(u, o2).run(m, r).nodes(beta).run(qq, s1);
            s.nodes(dh.mask);
        }
    } else if (g_differs) {
        if (s2 > 0 && q) {
            s.set_rule("4(c)(1)");
            s.nodes(beta_q).run(qq, s2).run(u, t2).cut();
            s.run(u, t1).nodes(lam_g).nodes(dg.mask).run(m, r).run(qq, s1).nodes(delta_q).nodes(dh.mask);
        } else {
            s.set_rule("4(c)(2)");
            s.run(u, t2).cut();
            s.run(u, t1).nodes(lam_g).nodes(dg.mask).run(m, r).nodes(beta_q).run(qq, s_q).nodes(delta_q);
            s.nodes(dh.mask);
        }
    } else if (s2 > 0 && q) {
        if (o2 == 0) {
            s.set_rule("4(d)(1)");
            s.nodes(beta_q).run(qq, s2).run(u, t2).cut();
            s.run(u, t1).run(m, r1).nodes(lam_g).nodes(dg.mask).run(m, r2).run(qq, s1).nodes(delta_q);
        } else if (o2 >= t2) {
            s.set_rule("4(d)(2)");
            s.nodes(beta_q).run(qq, s2).run(u, o1).nodes(lam_g).nodes(dg.mask).run(u, t2).cut();
            s.run(u, o2 - t2).run(m, r).run(qq, s1).nodes(delta_q);
        } else {
            s.set_rule("4(d)(3)");
            s.nodes(beta_q).run(qq, s2).run(u, t2 - o2).cut();
            s.run(u, o1 - t2 + o2).nodes(lam_g).nodes(dg.mask).run(u, o2).run(m, r).run(qq, s1).nodes(delta_q);
        }
        s.nodes(dh.mask);
    } else {
        if (o2 == 0) {
            s.set_rule("4(d)(4)");
            s.run(u, t2).cut();
            s.run(u, t1).run(m, r1).nodes(lam_g).nodes(dg.mask).run(m, r2).nodes(beta_q).run(qq, s_q);
        } else if (o2 >= t2) {
            s.set_rule("4(d)(5)");
            s.run(u, o1).nodes(lam_g).nodes(dg.mask).run(u, t2).cut();
            s.run(u, o2 - t2).run(m, r).nodes(beta_q).run(qq, s_q);
        } else {
            s.set_rule("4(d)(6)");
            s.run(u, t2 - o2).cut();
            s.run(u, o1 - t2 + o2).nodes(lam_g).nodes(dg.mask).run(u, o2).run(m, r).nodes(beta_q).run(qq, s_q);
        }
        s.nodes(delta_q).nodes(dh.mask);
    }
    return s.finish();
}

std::optional<SylvStep> searched_step(RightStrictBst const& cur, TraversalPlan const& plan, std::size_t k) {
    std::set<std::string> seen;
    for (auto const& w : readings(cur.tree())) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            Word right(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
            Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            auto next = p_sylv(concat(right, left));
            if (!seen.insert(next.key()).second) continue;
            if (satisfies_path_conditions(next, plan, k)) return SylvStep{"search", std::move(left), std::move(right)};
        }
    }
    return std::nullopt;
}

}  // namespace

SylvPath sylv_path(RightStrictBst const& t, RightStrictBst const& u) {
    if (t.tree().labels_sorted() != u.tree().labels_sorted())
        throw std::invalid_argument("sylv_path: evaluations differ");
    SylvPath path;
    path.trees.push_back(t);
    if (t.empty()) return path;
    auto plan = traversal_plan(u);
    RightStrictBst cur = t;
    for (std::size_t k = 0; k < plan.size(); ++k) {
        SylvStep step;
        RightStrictBst next;
        std::string why;
        try {
            step = k == 0 ? case_one(cur, plan[0], nullptr, std::nullopt) : induction_step(cur, u, plan, k);
            if (p_sylv(concat(step.left, step.right)) != cur)
                throw step_error(step.rule, "factorisation " + to_string(step.left) + "|" + to_string(step.right) +
                                                " does not represent " + cur.key());
            next = p_sylv(concat(step.right, step.left));
            if (!satisfies_path_conditions(next, plan, k, &why)) throw step_error(step.rule, why);
        } catch (std::logic_error const& e) {
            // The published factorisations can leave a repeated u_{h+1} below p_{h+1}; look for
            // another single shift that restores P1-P4.
            auto found = searched_step(cur, plan, k);
            if (!found) throw;
            step = std::move(*found);
            step.rule = "search";
            next = p_sylv(concat(step.right, step.left));
        }
        if (next != cur) path.trees.push_back(next);
        path.steps.push_back(std::move(step));
        cur = std::move(next);
    }
    if (cur != u) throw std::logic_error("sylv_path: did not reach the target");
    return path;
}

}  // namespace plm
