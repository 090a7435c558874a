#include "plm/acceptance.hpp"

#include "plm/baxter.hpp"
#include "plm/hypoplactic.hpp"
#include "plm/monoid.hpp"
#include "plm/plactic.hpp"
#include "plm/rewrite.hpp"
#include "plm/shiftgraph.hpp"
#include "plm/stalactic.hpp"
#include "plm/sylvester.hpp"
#include "plm/taiga.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace plm {

namespace {

struct Tally {
    std::ostringstream notes;
    std::size_t failures = 0;

    void check(bool ok, std::string const& what) {
        if (ok) return;
        if (failures++ < 5) notes << " [" << what << "]";
    }
    CriterionResult result(int id, std::string summary) const {
        if (failures > 0) summary += "; " + std::to_string(failures) + " failure(s):" + notes.str();
        return {id, failures == 0, std::move(summary)};
    }
};

Word iota_word(std::size_t n) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<Letter>(i + 1);
    return w;
}

Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

std::string join(std::vector<std::size_t> const& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<std::string> const insertion_monoids{"plac", "hypo", "sylv", "stal", "taig", "baxt"};

CriterionResult criterion1() {
    auto c = cochseq(parse_word("1246375"));
    CochargeSeq want{{0, 0, 0, 1, 1, 2, 2}};
    return {1, c == want, "cochseq(1246375) = " + to_string(c)};
}

CriterionResult criterion2() {
    Tally t;
    std::size_t classes = 0, words = 0;
    for (auto const& name : insertion_monoids) {
        auto const& ins = monoid(name);
        auto const& ora = oracle_monoid(name);
        for (auto const& e : evaluations_up_to(4, 6)) {
            auto a = ins.partition(e);
            auto b = ora.partition(e);
            std::set<std::vector<Word>> pa, pb;
            for (auto const& [k, m] : *a) pa.insert(m);
            for (auto const& [k, m] : *b) pb.insert(m);
            classes += pa.size();
            if (name == "plac") words += multinomial(e);
            t.check(pa == pb, name + " " + to_string(e));
        }
    }
    return t.result(2, "P-symbol classes equal presentation closures for 6 monoids, " + std::to_string(words) +
                           " words of length <= 6 over 4 symbols, " + std::to_string(classes) + " classes");
}

CriterionResult criterion3() {
    Tally t;
    std::ostringstream os;
    auto expect = [&](std::string const& m, std::string const& w, std::size_t v, std::size_t d) {
        auto g = component(monoid(m), parse_word(w));
        auto diam = g.diameter();
        os << m << "(" << w << "): " << g.size() << " vertices, diameter " << diam << "; ";
        t.check(g.size() == v && diam == d, m + " " + w);
        return g;
    };
    expect("plac", "12345", 26, 4);
    // The figure's vertices are the standard elements of rank 5, i.e. the component of P(12345).
    expect("hypo", "12345", 16, 4);
    {
        auto g = component(monoid("hypo"), parse_word("123445"));
        os << "[hypo(123445) as captioned: " << g.size() << " vertices, diameter " << g.diameter() << "]; ";
    }
    expect("sylv", "1234", 14, 3);
    auto g = expect("stal", "1233", 6, 3);
    std::set<std::pair<std::string, std::string>> want;
    auto const& stal = monoid("stal");
    for (auto [a, b] : std::vector<std::pair<char const*, char const*>>{{"1233", "1332"},
                                                                          {"1233", "2331"},
                                                                          {"1233", "2133"},
                                                                          {"1233", "3312"},
                                                                          {"1332", "2331"},
                                                                          {"1332", "2133"},
                                                                          {"1332", "3321"},
                                                                          {"3312", "2331"},
                                                                          {"2331", "2133"},
                                                                          {"3321", "2133"}}) {
        auto ka = stal.key(parse_word(a)), kb = stal.key(parse_word(b));
        want.insert(std::minmax(ka, kb));
    }
    std::set<std::pair<std::string, std::string>> got;
    for (std::size_t v = 0; v < g.size(); ++v)
        for (auto y : g.adjacency[v]) got.insert(std::minmax(g.keys[v], g.keys[y]));
    os << "stal edges " << got.size() << " (drawn edge list: " << want.size() << ", matches: " << (got == want ? "yes" : "no")
       << ")";
    t.check(got == want, "stal edge set differs from the drawn figure");
    return t.result(3, os.str());
}

CriterionResult criterion4() {
    Tally t;
    std::ostringstream os;
    std::size_t const max_total = 7;
    std::map<std::string, std::vector<std::size_t>> diam;
    std::map<std::string, std::string> yn;
    for (auto const& name : insertion_monoids) {
        for (std::size_t n = 1; n <= 5; ++n) {
            auto r = diameter_scan(monoid(name), n, max_total);
            diam[name].push_back(r.max_diameter());
            yn[name] += r.all_connected() ? 'Y' : 'N';
        }
    }
    for (std::size_t n = 2; n <= 5; ++n) {
        auto d = [&](char const* m) { return diam[m][n - 1]; };
        t.check(d("hypo") == n - 1, "hypo_" + std::to_string(n));
        t.check(d("sylv") == n - 1 || d("sylv") == n, "sylv_" + std::to_string(n));
        t.check(d("taig") == n - 1 || d("taig") == n, "taig_" + std::to_string(n));
        t.check(d("plac") <= 2 * n - 3 && d("plac") == n - 1, "plac_" + std::to_string(n));
    }
    t.check(diam["stal"] == std::vector<std::size_t>{0, 1, 3, 3, 3}, "stal diameters");
    for (auto m : {"plac", "hypo", "sylv", "taig"}) t.check(yn[m] == "YYYYY", std::string(m) + " connectivity");
    t.check(yn["stal"] == "YYNNN", "stal connectivity");
    t.check(yn["baxt"].substr(2) == "NNN", "baxt connectivity");
    os << "totals <= " << max_total << ", max diameter for n=1..5:";
    for (auto const& name : insertion_monoids) os << " " << name << "=" << join(diam[name]);
    os << "; each evaluation connected (n=1..5):";
    for (auto const& name : insertion_monoids) os << " " << name << "=" << yn[name];
    return t.result(4, os.str());
}

// Confirms with the presentation closures that left·right represents `from` and right·left
// represents `to`.
bool oracle_adjacent(PresentedMonoid const& m, Word const& from, Word const& to, Word const& left, Word const& right) {
    return close(m, concat(left, right))->contains(from) && close(m, concat(right, left))->contains(to);
}

template <class Tree>
std::map<std::string, Tree> elements(Evaluation const& e, std::function<Tree(Word const&)> const& p) {
    std::map<std::string, Tree> out;
    for (auto const& w : EvaluationWords(e)) {
        auto t = p(w);
        out.emplace(t.key(), std::move(t));
    }
    return out;
}

CriterionResult criterion5() {
    Tally t;
    std::map<std::string, std::size_t> pairs, longest;
    auto const& ohypo = presentation("hypo");
    auto const& osylv = presentation("sylv");
    auto const& otaig = presentation("taig");
    auto const& ostal = presentation("stal");
    std::size_t searched = 0;

    for (std::size_t n = 1; n <= 5; ++n) {
        auto e = evaluation(iota_word(n));
        auto hs = elements<QuasiRibbonTableau>(e, p_hypo);
        for (auto const& [ka, a] : hs) {
            for (auto const& [kb, b] : hs) {
                auto path = hypo_path(a, b);
                ++pairs["hypo"];
                longest["hypo"] = std::max(longest["hypo"], path.tableaux.size() - 1);
                t.check(path.tableaux.size() - 1 <= n - 1 && path.tableaux.back() == b, "hypo " + ka + " -> " + kb);
                std::size_t j = 0;
                for (auto const& s : path.steps) {
                    if (s.left.empty() && s.right.empty()) continue;
                    ++j;
                    t.check(j < path.tableaux.size() &&
                                oracle_adjacent(ohypo, path.tableaux[j - 1].col_reading(), path.tableaux[j].col_reading(),
                                                s.left, s.right),
                            "hypo step");
                }
                t.check(j + 1 == path.tableaux.size(), "hypo step count");
            }
        }
        auto ss = elements<RightStrictBst>(e, p_sylv);
        for (auto const& [ka, a] : ss) {
            for (auto const& [kb, b] : ss) {
                auto path = sylv_path(a, b);
                ++pairs["sylv"];
                longest["sylv"] = std::max(longest["sylv"], path.trees.size() - 1);
                t.check(path.trees.size() - 1 <= n && path.trees.back() == b, "sylv " + ka + " -> " + kb);
                std::size_t j = 0;
                for (auto const& s : path.steps) {
                    if (s.rule == "search") ++searched;
                    auto from = path.trees[j].postfix_reading();
                    auto next = p_sylv(concat(s.right, s.left));
                    if (next != path.trees[j]) ++j;
                    t.check(j < path.trees.size() && next == path.trees[j], "sylv step sequence");
                    t.check(oracle_adjacent(osylv, from, path.trees[j].postfix_reading(), s.left, s.right), "sylv step");
                }
            }
        }
    }

    for (auto const& e : evaluations_up_to(6, 6)) {
        if (e.total() == 0) continue;
        std::size_t n = e.support();
        auto ts = elements<MultiplicityBst>(e, p_taig);
        for (auto const& [ka, a] : ts) {
            for (auto const& [kb, b] : ts) {
                auto path = taig_path(a, b);
                ++pairs["taig"];
                longest["taig"] = std::max(longest["taig"], path.trees.size() - 1);
                t.check(path.trees.size() - 1 <= n && path.trees.back() == b, "taig " + ka + " -> " + kb);
                std::size_t j = 0;
                for (auto const& s : path.steps) {
                    auto from = path.trees[j].tree().postfix_reading();
                    if (p_taig(concat(s.right, s.left)) != path.trees[j]) ++j;
                    t.check(j < path.trees.size() &&
                                oracle_adjacent(otaig, from, path.trees[j].tree().postfix_reading(), s.left, s.right),
                            "taig step");
                }
            }
        }
        auto st = elements<StalacticTableau>(e, p_stal);
        for (auto const& [ka, a] : st) {
            for (auto const& [kb, b] : st) {
                if (kappa(a, e.rank()) != kappa(b, e.rank())) continue;
                auto path = stal_path(a, b);
                ++pairs["stal"];
                longest["stal"] = std::max(longest["stal"], path.steps.size());
                t.check(path.steps.size() <= 3 && path.tableaux.back() == b, "stal " + ka + " -> " + kb);
                for (std::size_t i = 0; i < path.steps.size(); ++i) {
                    auto const& s = path.steps[i];
                    t.check(oracle_adjacent(ostal, path.tableaux[i].reading(), path.tableaux[i + 1].reading(), s.left,
                                            s.right),
                            "stal step");
                }
            }
        }
    }
    std::ostringstream os;
    os << "pairs checked:";
    for (auto m : {"hypo", "sylv", "taig", "stal"}) os << " " << m << "=" << pairs[m] << " (longest " << longest[m] << ")";
    os << "; every step confirmed by the presentation closures; P1-P4 asserted after every sylv step";
    if (searched > 0) os << "; " << searched << " searched sylv steps";
    return t.result(5, os.str());
}

CriterionResult criterion6() {
    Tally t;
    std::ostringstream os;
    for (std::size_t n = 3; n <= 5; ++n) {
        auto row = iota_word(n), col = reversed(iota_word(n));
        os << "n=" << n << ":";
        for (auto m : {"plac", "hypo", "sylv"}) {
            auto const& h = monoid(m);
            Word a = row, b = col;
            if (std::string(m) == "sylv") {
                // left chain and right chain
                a = p_sylv(row).postfix_reading();
                b = p_sylv(col).postfix_reading();
            }
            auto g = component(h, a);
            auto d = g.distance(h.key(a), h.key(b));
            auto ca = cochseq(a), cb = cochseq(b);
            bool invariant = true;
            for (auto const& w : h.class_of(a)) invariant = invariant && cochseq(w) == ca;
            for (auto const& w : h.class_of(b)) invariant = invariant && cochseq(w) == cb;
            std::size_t gap = 0;
            for (std::size_t i = 0; i < n; ++i) {
                auto x = ca.labels[i], y = cb.labels[i];
                gap = std::max<std::size_t>(gap, x > y ? x - y : y - x);
            }
            os << " " << m << " bfs=" << d << " cochseq-gap=" << gap;
            t.check(d >= n - 1 && gap == n - 1 && invariant, std::string(m) + " n=" + std::to_string(n));
        }
        os << ";";
    }
    return t.result(6, os.str());
}

CriterionResult criterion7() {
    Tally t;
    auto r = baxt_readings(p_baxt(parse_word("2431")));
    t.check(r == std::vector<Word>{parse_word("2431")}, "readings(P_baxt(2431))");
    std::ostringstream os;
    os << "readings(P_baxt(2431)) = {";
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << to_string(r[i]);
    os << "}";
    auto vertex_words = [](ShiftGraph const& g) {
        std::set<Word> s;
        for (auto const& w : g.representatives) s.insert(w);
        return s;
    };
    for (auto [w, members, outside] : std::vector<std::tuple<char const*, std::vector<char const*>, char const*>>{
             {"123", {"123", "231", "312"}, "132"}, {"1243", {"1243", "2431", "4312", "3124"}, "1234"}}) {
        auto const& b = monoid("baxt");
        auto g = component(b, parse_word(w));
        auto go = component(oracle_monoid("baxt"), parse_word(w));
        std::set<Word> want;
        for (auto m : members) want.insert(parse_word(m));
        bool singleton = true;
        for (auto const& v : g.representatives) singleton = singleton && b.class_of(v).size() == 1;
        t.check(vertex_words(g) == want && vertex_words(go) == want && singleton, std::string("component of ") + w);
        t.check(!g.find(b.key(parse_word(outside))), std::string(outside) + " inside component");
        os << "; component(" << w << ") = {";
        bool first = true;
        for (auto const& v : vertex_words(g)) {
            os << (first ? "" : ",") << to_string(v);
            first = false;
        }
        os << "} excludes " << outside;
    }
    return t.result(7, os.str());
}

CriterionResult criterion8() {
    namespace ce = counterexample;
    Tally t;
    std::ostringstream os;
    auto const& pres = presentation("counterexample");
    auto const& m = oracle_monoid("counterexample");
    for (std::size_t alpha = 2; alpha <= 4; ++alpha) {
        std::string u = "a", v = "b";
        for (std::size_t i = 0; i < alpha; ++i) u += "xy", v += "yx";
        u += "b", v += "a";
        auto wu = ce::from_letters(u), wv = ce::from_letters(v);
        auto g = component(m, wu);
        auto k = g.find(m.key(wv));
        t.check(k.has_value(), "alpha=" + std::to_string(alpha) + " disconnected");
        if (!k) continue;
        auto d = g.distance(m.key(wu), m.key(wv));
        os << "alpha=" << alpha << " distance " << d << " (component " << g.size() << "); ";
        t.check(d + 1 >= alpha, "alpha=" + std::to_string(alpha));
    }
    // Every word of L up to length 10: a, b and up to four factors xy/yx.
    std::set<Word> language;
    for (std::size_t f = 0; f <= 4; ++f) {
        for (std::size_t mask = 0; mask < (1u << f); ++mask) {
            for (std::size_t ia = 0; ia < f + 2; ++ia) {
                for (std::size_t ib = 0; ib < f + 2; ++ib) {
                    if (ia == ib) continue;
                    std::string s;
                    std::size_t next = 0;
                    for (std::size_t slot = 0; slot < f + 2; ++slot) {
                        if (slot == ia) s += 'a';
                        else if (slot == ib) s += 'b';
                        else s += (mask >> next++) & 1 ? "yx" : "xy";
                    }
                    language.insert(ce::from_letters(s));
                }
            }
        }
    }
    std::size_t edges = 0;
    for (auto const& w : language) {
        auto mu = ce::mu(w);
        for (auto const& x : close(pres, w)->members) t.check(ce::in_language(x) && ce::mu(x) == mu, "mu on class of " + ce::to_letters(w));
        for (auto const& c : word_neighbors(pres, w)) {
            auto const& r = c->canonical();
            if (!ce::in_language(r)) continue;
            ++edges;
            auto mr = ce::mu(r);
            t.check((mr > mu ? mr - mu : mu - mr) <= 1, "mu jump " + ce::to_letters(w) + " ~ " + ce::to_letters(r));
        }
    }
    os << "mu constant on the classes of " << language.size() << " words of L, |mu difference| <= 1 on " << edges
       << " class-to-class edges within L";
    return t.result(8, os.str());
}

CriterionResult criterion9() {
    Tally t;
    std::size_t stal_pairs = 0, baxt_pairs = 0;
    for (auto const& e : evaluations_up_to(6, 6)) {
        auto els = elements<StalacticTableau>(e, p_stal);
        for (auto const& [ka, a] : els) {
            for (auto const& [kb, b] : els) {
                auto u = a.reading(), v = b.reading();
                auto [g, h] = stal_oconj_witness(u, v);
                ++stal_pairs;
                t.check(p_stal(concat(g, u)) == p_stal(concat(v, g)) && p_stal(concat(u, h)) == p_stal(concat(h, v)),
                        "stal " + to_string(u) + " " + to_string(v));
            }
        }
    }
    for (auto const& e : evaluations_up_to(4, 4)) {
        auto ws = words_with_evaluation(e);
        for (auto const& p : ws) {
            for (auto const& q : ws) {
                auto [g, h] = baxt_oconj_witness(p, q);
                ++baxt_pairs;
                t.check(p_baxt(concat(p, g)) == p_baxt(concat(g, q)) && p_baxt(concat(h, p)) == p_baxt(concat(q, h)),
                        "baxt " + to_string(p) + " " + to_string(q));
            }
        }
    }
    return t.result(9, "o-conjugacy witnesses verified: stal " + std::to_string(stal_pairs) +
                           " element pairs of total <= 6, baxt " + std::to_string(baxt_pairs) +
                           " word pairs of length <= 4");
}

CriterionResult criterion10() {
    Tally t;
    std::mt19937_64 rng(20240607);
    std::size_t const samples = 10000;
    auto random_word = [&](std::size_t rank) {
        std::uniform_int_distribution<std::size_t> len(0, 10);
        std::uniform_int_distribution<Letter> sym(1, static_cast<Letter>(rank));
        Word w(len(rng));
        for (auto& a : w) a = sym(rng);
        return w;
    };
    for (std::size_t i = 0; i < samples; ++i) {
        auto w = random_word(1 + i % 6);
        auto ev = evaluation(w, 6);
        auto y = p_plac(w);
        t.check(YoungTableau::valid(y.rows()) && p_plac(y.reading()) == y && evaluation(y.reading(), 6) == ev, "plac " + to_string(w));
        auto h = p_hypo(w);
        t.check(QuasiRibbonTableau::valid(h.rows()) && p_hypo(h.col_reading()) == h && evaluation(h.col_reading(), 6) == ev,
                "hypo " + to_string(w));
        auto s = p_sylv(w);
        t.check(RightStrictBst::valid(s.tree()) && satisfies_structure_lemmas(s) && p_sylv(s.postfix_reading()) == s &&
                    s.evaluation(6) == ev,
                "sylv " + to_string(w));
        auto st = p_stal(w);
        std::set<Letter> cols;
        std::size_t cells = 0;
        for (auto const& c : st.columns()) {
            cols.insert(c.symbol);
            cells += c.height;
            t.check(c.height == ev[c.symbol], "stal column height");
        }
        t.check(cols.size() == st.columns().size() && cells == w.size() && p_stal(st.reading()) == st, "stal " + to_string(w));
        auto ta = p_taig(w);
        t.check(MultiplicityBst::valid(ta.tree()) && p_taig(ta.tree().postfix_reading()) == ta &&
                    ta.tree().evaluation(6) == ev,
                "taig " + to_string(w));
        auto b = p_baxt(w);
        bool twin = b.valid();
        if (!w.empty()) twin = twin && LeftStrictBst::valid(b.left.tree()) && RightStrictBst::valid(b.right.tree());
        if (w.size() >= 2) {
            auto cl = b.left.tree().canopy(), cr = b.right.canopy();
            bool complementary = cl.size() == cr.size();
            for (std::size_t j = 0; complementary && j < cl.size(); ++j) complementary = cl[j] != cr[j];
            twin = twin && complementary;
        }
        t.check(twin, "baxt " + to_string(w));
        for (auto const& name : presentation_keys()) {
            if (name == "counterexample") continue;
            for (auto const& r : presentation(name).rewrites(w))
                t.check(evaluation(r, 6) == ev, name + " rewrite of " + to_string(w));
        }
    }
    return t.result(10, std::to_string(samples) + " random words of length <= 10 per monoid: tableau shapes, BST orderings, "
                                                  "twin canopies, reading round trips, rewrite evaluations");
}

std::vector<std::function<CriterionResult()>> const table{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                          criterion6, criterion7, criterion8, criterion9, criterion10};

}  // namespace

int criterion_count() { return static_cast<int>(table.size()); }

CriterionResult run_criterion(int id) {
    if (id < 1 || id > criterion_count()) throw std::invalid_argument("no criterion " + std::to_string(id));
    try {
        return table[static_cast<std::size_t>(id - 1)]();
    } catch (std::exception const& e) {
        return {id, false, std::string("exception: ") + e.what()};
    }
}

bool run_acceptance(std::ostream& os, std::vector<int> const& only) {
    bool all = true;
    for (int id = 1; id <= criterion_count(); ++id) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        auto start = std::chrono::steady_clock::now();
        auto r = run_criterion(id);
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && r.pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (r.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << r.summary << " (" << secs << "s)";
        os << line.str() << std::endl;
    }
    return all;
}

}  // namespace plm
