#include "plm/acceptance.hpp"
#include "plm/hypoplactic.hpp"
#include "plm/limits.hpp"
#include "plm/monoid.hpp"
#include "plm/rewrite.hpp"
#include "plm/shiftgraph.hpp"
#include "plm/stalactic.hpp"
#include "plm/sylvester.hpp"
#include "plm/taiga.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace plm;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string monoid = "plac";
    std::size_t rank = 0;
    std::string word, word1, word2, evaluation;
    std::size_t max_total = 0;
    std::size_t max_class = 0;
    std::string format = "text";
    std::string out;
    bool oracle = false;
    std::vector<int> criteria;
};

MonoidHandle const& handle(RunConfig const& c) { return c.oracle ? oracle_monoid(c.monoid) : monoid(c.monoid); }

Word read_word(RunConfig const& c, std::string const& text, char const* flag) {
    Word w;
    bool letters = !text.empty() && text.find_first_not_of("abxy") == std::string::npos;
    try {
        w = c.monoid == "counterexample" && letters ? counterexample::from_letters(text) : parse_word(text);
    } catch (std::exception const& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
    if (c.rank > 0 && max_letter(w) > c.rank)
        throw UsageError(std::string(flag) + ": symbol " + std::to_string(max_letter(w)) + " exceeds --rank " +
                         std::to_string(c.rank));
    return w;
}

Word required_word(RunConfig const& c) {
    if (c.word.empty() && c.evaluation.empty()) throw UsageError("--word is required");
    return read_word(c, c.word, "--word");
}

Evaluation read_evaluation(RunConfig const& c) {
    try {
        auto e = parse_evaluation(c.evaluation);
        if (c.rank > e.rank()) {
            auto counts = e.counts();
            counts.resize(c.rank, 0);
            e = Evaluation(counts);
        }
        return e;
    } catch (std::exception const& ex) {
        throw UsageError(std::string("--evaluation: ") + ex.what());
    }
}

std::string show(RunConfig const& c, Word const& w) {
    return c.monoid == "counterexample" ? counterexample::to_letters(w) : to_string(w);
}

void require_format(RunConfig const& c, std::initializer_list<char const*> allowed) {
    for (auto f : allowed)
        if (c.format == f) return;
    throw UsageError("--format " + c.format + " is not available for this command");
}

std::string cmd_psymbol(RunConfig const& c) {
    require_format(c, {"text", "json"});
    auto const& m = handle(c);
    auto w = c.word.empty() ? Word{} : read_word(c, c.word, "--word");
    if (c.format == "json") {
        json j{{"monoid", c.monoid}, {"word", show(c, w)}, {"key", m.key(w)}, {"drawing", m.draw(w)}};
        return j.dump(2) + "\n";
    }
    return "key: " + m.key(w) + "\n" + m.draw(w);
}

ShiftGraph graph_for(RunConfig const& c) {
    if (!c.evaluation.empty()) return evaluation_graph(handle(c), read_evaluation(c));
    return component(handle(c), required_word(c), c.rank);
}

std::string graph_text(RunConfig const& c, ShiftGraph const& g) {
    std::ostringstream os;
    auto comps = g.components();
    os << "monoid " << g.monoid << ", evaluation " << to_string(g.evaluation) << "\n";
    os << "vertices " << g.size() << ", edges " << g.edge_count() << ", components " << comps.size();
    if (comps.size() == 1) os << ", diameter " << g.diameter();
    os << "\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        os << v << "  " << g.keys[v] << "  [" << show(c, g.representatives[v]) << "]  ->";
        for (auto y : g.adjacency[v]) os << " " << y;
        os << "\n";
    }
    return os.str();
}

std::string cmd_component(RunConfig const& c) {
    require_format(c, {"text", "dot", "json"});
    auto g = graph_for(c);
    if (c.format == "dot") return g.to_dot();
    if (c.format == "json") return g.to_json() + "\n";
    return graph_text(c, g);
}

std::string cmd_diameter(RunConfig const& c) {
    require_format(c, {"text", "json"});
    auto g = graph_for(c);
    std::size_t d = 0;
    auto comps = g.components();
    for (auto const& comp : comps) d = std::max(d, g.induced(comp).diameter());
    if (c.format == "json") {
        json j{{"monoid", c.monoid}, {"evaluation", g.evaluation.counts()}, {"vertices", g.size()},
               {"components", comps.size()}, {"diameter", d}};
        return j.dump(2) + "\n";
    }
    return std::to_string(d) + "\n";
}

struct Constructed {
    std::vector<std::string> keys;
    std::vector<std::string> steps;
};

std::optional<Constructed> constructive_path(RunConfig const& c, Word const& a, Word const& b) {
    auto word_pair = [&](Word const& l, Word const& r) { return show(c, l) + " | " + show(c, r); };
    Constructed out;
    if (c.monoid == "hypo") {
        auto p = hypo_path(p_hypo(a), p_hypo(b));
        for (auto const& t : p.tableaux) out.keys.push_back(t.key());
        for (auto const& s : p.steps)
            if (!s.left.empty() || !s.right.empty()) out.steps.push_back(std::string(to_string(s.kind)) + ": " + word_pair(s.left, s.right));
    } else if (c.monoid == "sylv") {
        auto p = sylv_path(p_sylv(a), p_sylv(b));
        for (auto const& t : p.trees) out.keys.push_back(t.key());
        RightStrictBst prev = p.trees.front();
        for (auto const& s : p.steps) {
            auto next = p_sylv(concat(s.right, s.left));
            if (next == prev) continue;
            out.steps.push_back(s.rule + ": " + word_pair(s.left, s.right));
            prev = next;
        }
    } else if (c.monoid == "taig") {
        auto p = taig_path(p_taig(a), p_taig(b));
        for (auto const& t : p.trees) out.keys.push_back(t.key());
        MultiplicityBst prev = p.trees.front();
        for (auto const& s : p.steps) {
            auto next = p_taig(concat(s.right, s.left));
            if (next == prev) continue;
            out.steps.push_back(s.rule + ": " + word_pair(s.left, s.right));
            prev = next;
        }
    } else if (c.monoid == "stal") {
        auto t = p_stal(a), u = p_stal(b);
        auto rank = std::max(max_letter(a), max_letter(b));
        if (kappa(t, rank) != kappa(u, rank)) return std::nullopt;
        auto p = stal_path(t, u);
        for (auto const& x : p.tableaux) out.keys.push_back(x.key());
        for (auto const& s : p.steps) out.steps.push_back(word_pair(s.left, s.right));
    } else {
        return std::nullopt;
    }
    return out;
}

std::string cmd_path(RunConfig const& c) {
    require_format(c, {"text", "json"});
    if (c.word1.empty() || c.word2.empty()) throw UsageError("--word1 and --word2 are required");
    auto a = read_word(c, c.word1, "--word1"), b = read_word(c, c.word2, "--word2");
    if (trim(evaluation(a)) != trim(evaluation(b))) throw UsageError("--word1 and --word2 have different evaluations");
    auto const& m = handle(c);
    auto built = constructive_path(c, a, b);
    auto g = component(m, a, c.rank);
    std::optional<std::vector<std::size_t>> bfs;
    if (g.find(m.key(b))) bfs = g.shortest_path(m.key(a), m.key(b));

    if (c.format == "json") {
        json j{{"monoid", c.monoid}, {"word1", show(c, a)}, {"word2", show(c, b)}};
        if (built) j["constructive"] = {{"length", built->keys.size() - 1}, {"elements", built->keys}, {"steps", built->steps}};
        else j["constructive"] = nullptr;
        if (bfs) {
            std::vector<std::string> keys;
            for (auto v : *bfs) keys.push_back(g.keys[v]);
            j["bfs"] = {{"length", bfs->size() - 1}, {"elements", keys}};
        } else {
            j["bfs"] = nullptr;
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (built) {
        os << "constructive path, length " << built->keys.size() - 1 << "\n";
        for (std::size_t i = 0; i < built->keys.size(); ++i) {
            os << "  " << built->keys[i] << "\n";
            if (i < built->steps.size()) os << "    ~ " << built->steps[i] << "\n";
        }
    } else {
        os << "constructive path: not available for " << c.monoid
           << (c.monoid == "stal" ? " (kappa differs, so the elements are not connected)" : "") << "\n";
    }
    if (bfs) {
        os << "BFS shortest path, length " << bfs->size() - 1 << "\n";
        for (auto v : *bfs) os << "  " << g.keys[v] << "  [" << show(c, g.representatives[v]) << "]\n";
    } else {
        os << "BFS: not connected (component has " << g.size() << " vertices)\n";
    }
    return os.str();
}

std::string cmd_scan(RunConfig const& c) {
    require_format(c, {"text", "json"});
    if (c.rank == 0) throw UsageError("--rank is required");
    if (c.max_total == 0) throw UsageError("--max-total is required");
    auto r = diameter_scan(handle(c), c.rank, c.max_total);
    if (c.format == "json") {
        json rows = json::array();
        for (auto const& row : r.rows)
            rows.push_back({{"evaluation", row.evaluation.counts()}, {"elements", row.elements},
                            {"components", row.components}, {"max_diameter", row.max_diameter}});
        json j{{"monoid", r.monoid}, {"rank", r.rank}, {"max_total", r.max_total}, {"rows", rows},
               {"max_diameter", r.max_diameter()}, {"all_connected", r.all_connected()}};
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "evaluation  elements  components  max-diameter\n";
    for (auto const& row : r.rows) {
        os << to_string(row.evaluation) << "  " << row.elements << "  " << row.components << "  " << row.max_diameter
           << "\n";
    }
    os << c.monoid << "_" << c.rank << ", totals <= " << c.max_total << ": max diameter " << r.max_diameter()
       << ", every evaluation connected: " << (r.all_connected() ? "Y" : "N") << "\n";
    return os.str();
}

void emit(RunConfig const& c, std::string const& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + c.out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic shift graphs of plactic-like monoids"};
    app.require_subcommand(1);
    RunConfig c;
    std::string monoid_help = "plac, hypo, sylv, stal, taig, baxt or counterexample";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--monoid", c.monoid, monoid_help)->check(CLI::IsMember(monoid_keys()));
        sub->add_option("--rank", c.rank, "alphabet size");
        sub->add_option("--max-total", c.max_total, "largest evaluation total to enumerate");
        sub->add_option("--max-class", c.max_class, "largest class or component to explore");
        sub->add_option("--out", c.out, "write output to this file");
        sub->add_flag("--oracle", c.oracle, "use the presentation closure instead of insertion");
    };
    auto format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(allowed));
    };

    auto* psymbol = app.add_subcommand("psymbol", "print the P-symbol of a word");
    common(psymbol);
    format(psymbol, {"text", "json"});
    psymbol->add_option("--word", c.word, "digits, or comma separated symbols");

    auto* comp = app.add_subcommand("component", "connected component of a word, or every element of an evaluation");
    common(comp);
    format(comp, {"text", "dot", "json"});
    comp->add_option("--word", c.word);
    comp->add_option("--evaluation", c.evaluation, "comma separated counts");

    auto* diam = app.add_subcommand("diameter", "diameter of the component of a word (largest over an evaluation)");
    common(diam);
    format(diam, {"text", "json"});
    diam->add_option("--word", c.word);
    diam->add_option("--evaluation", c.evaluation);

    auto* path = app.add_subcommand("path", "constructive and shortest paths between two elements");
    common(path);
    format(path, {"text", "json"});
    path->add_option("--word1", c.word1)->required();
    path->add_option("--word2", c.word2)->required();

    auto* scan = app.add_subcommand("scan", "component counts and diameters for every evaluation up to a total");
    common(scan);
    format(scan, {"text", "json"});

    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--criterion", c.criteria, "only these criteria (1-10)");
    verify->add_option("--out", c.out, "write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto lim = limits();
        if (c.max_total) lim.max_total = c.max_total;
        if (c.max_class) lim.max_class = c.max_class;
        set_limits(lim);

        if (verify->parsed()) {
            std::ostringstream os;
            bool ok = run_acceptance(c.out.empty() ? std::cout : os, c.criteria);
            if (!c.out.empty()) emit(c, os.str());
            return ok ? 0 : 1;
        }
        std::string text;
        if (psymbol->parsed()) text = cmd_psymbol(c);
        else if (comp->parsed()) text = cmd_component(c);
        else if (diam->parsed()) text = cmd_diameter(c);
        else if (path->parsed()) text = cmd_path(c);
        else if (scan->parsed()) text = cmd_scan(c);
        emit(c, text);
        return 0;
    } catch (UsageError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (LimitExceeded const& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 2;
    } catch (std::invalid_argument const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (std::exception const& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
