#include "plm/shiftgraph.hpp"

#include "plm/limits.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace plm {

std::size_t ShiftGraph::edge_count() const {
    std::size_t n = 0;
    for (auto const& a : adjacency) n += a.size();
    return n / 2;
}

std::optional<std::size_t> ShiftGraph::find(std::string const& key) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - keys.begin());
}

std::vector<std::size_t> ShiftGraph::distances_from(std::size_t v) const {
    std::vector<std::size_t> dist(size(), unreachable);
    std::deque<std::size_t> queue{v};
    dist.at(v) = 0;
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (auto y : adjacency[x]) {
            if (dist[y] != unreachable) continue;
            dist[y] = dist[x] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

std::size_t ShiftGraph::distance(std::string const& a, std::string const& b) const {
    auto ia = find(a), ib = find(b);
    if (!ia || !ib) throw std::invalid_argument("distance: vertex not in graph");
    auto d = distances_from(*ia)[*ib];
    if (d == unreachable) throw std::invalid_argument("distance: vertices are not connected");
    return d;
}

std::vector<std::size_t> ShiftGraph::shortest_path(std::string const& a, std::string const& b) const {
    auto ia = find(a), ib = find(b);
    if (!ia || !ib) throw std::invalid_argument("shortest_path: vertex not in graph");
    // Walk back from b along decreasing distance from a.
    auto dist = distances_from(*ia);
    if (dist[*ib] == unreachable) throw std::invalid_argument("shortest_path: vertices are not connected");
    std::vector<std::size_t> path{*ib};
    while (path.back() != *ia) {
        auto x = path.back();
        for (auto y : adjacency[x]) {
            if (dist[y] + 1 == dist[x]) {
                path.push_back(y);
                break;
            }
        }
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::size_t ShiftGraph::diameter() const {
    std::size_t best = 0;
    for (std::size_t v = 0; v < size(); ++v) {
        for (auto d : distances_from(v)) {
            if (d == unreachable) throw std::invalid_argument("diameter: graph is disconnected");
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<std::vector<std::size_t>> ShiftGraph::components() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<char> seen(size(), 0);
    for (std::size_t v = 0; v < size(); ++v) {
        if (seen[v]) continue;
        auto dist = distances_from(v);
        std::vector<std::size_t> comp;
        for (std::size_t x = 0; x < size(); ++x) {
            if (dist[x] == unreachable) continue;
            comp.push_back(x);
            seen[x] = 1;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

ShiftGraph ShiftGraph::induced(std::vector<std::size_t> const& vertices) const {
    auto vs = vertices;
    std::sort(vs.begin(), vs.end());
    std::vector<std::size_t> index(size(), unreachable);
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = i;
    ShiftGraph g{monoid, rank, evaluation, {}, {}, {}};
    for (auto v : vs) {
        g.keys.push_back(keys[v]);
        g.representatives.push_back(representatives[v]);
        std::vector<std::size_t> adj;
        for (auto y : adjacency[v])
            if (index[y] != unreachable) adj.push_back(index[y]);
        g.adjacency.push_back(std::move(adj));
    }
    return g;
}

namespace {

std::string dot_escape(std::string const& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// Turns key-indexed edges into the sorted-vertex representation.
ShiftGraph assemble(MonoidHandle const& m, std::size_t rank, Evaluation const& e,
                    std::map<std::string, Word> const& reps, std::map<std::string, std::set<std::string>> const& edges) {
    ShiftGraph g;
    g.monoid = m.name();
    g.rank = rank;
    g.evaluation = e;
    for (auto const& [k, w] : reps) {
        g.keys.push_back(k);
        g.representatives.push_back(w);
    }
    g.adjacency.resize(g.keys.size());
    for (std::size_t i = 0; i < g.keys.size(); ++i) {
        auto it = edges.find(g.keys[i]);
        if (it == edges.end()) continue;
        for (auto const& k : it->second) {
            if (k == g.keys[i]) continue;
            g.adjacency[i].push_back(*g.find(k));
        }
        std::sort(g.adjacency[i].begin(), g.adjacency[i].end());
    }
    return g;
}

Evaluation padded(Evaluation const& e, std::size_t rank) {
    auto c = e.counts();
    if (c.size() < rank) c.resize(rank, 0);
    return Evaluation(std::move(c));
}

}  // namespace

std::string ShiftGraph::to_dot() const {
    std::ostringstream os;
    os << "graph shift {\n";
    os << "  label=\"" << dot_escape(monoid) << " " << to_string(evaluation) << "\";\n";
    for (std::size_t v = 0; v < size(); ++v)
        os << "  v" << v << " [label=\"" << dot_escape(keys[v]) << "\"];\n";
    for (std::size_t v = 0; v < size(); ++v)
        for (auto y : adjacency[v])
            if (v < y) os << "  v" << v << " -- v" << y << ";\n";
    os << "}\n";
    return os.str();
}

std::string ShiftGraph::to_json() const {
    nlohmann::json j;
    j["monoid"] = monoid;
    j["rank"] = rank;
    j["evaluation"] = evaluation.counts();
    j["vertices"] = nlohmann::json::array();
    for (std::size_t v = 0; v < size(); ++v) {
        j["vertices"].push_back({{"key", keys[v]}, {"representative", to_string(representatives[v])}});
    }
    j["adjacency"] = adjacency;
    j["edges"] = edge_count();
    return j.dump(2);
}

ShiftGraph ShiftGraph::from_json(std::string const& text) {
    auto j = nlohmann::json::parse(text);
    ShiftGraph g;
    g.monoid = j.at("monoid").get<std::string>();
    g.rank = j.at("rank").get<std::size_t>();
    g.evaluation = Evaluation(j.at("evaluation").get<std::vector<std::size_t>>());
    for (auto const& v : j.at("vertices")) {
        g.keys.push_back(v.at("key").get<std::string>());
        g.representatives.push_back(parse_word(v.at("representative").get<std::string>()));
    }
    g.adjacency = j.at("adjacency").get<std::vector<std::vector<std::size_t>>>();
    if (g.adjacency.size() != g.keys.size()) throw std::invalid_argument("from_json: adjacency size mismatch");
    return g;
}

ShiftGraph component(MonoidHandle const& m, Word const& w, std::size_t rank) {
    rank = std::max(rank, max_letter(w));
    std::map<std::string, Word> reps;
    std::map<std::string, std::set<std::string>> edges;
    std::deque<Word> queue{w};
    reps.emplace(m.key(w), w);
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        auto k = m.key(cur);
        for (auto& [nk, nw] : m.neighbors(cur)) {
            edges[k].insert(nk);
            edges[nk].insert(k);
            if (reps.emplace(nk, nw).second) {
                check_class_size(reps.size());
                queue.push_back(nw);
            }
        }
    }
    for (auto& [k, rep] : reps) rep = m.class_of(rep).front();
    return assemble(m, rank, padded(evaluation(w, rank), rank), reps, edges);
}

ShiftGraph evaluation_graph(MonoidHandle const& m, Evaluation const& e) {
    auto part = m.partition(e);
    std::unordered_map<Word, std::string const*, WordHash> key_of;
    std::map<std::string, Word> reps;
    for (auto const& [k, members] : *part) {
        reps.emplace(k, members.front());
        for (auto const& w : members) key_of.emplace(w, &k);
    }
    std::map<std::string, std::set<std::string>> edges;
    for (auto const& [w, k] : key_of) {
        for (std::size_t i = 1; i < w.size(); ++i) {
            auto const& nk = *key_of.at(rotate(w, i));
            if (nk == *k) continue;
            edges[*k].insert(nk);
            edges[nk].insert(*k);
        }
    }
    return assemble(m, e.rank(), e, reps, edges);
}

std::size_t ScanReport::max_diameter() const {
    std::size_t best = 0;
    for (auto const& r : rows) best = std::max(best, r.max_diameter);
    return best;
}

bool ScanReport::all_connected() const {
    return std::all_of(rows.begin(), rows.end(), [](ScanRow const& r) { return r.connected(); });
}

ScanReport diameter_scan(MonoidHandle const& m, std::size_t rank, std::size_t max_total) {
    check_total(max_total);
    ScanReport report{m.name(), rank, max_total, {}};
    for (auto const& e : evaluations_up_to(rank, max_total)) {
        auto g = evaluation_graph(m, e);
        ScanRow row{e, g.size(), 0, 0};
        for (auto const& comp : g.components()) {
            ++row.components;
            row.max_diameter = std::max(row.max_diameter, g.induced(comp).diameter());
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace plm
