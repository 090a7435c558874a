#pragma once

#include "plm/monoid.hpp"
#include "plm/words.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace plm {

// Vertices are canonical keys, sorted. Self-loops are implicit and never stored.
struct ShiftGraph {
    std::string monoid;
    std::size_t rank = 0;
    Evaluation evaluation;
    std::vector<std::string> keys;
    std::vector<Word> representatives;
    std::vector<std::vector<std::size_t>> adjacency;

    static constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

    std::size_t size() const noexcept { return keys.size(); }
    std::size_t edge_count() const;
    std::optional<std::size_t> find(std::string const& key) const;
    std::vector<std::size_t> distances_from(std::size_t v) const;
    // Throws std::invalid_argument if a key is missing or the two are not connected.
    std::size_t distance(std::string const& a, std::string const& b) const;
    // Vertex indices from a to b inclusive, ties broken towards smaller indices. Same errors as distance.
    std::vector<std::size_t> shortest_path(std::string const& a, std::string const& b) const;
    // Throws std::invalid_argument if the graph is disconnected.
    std::size_t diameter() const;
    std::vector<std::vector<std::size_t>> components() const;
    ShiftGraph induced(std::vector<std::size_t> const& vertices) const;

    std::string to_dot() const;
    std::string to_json() const;
    static ShiftGraph from_json(std::string const& text);

    friend bool operator==(ShiftGraph const&, ShiftGraph const&) = default;
};

// Connected component of the element represented by w (BFS over neighbors).
ShiftGraph component(MonoidHandle const& m, Word const& w, std::size_t rank = 0);
// Every element with evaluation e and all cyclic-shift edges between them.
ShiftGraph evaluation_graph(MonoidHandle const& m, Evaluation const& e);

struct ScanRow {
    Evaluation evaluation;
    std::size_t elements = 0;
    std::size_t components = 0;
    std::size_t max_diameter = 0;
    bool connected() const noexcept { return components <= 1; }
};

struct ScanReport {
    std::string monoid;
    std::size_t rank = 0;
    std::size_t max_total = 0;
    std::vector<ScanRow> rows;
    std::size_t max_diameter() const;
    bool all_connected() const;
};

ScanReport diameter_scan(MonoidHandle const& m, std::size_t rank, std::size_t max_total);

}  // namespace plm
