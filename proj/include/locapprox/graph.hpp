// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locapprox/params.hpp"

namespace locapprox {

/// Finite vertex-colored graph with a degree bound.
///
/// Colors are 1..params.c. `intended_type`, `marks` and `original_color` are
/// either empty or hold exactly one entry per vertex. Adjacency lists are kept
/// sorted so that serialization is deterministic.
struct ColoredGraph {
    Params params;
    std::vector<int> colors;
    std::vector<std::vector<int>> adj;
    std::vector<std::string> intended_type;
    std::vector<std::vector<std::string>> marks;
    std::vector<int> original_color;

    ColoredGraph() = default;
    ColoredGraph(int d, int c) : params{d, c, 0} {}

    std::size_t size() const noexcept { return colors.size(); }
    std::size_t edge_count() const noexcept;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const noexcept;

    int add_vertex(int color);
    /// Adds {u,v}. Throws ValidationError on loops or duplicates, and past the degree bound.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    void remove_edge(int u, int v);

    bool has_intended_types() const noexcept { return !intended_type.empty(); }
    bool has_marks() const noexcept { return !marks.empty(); }
    bool has_mark(int v, std::string_view name) const;

    /// Checks every structural invariant; throws ValidationError.
    void validate() const;

    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;
};

/// Parses the line-based graph format:
///   graph d=<int> c=<int>
///   v <id> <color> [type=<encoding>] [marks=<a,b>] [orig=<color>]
///   e <u> <v>
/// Blank lines and `#` comments are ignored.
ColoredGraph parse_graph(std::string_view text);
ColoredGraph read_graph_file(const std::filesystem::path& path);
std::string write_graph(const ColoredGraph& g);
void write_graph_file(const ColoredGraph& g, const std::filesystem::path& path);

/// A rooted induced subgraph with local vertex ids; local 0 is the root and
/// vertices appear in BFS order.
struct LocalBall {
    std::vector<int> global;
    std::vector<int> colors;
    std::vector<int> depth;
    std::vector<std::vector<int>> adj;

    std::size_t size() const noexcept { return global.size(); }
    std::size_t edge_count() const noexcept;
    bool is_tree() const noexcept { return edge_count() + 1 == size(); }
};

/// Reusable bounded BFS over a ColoredGraph. Not thread-safe; use one per thread.
class BoundedBfs {
public:
    explicit BoundedBfs(const ColoredGraph& g);

    /// Visits vertices within `radius` of `src`; returns them in BFS order.
    const std::vector<int>& run(int src, int radius);
    /// Distance of `v` in the last run, or -1 if not reached.
    int distance(int v) const { return stamp_[v] == epoch_ ? dist_[v] : -1; }
    /// True if dist(x,y) <= limit.
    bool within(int x, int y, int limit);

    LocalBall ball(int src, int radius);

private:
    const ColoredGraph* g_;
    std::vector<unsigned> stamp_;
    std::vector<int> dist_;
    std::vector<int> order_;
    unsigned epoch_ = 0;
};

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const ColoredGraph& g);

/// Connected component id per vertex, ids assigned in vertex order.
std::vector<int> components(const ColoredGraph& g);

}  // namespace locapprox
