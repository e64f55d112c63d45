// SPDX-License-Identifier: Apache-2.0
#include "locapprox/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

#include "text_util.hpp"

namespace locapprox {

std::size_t ColoredGraph::edge_count() const noexcept {
    std::size_t sum = 0;
    for (const auto& nb : adj) sum += nb.size();
    return sum / 2;
}

int ColoredGraph::max_degree() const noexcept {
    int best = 0;
    for (const auto& nb : adj) best = std::max(best, static_cast<int>(nb.size()));
    return best;
}

int ColoredGraph::add_vertex(int color) {
    if (color < 1 || color > params.c)
        throw ValidationError("color " + std::to_string(color) + " outside 1.." + std::to_string(params.c));
    colors.push_back(color);
    adj.emplace_back();
    if (!intended_type.empty()) intended_type.emplace_back();
    if (!marks.empty()) marks.emplace_back();
    if (!original_color.empty()) original_color.push_back(color);
    return static_cast<int>(colors.size()) - 1;
}

void ColoredGraph::add_edge(int u, int v) {
    const int n = static_cast<int>(size());
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} references a missing vertex");
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw ValidationError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (degree(u) >= params.d || degree(v) >= params.d)
        throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} exceeds degree bound " +
                              std::to_string(params.d));
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool ColoredGraph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

void ColoredGraph::remove_edge(int u, int v) {
    auto drop = [](std::vector<int>& nb, int w) {
        auto it = std::lower_bound(nb.begin(), nb.end(), w);
        if (it == nb.end() || *it != w) throw ValidationError("edge not present");
        nb.erase(it);
    };
    drop(adj[u], v);
    drop(adj[v], u);
}

bool ColoredGraph::has_mark(int v, std::string_view name) const {
    if (marks.empty()) return false;
    const auto& m = marks[v];
    return std::find(m.begin(), m.end(), name) != m.end();
}

void ColoredGraph::validate() const {
    params.validate();
    const std::size_t n = size();
    if (adj.size() != n) throw ValidationError("adjacency size mismatch");
    if (!intended_type.empty() && intended_type.size() != n) throw ValidationError("intended_type size mismatch");
    if (!marks.empty() && marks.size() != n) throw ValidationError("marks size mismatch");
    if (!original_color.empty() && original_color.size() != n) throw ValidationError("original_color size mismatch");
    for (std::size_t v = 0; v < n; ++v) {
        if (colors[v] < 1 || colors[v] > params.c)
            throw ValidationError("vertex " + std::to_string(v) + " has color " + std::to_string(colors[v]) +
                                  " outside 1.." + std::to_string(params.c));
        if (static_cast<int>(adj[v].size()) > params.d)
            throw ValidationError("vertex " + std::to_string(v) + " exceeds degree bound " + std::to_string(params.d));
        for (std::size_t i = 0; i < adj[v].size(); ++i) {
            int w = adj[v][i];
            if (w < 0 || static_cast<std::size_t>(w) >= n) throw ValidationError("dangling edge");
            if (static_cast<std::size_t>(w) == v) throw ValidationError("self-loop at vertex " + std::to_string(v));
            if (i > 0 && adj[v][i - 1] >= w) throw ValidationError("adjacency not sorted or has duplicates");
            if (!std::binary_search(adj[w].begin(), adj[w].end(), static_cast<int>(v)))
                throw ValidationError("asymmetric edge at vertex " + std::to_string(v));
        }
    }
}

ColoredGraph parse_graph(std::string_view text) {
    ColoredGraph g;
    bool have_header = false;
    bool any_type = false, any_marks = false, any_orig = false;
    std::vector<std::string> types;
    std::vector<std::vector<std::string>> marks;
    std::vector<int> orig;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::size_t> edge_lines;

    detail::for_each_line(text, [&](std::size_t lineno, const std::vector<std::string_view>& tok) {
        if (!have_header) {
            if (tok[0] != "graph") throw ParseError(lineno, "expected 'graph d=<int> c=<int>' header");
            auto kv = detail::parse_kv(tok, 1, lineno);
            g.params.d = detail::require_int(kv, "d", lineno);
            g.params.c = detail::require_int(kv, "c", lineno);
            if (g.params.d < 1 || g.params.c < 1) throw ParseError(lineno, "d and c must be >= 1");
            have_header = true;
            return;
        }
        if (tok[0] == "v") {
            if (tok.size() < 3) throw ParseError(lineno, "vertex line needs '<id> <color>'");
            int id = detail::parse_int(tok[1], lineno);
            if (id != static_cast<int>(g.size()))
                throw ParseError(lineno, "vertex ids must be consecutive from 0; expected " + std::to_string(g.size()));
            int color = detail::parse_int(tok[2], lineno);
            if (color < 1 || color > g.params.c)
                throw ParseError(lineno, "color " + std::to_string(color) + " outside 1.." + std::to_string(g.params.c));
            g.colors.push_back(color);
            g.adj.emplace_back();
            types.emplace_back();
            marks.emplace_back();
            orig.push_back(color);
            for (std::size_t i = 3; i < tok.size(); ++i) {
                auto eq = tok[i].find('=');
                if (eq == std::string_view::npos) throw ParseError(lineno, "unexpected token '" + std::string(tok[i]) + "'");
                auto key = tok[i].substr(0, eq);
                auto val = tok[i].substr(eq + 1);
                if (key == "type") {
                    types.back() = std::string(val);
                    any_type = true;
                } else if (key == "marks") {
                    for (auto name : detail::split(val, ','))
                        if (!name.empty()) marks.back().emplace_back(name);
                    std::sort(marks.back().begin(), marks.back().end());
                    any_marks = true;
                } else if (key == "orig") {
                    orig.back() = detail::parse_int(val, lineno);
                    any_orig = true;
                } else {
                    throw ParseError(lineno, "unknown vertex attribute '" + std::string(key) + "'");
                }
            }
        } else if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError(lineno, "edge line needs '<u> <v>'");
            edges.emplace_back(detail::parse_int(tok[1], lineno), detail::parse_int(tok[2], lineno));
            edge_lines.push_back(lineno);
        } else {
            throw ParseError(lineno, "unknown record '" + std::string(tok[0]) + "'");
        }
    });
    if (!have_header) throw ParseError(1, "missing 'graph' header");
    if (any_type) g.intended_type = std::move(types);
    if (any_marks) g.marks = std::move(marks);
    if (any_orig) g.original_color = std::move(orig);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        try {
            g.add_edge(edges[i].first, edges[i].second);
        } catch (const ValidationError& e) {
            throw ParseError(edge_lines[i], e.what());
        }
    }
    return g;
}

ColoredGraph read_graph_file(const std::filesystem::path& path) {
    return parse_graph(detail::slurp(path));
}

std::string write_graph(const ColoredGraph& g) {
    std::ostringstream out;
    out << "graph d=" << g.params.d << " c=" << g.params.c << "\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        out << "v " << v << ' ' << g.colors[v];
        if (g.has_intended_types() && !g.intended_type[v].empty()) out << " type=" << g.intended_type[v];
        if (g.has_marks() && !g.marks[v].empty()) {
            out << " marks=";
            for (std::size_t i = 0; i < g.marks[v].size(); ++i) out << (i ? "," : "") << g.marks[v][i];
        }
        if (!g.original_color.empty()) out << " orig=" << g.original_color[v];
        out << '\n';
    }
    for (std::size_t u = 0; u < g.size(); ++u)
        for (int w : g.adj[u])
            if (static_cast<std::size_t>(w) > u) out << "e " << u << ' ' << w << '\n';
    return out.str();
}

void write_graph_file(const ColoredGraph& g, const std::filesystem::path& path) {
    detail::spit(path, write_graph(g));
}

std::size_t LocalBall::edge_count() const noexcept {
    std::size_t sum = 0;
    for (const auto& nb : adj) sum += nb.size();
    return sum / 2;
}

BoundedBfs::BoundedBfs(const ColoredGraph& g) : g_(&g), stamp_(g.size(), 0), dist_(g.size(), 0) {}

const std::vector<int>& BoundedBfs::run(int src, int radius) {
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    order_.clear();
    order_.push_back(src);
    stamp_[src] = epoch_;
    dist_[src] = 0;
    for (std::size_t head = 0; head < order_.size(); ++head) {
        int u = order_[head];
        if (dist_[u] >= radius) continue;
        for (int w : g_->adj[u]) {
            if (stamp_[w] == epoch_) continue;
            stamp_[w] = epoch_;
            dist_[w] = dist_[u] + 1;
            order_.push_back(w);
        }
    }
    return order_;
}

bool BoundedBfs::within(int x, int y, int limit) {
    run(x, limit);
    return distance(y) >= 0;
}

LocalBall BoundedBfs::ball(int src, int radius) {
    const auto& order = run(src, radius);
    LocalBall b;
    b.global = order;
    b.colors.reserve(order.size());
    b.depth.reserve(order.size());
    std::vector<int> local(order.size());
    for (int v : order) {
        b.colors.push_back(g_->colors[v]);
        b.depth.push_back(dist_[v]);
    }
    // dist_ doubles as the local index once distances are copied out
    for (std::size_t i = 0; i < order.size(); ++i) dist_[order[i]] = static_cast<int>(i);
    b.adj.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : g_->adj[order[i]])
            if (stamp_[w] == epoch_) b.adj[i].push_back(dist_[w]);
    for (std::size_t i = 0; i < order.size(); ++i) dist_[order[i]] = b.depth[i];
    return b;
}

std::vector<int> components(const ColoredGraph& g) {
    std::vector<int> comp(g.size(), -1);
    int next = 0;
    std::vector<int> stack;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.assign(1, static_cast<int>(s));
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u])
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

std::optional<int> girth(const ColoredGraph& g) {
    const int n = static_cast<int>(g.size());
    // Cycles live in the 2-core; peel degree <= 1 vertices first.
    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (!alive[v]) continue;
        alive[v] = 0;
        for (int w : g.adj[v])
            if (alive[w] && --deg[w] <= 1) queue.push_back(w);
    }

    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n, -1), parent(n, -1), touched;
    std::vector<int> order;
    for (int s = 0; s < n; ++s) {
        if (!alive[s]) continue;
        order.assign(1, s);
        dist[s] = 0;
        parent[s] = -1;
        touched.assign(1, s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            int u = order[head];
            if (2 * dist[u] + 1 >= best) break;
            for (int w : g.adj[u]) {
                if (!alive[w] || w == parent[u]) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    order.push_back(w);
                    touched.push_back(w);
                } else {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
        for (int v : touched) dist[v] = -1;
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

}  // namespace locapprox
