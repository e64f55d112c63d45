// SPDX-License-Identifier: Apache-2.0
#include "support/generators.hpp"

#include <algorithm>
#include <set>

#include "locapprox/tree_types.hpp"

namespace testgen {

using namespace locapprox;

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

ColoredGraph blank(int n, int d, int c, Rng* rng) {
    ColoredGraph g(d, c);
    for (int v = 0; v < n; ++v) g.add_vertex(rng ? uniform_int(*rng, 1, c) : 1);
    return g;
}

// True if joining u and v keeps every cycle at length >= min_girth.
bool can_join(const ColoredGraph& g, BoundedBfs& bfs, int u, int v, int min_girth) {
    if (u == v || g.has_edge(u, v)) return false;
    if (g.degree(u) >= g.params.d || g.degree(v) >= g.params.d) return false;
    if (min_girth <= 2) return true;
    return !bfs.within(u, v, min_girth - 2);
}

void greedy_fill(Rng& rng, ColoredGraph& g, int min_girth, std::size_t target_edges) {
    BoundedBfs bfs(g);
    std::vector<int> open;
    while (g.edge_count() < target_edges) {
        open.clear();
        for (int v = 0; v < static_cast<int>(g.size()); ++v)
            if (g.degree(v) < g.params.d) open.push_back(v);
        if (open.size() < 2) return;
        bool added = false;
        for (int attempt = 0; attempt < 64 && !added; ++attempt) {
            int u = open[uniform_int(rng, 0, static_cast<int>(open.size()) - 1)];
            int v = open[uniform_int(rng, 0, static_cast<int>(open.size()) - 1)];
            if (can_join(g, bfs, u, v, min_girth)) {
                g.add_edge(u, v);
                added = true;
            }
        }
        if (added) continue;
        // exhaustive fallback over the open vertices, random order
        std::shuffle(open.begin(), open.end(), rng);
        for (std::size_t i = 0; i < open.size() && !added; ++i)
            for (std::size_t j = i + 1; j < open.size() && !added; ++j)
                if (can_join(g, bfs, open[i], open[j], min_girth)) {
                    g.add_edge(open[i], open[j]);
                    added = true;
                }
        if (!added) return;
    }
}

}  // namespace

ColoredGraph random_graph(Rng& rng, int n, int d, int c, int min_girth, double fill) {
    ColoredGraph g = blank(n, d, c, &rng);
    auto target = static_cast<std::size_t>(fill * n * d / 2.0);
    greedy_fill(rng, g, min_girth, target);
    return g;
}

ColoredGraph random_cubic(Rng& rng, int n, int min_girth, int c) {
    ColoredGraph g = blank(n, 3, c, c > 1 ? &rng : nullptr);
    greedy_fill(rng, g, min_girth, static_cast<std::size_t>(3 * n / 2));
    BoundedBfs bfs(g);
    auto deficient = [&] {
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            for (int i = g.degree(v); i < 3; ++i) out.push_back(v);
        return out;
    };
    // switch: drop a random edge ab, add xa and yb
    for (int attempt = 0; attempt < 200000; ++attempt) {
        auto stubs = deficient();
        if (stubs.size() < 2) break;
        int x = stubs[uniform_int(rng, 0, static_cast<int>(stubs.size()) - 1)];
        int y = stubs[uniform_int(rng, 0, static_cast<int>(stubs.size()) - 1)];
        if (x == y && g.degree(x) > 1) continue;
        int a = uniform_int(rng, 0, n - 1);
        if (g.adj[a].empty()) continue;
        int b = g.adj[a][uniform_int(rng, 0, static_cast<int>(g.adj[a].size()) - 1)];
        if (a == x || a == y || b == x || b == y) continue;
        g.remove_edge(a, b);
        if (can_join(g, bfs, x, a, min_girth)) {
            g.add_edge(x, a);
            if (can_join(g, bfs, y, b, min_girth)) {
                g.add_edge(y, b);
                continue;
            }
            g.remove_edge(x, a);
        }
        g.add_edge(a, b);
    }
    return g;
}

ColoredGraph configuration_cubic(Rng& rng, int n, int c) {
    ColoredGraph g = blank(n, 3, c, c > 1 ? &rng : nullptr);
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < 3; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

ColoredGraph cycle(int n, int c) {
    ColoredGraph g = blank(n, 2, c, nullptr);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

ColoredGraph path(int n, int c) {
    ColoredGraph g = blank(n, 2, c, nullptr);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

std::pair<ColoredGraph, ColoredGraph> disjoint_cycles_with_paths(int count, int m) {
    ColoredGraph target = blank(count * m, 2, 1, nullptr);
    ColoredGraph forest = blank(count * m, 2, 1, nullptr);
    for (int i = 0; i < count; ++i) {
        int base = i * m;
        for (int j = 0; j < m; ++j) target.add_edge(base + j, base + (j + 1) % m);
        for (int j = 0; j + 1 < m; ++j) forest.add_edge(base + j, base + j + 1);
    }
    return {target, forest};
}

ColoredGraph matching(int pairs) {
    ColoredGraph g(1, 2);
    for (int i = 0; i < pairs; ++i) {
        int a = g.add_vertex(1);
        int b = g.add_vertex(2);
        g.add_edge(a, b);
    }
    return g;
}

namespace {

// Pointed type (x, y) expressed on the canonical representative.
PointedType pointed_at(BoundedBfs& bfs, int x, int y, int r) {
    LocalBall b = bfs.ball(x, 2 * r);
    int local = static_cast<int>(std::find(b.global.begin(), b.global.end(), y) - b.global.begin());
    std::string id = canonical_ball_id(b);
    std::string key = pointed_ball_id(b, local);
    LocalBall rep = ball_representative(id);
    for (int w = 1; w < static_cast<int>(rep.size()); ++w)
        if (pointed_ball_id(rep, w) == key) return PointedType{id, w};
    throw std::logic_error("pointed vertex not found on representative");
}

}  // namespace

InterpretationScheme random_type_pair_scheme(Rng& rng, const ColoredGraph& g, int r) {
    const int n = static_cast<int>(g.size());
    BoundedBfs bfs(g), near(g);
    BallExtractor ex(g);
    std::vector<std::string> rball(n);
    for (int v = 0; v < n; ++v) rball[v] = ex.extract(v, r).id;

    InterpretationScheme s;
    s.r = r;
    TypePairRule rule;
    std::set<std::string> wanted;  // pointed ids of the full 2r-balls
    auto add = [&](int x, int y) {
        PointedType p = pointed_at(bfs, x, y, r);
        LocalBall rep = ball_representative(p.ball_id);
        wanted.insert(pointed_ball_id(rep, p.z));
        rule.pairs.insert(p);
        s.xi.insert(rball[x]);
        s.xi.insert(rball[y]);
    };
    const int picks = uniform_int(rng, 1, std::max(1, n / 4));
    for (int i = 0; i < picks; ++i) {
        int x = uniform_int(rng, 0, n - 1);
        std::vector<int> cand;
        for (int y : near.run(x, r))
            if (y != x) cand.push_back(y);
        if (cand.empty()) continue;
        int y = cand[uniform_int(rng, 0, static_cast<int>(cand.size()) - 1)];
        add(x, y);
        add(y, x);
    }
    // a few extra xi types with no edges
    for (int i = 0; i < 3; ++i) s.xi.insert(rball[uniform_int(rng, 0, n - 1)]);

    // close the realized relation under symmetry
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < n; ++x) {
            if (!s.xi.count(rball[x])) continue;
            LocalBall b = bfs.ball(x, 2 * r);
            for (int j = 1; j < static_cast<int>(b.size()); ++j) {
                if (b.depth[j] > r || !wanted.count(pointed_ball_id(b, j))) continue;
                int y = b.global[j];
                LocalBall by = near.ball(y, 2 * r);
                int back = static_cast<int>(std::find(by.global.begin(), by.global.end(), x) - by.global.begin());
                if (!wanted.count(pointed_ball_id(by, back))) {
                    add(y, x);
                    changed = true;
                }
            }
        }
    }
    s.rule = std::move(rule);
    if (uniform_int(rng, 0, 1)) {
        SchemeMark m{"m", {}, {}};
        for (const auto& id : s.xi)
            if (uniform_int(rng, 0, 1)) m.ball_ids.insert(id);
        s.marks.push_back(std::move(m));
    }
    return s;
}

InterpretationScheme random_color_rule_scheme(Rng& rng, const ColoredGraph& g, int r) {
    InterpretationScheme s;
    s.r = r;
    ColorRule rule;
    const int c = g.params.c;
    for (int col = 1; col <= c; ++col) {
        LegendEntry e;
        e.rainbow = col;
        for (int other = 1; other <= c; ++other)
            if (uniform_int(rng, 0, 99) < 40) e.neighbors.push_back(other);
        e.xi = uniform_int(rng, 0, 99) < 85;
        e.base = uniform_int(rng, 1, 2);
        rule.legend.emplace(col, e);
    }
    s.rule = std::move(rule);
    s.output_colors = 2;
    if (uniform_int(rng, 0, 1)) {
        SchemeMark m{"m", {}, {}};
        for (const auto& [col, e] : std::get<ColorRule>(s.rule).legend)
            if (e.xi && uniform_int(rng, 0, 1)) m.colors.insert(col);
        s.marks.push_back(std::move(m));
    }
    return s;
}

}  // namespace testgen
