// SPDX-License-Identifier: Apache-2.0
#include "locapprox/tree_types.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "locapprox/canon.hpp"
#include "text_util.hpp"

namespace locapprox {

namespace {

class TreeParser {
public:
    explicit TreeParser(std::string_view s) : s_(s) {}

    TreeNode parse() {
        TreeNode root = node();
        if (pos_ != s_.size()) fail("trailing characters");
        return root;
    }

private:
    TreeNode node() {
        TreeNode n;
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
        if (pos_ == start) fail("expected color");
        auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, n.color);
        if (ec != std::errc()) fail("color out of range");
        expect('[');
        if (peek() != ']') {
            n.children.push_back(node());
            while (peek() == ',') {
                ++pos_;
                n.children.push_back(node());
            }
        }
        expect(']');
        return n;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char ch) {
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ValidationError("malformed tree type '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                              ": " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

void validate_tree(const TreeNode& n, const Params& p, int depth, bool is_root) {
    if (n.color < 1 || n.color > p.c)
        throw ValidationError("color " + std::to_string(n.color) + " outside 1.." + std::to_string(p.c));
    if (depth > p.r) throw ValidationError("tree depth exceeds radius " + std::to_string(p.r));
    const int limit = is_root ? p.d : p.d - 1;
    if (static_cast<int>(n.children.size()) > limit)
        throw ValidationError("vertex with " + std::to_string(n.children.size()) + " children exceeds degree bound " +
                              std::to_string(p.d));
    for (const auto& ch : n.children) validate_tree(ch, p, depth + 1, false);
}

std::string join_node(int color, std::vector<std::string>& parts) {
    std::sort(parts.begin(), parts.end());
    std::string out = std::to_string(color);
    out += '[';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    out += ']';
    return out;
}

TreeNode cut(const TreeNode& n, int remaining) {
    TreeNode out{n.color, {}};
    if (remaining > 0)
        for (const auto& ch : n.children) out.children.push_back(cut(ch, remaining - 1));
    return out;
}

// Encoding of a ball known to be a tree, rooted at local 0.
std::string encode_local_tree(const LocalBall& b) {
    const std::size_t n = b.size();
    std::vector<int> order{0}, parent(n, -1);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (std::size_t h = 0; h < order.size(); ++h)
        for (int w : b.adj[order[h]])
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = order[h];
                order.push_back(w);
            }
    std::vector<std::string> enc(n);
    std::vector<std::string> parts;
    for (std::size_t i = order.size(); i-- > 0;) {
        int u = order[i];
        parts.clear();
        for (int w : b.adj[u])
            if (parent[w] == u) parts.push_back(std::move(enc[w]));
        enc[u] = join_node(b.colors[u], parts);
    }
    return enc[0];
}

std::string graph_form(char tag, const CanonicalForm& cf) {
    const int n = cf.certificate.empty() ? 0 : cf.certificate[0];
    std::string out(1, tag);
    out += std::to_string(n);
    out += ':';
    for (int p = 0; p < n; ++p) {
        if (p) out += ',';
        out += std::to_string(cf.certificate[1 + p]);
    }
    out += ':';
    for (std::size_t i = 1 + n; i + 1 < cf.certificate.size(); i += 2) {
        if (i > static_cast<std::size_t>(1 + n)) out += ',';
        out += std::to_string(cf.certificate[i]);
        out += '-';
        out += std::to_string(cf.certificate[i + 1]);
    }
    return out;
}

void fill_depths(LocalBall& b) {
    b.depth.assign(b.size(), -1);
    if (b.size() == 0) return;
    std::vector<int> queue{0};
    b.depth[0] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (int w : b.adj[queue[h]])
            if (b.depth[w] < 0) {
                b.depth[w] = b.depth[queue[h]] + 1;
                queue.push_back(w);
            }
}

BigInt binomial(const BigInt& n, int k) {
    BigInt out = 1;
    for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

// Multisets of size <= m drawn from a set of size n.
BigInt multisets_up_to(const BigInt& n, int m) {
    BigInt total = 0;
    for (int i = 0; i <= m; ++i) total += (i == 0) ? BigInt(1) : binomial(n + i - 1, i);
    return total;
}

// All nondecreasing index tuples of length <= m over `pool`, rendered as
// encodings with root color `color`.
void emit_multisets(const std::vector<std::string>& pool, int m, int color, std::vector<std::string>& out) {
    std::vector<std::size_t> pick;
    std::string prefix = std::to_string(color) + "[";
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        std::string enc = prefix;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            if (i) enc += ',';
            enc += pool[pick[i]];
        }
        enc += ']';
        out.push_back(std::move(enc));
        if (static_cast<int>(pick.size()) == m) return;
        for (std::size_t j = from; j < pool.size(); ++j) {
            pick.push_back(j);
            rec(j);
            pick.pop_back();
        }
    };
    rec(0);
}

}  // namespace

TreeNode parse_tree(std::string_view encoding) { return TreeParser(encoding).parse(); }

std::string encode_tree(const TreeNode& node) {
    std::vector<std::string> parts;
    parts.reserve(node.children.size());
    for (const auto& ch : node.children) parts.push_back(encode_tree(ch));
    return join_node(node.color, parts);
}

int tree_depth(const TreeNode& node) {
    int best = 0;
    for (const auto& ch : node.children) best = std::max(best, 1 + tree_depth(ch));
    return best;
}

RootedTreeType canonical_tree(const TreeNode& tree, const Params& params) {
    params.validate();
    validate_tree(tree, params, 0, true);
    return RootedTreeType(params, encode_tree(tree));
}

RootedTreeType RootedTreeType::parse(const Params& params, std::string_view encoding) {
    return canonical_tree(parse_tree(encoding), params);
}

TreeNode RootedTreeType::tree() const { return parse_tree(encoding_); }
int RootedTreeType::depth() const { return tree_depth(tree()); }
int RootedTreeType::root_color() const { return tree().color; }
int RootedTreeType::root_degree() const { return static_cast<int>(tree().children.size()); }

BigInt count_tree_types(const Params& p) {
    p.validate();
    if (p.r == 0) return BigInt(p.c);
    static const BigInt kCountCap = boost::multiprecision::pow(BigInt(10), 300);
    BigInt below = p.c;  // non-root types of height <= 0
    for (int j = 1; j < p.r; ++j) {
        below = BigInt(p.c) * multisets_up_to(below, p.d - 1);
        if (below > kCountCap)
            throw ResourceError("tree-type count for d=" + std::to_string(p.d) + " c=" + std::to_string(p.c) +
                                " r=" + std::to_string(p.r) + " exceeds 10^300");
    }
    return BigInt(p.c) * multisets_up_to(below, p.d);
}

std::vector<RootedTreeType> enumerate_tree_types(const Params& p, std::size_t cap) {
    BigInt total = count_tree_types(p);
    if (total > cap)
        throw ResourceError("tree-type space for d=" + std::to_string(p.d) + " c=" + std::to_string(p.c) +
                            " r=" + std::to_string(p.r) + " has " + total.str() + " elements, above cap " +
                            std::to_string(cap));
    std::vector<std::string> encodings;
    if (p.r == 0) {
        for (int col = 1; col <= p.c; ++col) encodings.push_back(std::to_string(col) + "[]");
    } else {
        std::vector<std::string> pool;
        for (int col = 1; col <= p.c; ++col) pool.push_back(std::to_string(col) + "[]");
        std::sort(pool.begin(), pool.end());
        for (int j = 1; j < p.r; ++j) {
            std::vector<std::string> next;
            for (int col = 1; col <= p.c; ++col) emit_multisets(pool, p.d - 1, col, next);
            std::sort(next.begin(), next.end());
            pool = std::move(next);
        }
        for (int col = 1; col <= p.c; ++col) emit_multisets(pool, p.d, col, encodings);
    }
    std::sort(encodings.begin(), encodings.end());
    std::vector<RootedTreeType> out;
    out.reserve(encodings.size());
    for (auto& e : encodings) out.push_back(RootedTreeType::parse(p, e));
    return out;
}

RootedTreeType truncate(const RootedTreeType& t, int ell) {
    if (ell < 0) throw ValidationError("truncation radius must be >= 0");
    return canonical_tree(cut(t.tree(), ell), t.params().with_radius(ell));
}

std::map<std::string, int> adm_row(const RootedTreeType& t, int k) {
    if (k < 0) throw ValidationError("adm radius must be >= 0");
    LocalBall rep = ball_representative(t.encoding());
    std::map<std::string, int> row;
    for (int s : rep.adj[0]) ++row[encode_local_tree(ball_in(rep.colors, rep.adj, s, k))];
    return row;
}

int adm(const RootedTreeType& t, const RootedTreeType& tau) {
    if (t.params().r != tau.params().r + 1)
        throw ValidationError("adm radius mismatch: t has radius " + std::to_string(t.params().r) +
                              ", tau has radius " + std::to_string(tau.params().r));
    if (t.params().d != tau.params().d || t.params().c != tau.params().c)
        throw ValidationError("adm parameter mismatch between t and tau");
    auto row = adm_row(t, tau.params().r);
    auto it = row.find(tau.encoding());
    return it == row.end() ? 0 : it->second;
}

LocalBall ball_in(const std::vector<int>& colors, const std::vector<std::vector<int>>& adj, int src, int radius) {
    const int n = static_cast<int>(colors.size());
    std::vector<int> dist(n, -1), local(n, -1);
    LocalBall b;
    b.global.push_back(src);
    dist[src] = 0;
    for (std::size_t h = 0; h < b.global.size(); ++h) {
        int u = b.global[h];
        if (dist[u] >= radius) continue;
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                b.global.push_back(w);
            }
    }
    for (std::size_t i = 0; i < b.global.size(); ++i) local[b.global[i]] = static_cast<int>(i);
    b.adj.resize(b.global.size());
    for (std::size_t i = 0; i < b.global.size(); ++i) {
        int u = b.global[i];
        b.colors.push_back(colors[u]);
        b.depth.push_back(dist[u]);
        for (int w : adj[u])
            if (local[w] >= 0) b.adj[i].push_back(local[w]);
    }
    return b;
}

std::string canonical_ball_id(const LocalBall& ball) {
    if (ball.is_tree()) return encode_local_tree(ball);
    const int pins[] = {0};
    return graph_form('g', canonical_labeling(ball.colors, ball.adj, pins));
}

std::string pointed_ball_id(const LocalBall& ball, int z) {
    // target at the root gets its own tag
    if (z == 0) {
        const int pins[] = {0};
        return graph_form('o', canonical_labeling(ball.colors, ball.adj, pins));
    }
    const int pins[] = {0, z};
    return graph_form('p', canonical_labeling(ball.colors, ball.adj, pins));
}

LocalBall ball_representative(std::string_view id) {
    LocalBall b;
    if (!id.empty() && (id.front() == 'g' || id.front() == 'p' || id.front() == 'o')) {
        auto parts = detail::split(id.substr(1), ':');
        if (parts.size() != 3) throw ValidationError("malformed ball id '" + std::string(id) + "'");
        int n = detail::parse_int(parts[0], 0);
        if (n < 1) throw ValidationError("malformed ball id '" + std::string(id) + "'");
        auto cols = detail::split(parts[1], ',');
        if (static_cast<int>(cols.size()) != n) throw ValidationError("malformed ball id '" + std::string(id) + "'");
        for (auto c : cols) b.colors.push_back(detail::parse_int(c, 0));
        b.adj.resize(n);
        if (!parts[2].empty())
            for (auto e : detail::split(parts[2], ',')) {
                auto ends = detail::split(e, '-');
                if (ends.size() != 2) throw ValidationError("malformed ball id '" + std::string(id) + "'");
                int u = detail::parse_int(ends[0], 0), v = detail::parse_int(ends[1], 0);
                if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                    throw ValidationError("malformed ball id '" + std::string(id) + "'");
                b.adj[u].push_back(v);
                b.adj[v].push_back(u);
            }
        for (auto& nb : b.adj) std::sort(nb.begin(), nb.end());
        for (int i = 0; i < n; ++i) b.global.push_back(i);
        fill_depths(b);
        if (std::find(b.depth.begin(), b.depth.end(), -1) != b.depth.end())
            throw ValidationError("ball id '" + std::string(id) + "' is disconnected");
        return b;
    }
    // Tree: BFS numbering with children visited in canonical (sorted) order.
    TreeNode root = parse_tree(id);
    std::vector<const TreeNode*> nodes{&root};
    std::vector<int> parent{-1};
    std::vector<std::vector<std::pair<std::string, const TreeNode*>>> sorted;
    for (std::size_t h = 0; h < nodes.size(); ++h) {
        std::vector<std::pair<std::string, const TreeNode*>> kids;
        for (const auto& ch : nodes[h]->children) kids.emplace_back(encode_tree(ch), &ch);
        std::sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [enc, ptr] : kids) {
            nodes.push_back(ptr);
            parent.push_back(static_cast<int>(h));
        }
    }
    const int n = static_cast<int>(nodes.size());
    b.adj.resize(n);
    for (int i = 0; i < n; ++i) {
        b.global.push_back(i);
        b.colors.push_back(nodes[i]->color);
        if (parent[i] >= 0) {
            b.adj[i].push_back(parent[i]);
            b.adj[parent[i]].push_back(i);
        }
    }
    for (auto& nb : b.adj) std::sort(nb.begin(), nb.end());
    fill_depths(b);
    return b;
}

BallType BallExtractor::extract(int v, int r) {
    LocalBall b = bfs_.ball(v, r);
    return BallType{g_->params.with_radius(r), canonical_ball_id(b)};
}

BallType extract_ball(const ColoredGraph& g, int v, int r) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.size())
        throw ValidationError("vertex " + std::to_string(v) + " not in graph");
    BallExtractor ex(g);
    return ex.extract(v, r);
}

}  // namespace locapprox
