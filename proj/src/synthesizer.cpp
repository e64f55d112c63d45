// SPDX-License-Identifier: Apache-2.0
#include "locapprox/synthesizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace locapprox {

BigInt nonperfect_bound(const Params& p) {
    p.validate();
    const int k = p.r;
    BigInt tk = count_tree_types(p.with_radius(k));
    BigInt tk1 = count_tree_types(p.with_radius(k + 1));
    BigInt d = p.d;
    return boost::multiprecision::pow(d, 3 * k + 3) * tk * tk + boost::multiprecision::pow(d, k + 1) * tk * tk1;
}

double threshold_N(const Params& p, double epsilon) {
    if (!(epsilon > 0)) throw ValidationError("epsilon must be positive");
    return nonperfect_bound(p).convert_to<double>() / epsilon;
}

namespace {

// Vector-backed set with O(1) insert and erase plus uniform sampling. Elements are
// slot ids; each slot lives in at most one set, so positions are shared.
class SlotSet {
public:
    std::vector<int> items;

    void insert(int s, std::vector<int>& pos) {
        pos[s] = static_cast<int>(items.size());
        items.push_back(s);
    }
    void erase(int s, std::vector<int>& pos) {
        int i = pos[s];
        int last = items.back();
        items[i] = last;
        pos[last] = i;
        items.pop_back();
        pos[s] = -1;
    }
};

class Builder {
public:
    Builder(const TypeDistribution& q, long long n, const SynthesisOptions& opt)
        : q_(q), k_(q.k()), opt_(opt), rng_(opt.seed) {
        build_classes(n);
    }

    void run() {
        random_phase();
        sweep_until_maximal();
    }

    ColoredGraph take_graph() { return std::move(g_); }

    void fill_report(SynthesisReport& rep) {
        rep.k = k_;
        rep.size = static_cast<long long>(g_.size());
        rep.edges = static_cast<long long>(g_.edge_count());
        rep.support = q_.support_size();
        rep.girth = girth(g_);
        rep.girth_required = 2 * k_ + 4;
        rep.random_edges = random_edges_;
        rep.sweep_edges = sweep_edges_;
        rep.sweeps = sweeps_;
        std::vector<char> bad(g_.size(), 0);
        for (std::size_t pid = 0; pid < pairs_.size(); ++pid) {
            const auto& set = deficient_[pid];
            if (set.items.empty()) continue;
            auto [a, b] = pairs_[pid];
            rep.deficiency[{tau_names_[a], tau_names_[b]}] = static_cast<long long>(set.items.size());
            rep.deficient_slots += static_cast<long long>(set.items.size());
            for (int s : set.items) bad[slot_vertex_[s]] = 1;
        }
        std::vector<int> frontier;
        std::vector<int> dist(g_.size(), -1);
        for (std::size_t v = 0; v < g_.size(); ++v)
            if (bad[v]) {
                ++rep.bad;
                dist[v] = 0;
                frontier.push_back(static_cast<int>(v));
            }
        for (std::size_t h = 0; h < frontier.size(); ++h) {
            int u = frontier[h];
            if (dist[u] >= k_) continue;
            for (int w : g_.adj[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    frontier.push_back(w);
                }
        }
        rep.nonperfect = static_cast<long long>(frontier.size());
        rep.perfect = rep.size - rep.nonperfect;
    }

private:
    int tau_index(const std::string& enc) {
        auto [it, inserted] = tau_ids_.emplace(enc, static_cast<int>(tau_names_.size()));
        if (inserted) tau_names_.push_back(enc);
        return it->second;
    }

    int pair_index(int a, int b) {
        auto [it, inserted] = pair_ids_.emplace(std::make_pair(a, b), static_cast<int>(pairs_.size()));
        if (inserted) {
            pairs_.emplace_back(a, b);
            deficient_.emplace_back();
        }
        return it->second;
    }

    void build_classes(long long n) {
        struct ClassPlan {
            std::size_t size;
            int color;
            int tau;
            std::vector<std::pair<int, int>> caps;  // (tau' index, adm)
            std::string encoding;
        };
        std::vector<ClassPlan> plans;
        BigInt total = 0;
        for (const auto& [t, w] : q_.weights) {
            BigInt size = ceil(Rational(n) * w);
            total += size;
            if (total > opt_.max_vertices)
                throw ResourceError("synthesis needs more than " + std::to_string(opt_.max_vertices) + " vertices");
            ClassPlan plan{size.convert_to<std::size_t>(), t.root_color(), tau_index(truncate(t, k_).encoding()), {},
                           t.encoding()};
            for (const auto& [enc, count] : adm_row(t, k_)) plan.caps.emplace_back(tau_index(enc), count);
            plans.push_back(std::move(plan));
        }
        g_ = ColoredGraph(q_.params.d, q_.params.c);
        g_.intended_type.reserve(total.convert_to<std::size_t>());
        for (const auto& plan : plans)
            for (std::size_t i = 0; i < plan.size; ++i) {
                int v = static_cast<int>(g_.size());
                g_.colors.push_back(plan.color);
                g_.adj.emplace_back();
                g_.intended_type.push_back(plan.encoding);
                vertex_tau_.push_back(plan.tau);
                slot_begin_.push_back(static_cast<int>(slot_vertex_.size()));
                for (auto [tau2, cap] : plan.caps) {
                    int s = static_cast<int>(slot_vertex_.size());
                    slot_vertex_.push_back(v);
                    slot_tau_.push_back(tau2);
                    slot_cap_.push_back(cap);
                    slot_deg_.push_back(0);
                    slot_pair_.push_back(pair_index(plan.tau, tau2));
                    slot_pos_.push_back(-1);
                    deficient_[slot_pair_[s]].insert(s, slot_pos_);
                }
            }
        slot_begin_.push_back(static_cast<int>(slot_vertex_.size()));
        bfs_.emplace(g_);
        for (std::size_t pid = 0; pid < pairs_.size(); ++pid)
            if (pairs_[pid].first <= pairs_[pid].second) live_.push_back(static_cast<int>(pid));
    }

    int slot_of(int v, int tau2) const {
        for (int s = slot_begin_[v]; s < slot_begin_[v + 1]; ++s)
            if (slot_tau_[s] == tau2) return s;
        return -1;
    }

    int reverse_pair(int pid) const {
        auto it = pair_ids_.find({pairs_[pid].second, pairs_[pid].first});
        return it == pair_ids_.end() ? -1 : it->second;
    }

    bool far_enough(int x, int y) { return !bfs_->within(x, y, 2 * k_ + 2); }

    void connect(int sx, int sy) {
        int x = slot_vertex_[sx], y = slot_vertex_[sy];
        g_.add_edge(x, y);
        for (int s : {sx, sy})
            if (++slot_deg_[s] == slot_cap_[s]) deficient_[slot_pair_[s]].erase(s, slot_pos_);
    }

    std::size_t uniform(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }

    void random_phase() {
        std::size_t fails = 0;
        while (!live_.empty() && fails < opt_.stall_limit) {
            std::size_t li = uniform(live_.size());
            int pid = live_[li];
            int rid = reverse_pair(pid);
            auto& left = deficient_[pid].items;
            if (rid < 0 || left.empty() || deficient_[rid].items.empty()) {
                live_[li] = live_.back();
                live_.pop_back();
                continue;
            }
            auto& right = deficient_[rid].items;
            int sx = left[uniform(left.size())];
            int sy = right[uniform(right.size())];
            int x = slot_vertex_[sx], y = slot_vertex_[sy];
            if (x != y && far_enough(x, y)) {
                connect(sx, sy);
                ++random_edges_;
                fails = 0;
            } else {
                ++fails;
            }
        }
    }

    // One pass over every unordered pair; returns the number of edges added.
    long long sweep_pass() {
        long long added = 0;
        std::vector<int> snapshot;
        for (std::size_t pid = 0; pid < pairs_.size(); ++pid) {
            auto [a, b] = pairs_[pid];
            if (a > b) continue;
            int rid = reverse_pair(static_cast<int>(pid));
            if (rid < 0) continue;
            snapshot = deficient_[pid].items;
            std::sort(snapshot.begin(), snapshot.end());
            for (int sx : snapshot) {
                while (slot_pos_[sx] >= 0) {
                    int x = slot_vertex_[sx];
                    bfs_->run(x, 2 * k_ + 2);
                    int pick = -1;
                    for (int sy : deficient_[rid].items) {
                        int y = slot_vertex_[sy];
                        if (y != x && bfs_->distance(y) < 0 && (pick < 0 || sy < pick)) pick = sy;
                    }
                    if (pick < 0) break;
                    connect(sx, pick);
                    ++added;
                }
            }
        }
        return added;
    }

    void sweep_until_maximal() {
        while (true) {
            long long added = sweep_pass();
            ++sweeps_;
            sweep_edges_ += added;
            if (added == 0) break;
        }
    }

    const TypeDistribution& q_;
    int k_;
    SynthesisOptions opt_;
    std::mt19937_64 rng_;
    ColoredGraph g_;
    std::optional<BoundedBfs> bfs_;

    std::map<std::string, int> tau_ids_;
    std::vector<std::string> tau_names_;
    std::map<std::pair<int, int>, int> pair_ids_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<SlotSet> deficient_;
    std::vector<int> live_;

    std::vector<int> vertex_tau_;
    std::vector<int> slot_begin_;
    std::vector<int> slot_vertex_, slot_tau_, slot_cap_, slot_deg_, slot_pair_, slot_pos_;

    long long random_edges_ = 0;
    long long sweep_edges_ = 0;
    int sweeps_ = 0;
};

}  // namespace

std::pair<ColoredGraph, SynthesisReport> synthesize(const TypeDistribution& q, long long n,
                                                    const SynthesisOptions& options) {
    q.validate();
    if (n < 1) throw ValidationError("n must be >= 1, got " + std::to_string(n));
    if (q.k() < 0) throw ValidationError("synthesis needs a distribution of radius >= 1");
    auto residuals = check_unimodular(q);
    if (!residuals.passes)
        throw ValidationError("distribution is not unimodular (max residual " + to_string(residuals.max_abs) + ")");
    auto simple = check_simple_adm(q);
    if (!simple.simple)
        throw ValidationError("adm(" + simple.t + ", " + simple.tau + ") = " + std::to_string(simple.adm) +
                              " exceeds 1; recolor the source with a rainbow coloring");

    SynthesisReport rep;
    rep.n_requested = n;
    rep.seed = options.seed;
    rep.epsilon = options.epsilon;
    Params pk = q.params.with_radius(q.k());
    try {
        rep.bound = nonperfect_bound(pk);
        rep.threshold = threshold_N(pk, options.epsilon);
    } catch (const ResourceError&) {
        rep.bound = -1;
        rep.threshold = std::numeric_limits<double>::infinity();
    }
    rep.below_threshold = static_cast<double>(n) <= rep.threshold;

    Builder builder(q, n, options);
    builder.run();
    builder.fill_report(rep);
    return {builder.take_graph(), std::move(rep)};
}

ColoredGraph rainbow_color(const ColoredGraph& g, int r) {
    if (r < 0) throw ValidationError("rainbow radius must be >= 0");
    const int n = static_cast<int>(g.size());
    std::vector<int> color(n, 0);
    BoundedBfs bfs(g);
    std::vector<char> used;
    int top = 1;
    for (int v = 0; v < n; ++v) {
        used.assign(static_cast<std::size_t>(top) + 2, 0);
        for (int w : bfs.run(v, 2 * r))
            if (color[w] > 0) used[color[w]] = 1;
        int c = 1;
        while (used[c]) ++c;
        color[v] = c;
        top = std::max(top, c);
    }
    ColoredGraph out = g;
    out.original_color = g.colors;
    out.colors = std::move(color);
    out.params.c = top;
    return out;
}

ColoredGraph power(const ColoredGraph& g, int k) {
    if (k < 1) throw ValidationError("power exponent must be >= 1");
    const int n = static_cast<int>(g.size());
    std::vector<std::vector<int>> adj(n);
    BoundedBfs bfs(g);
    for (int v = 0; v < n; ++v) {
        for (int w : bfs.run(v, k))
            if (w != v) adj[v].push_back(w);
        std::sort(adj[v].begin(), adj[v].end());
    }
    ColoredGraph out;
    out.params = g.params;
    out.colors = g.colors;
    out.marks = g.marks;
    out.original_color = g.original_color;
    out.adj = std::move(adj);
    out.params.d = std::max(1, out.max_degree());
    return out;
}

}  // namespace locapprox
