// SPDX-License-Identifier: Apache-2.0
#include "locapprox/audit.hpp"

#include <algorithm>

#include "locapprox/synthesizer.hpp"

namespace locapprox {

Rational StatTable::probability(const std::string& id) const {
    auto it = counts.find(id);
    if (it == counts.end() || total == 0) return 0;
    return Rational(it->second, total);
}

StatTable ball_stats(const ColoredGraph& g, int r, std::size_t ball_cap) {
    if (r < 0) throw ValidationError("radius must be >= 0");
    StatTable st;
    st.r = r;
    st.total = static_cast<long long>(g.size());
    BallExtractor ex(g);
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
        LocalBall b = ex.local(v, r);
        if (b.size() > ball_cap)
            throw ResourceError("ball of radius " + std::to_string(r) + " at vertex " + std::to_string(v) + " has " +
                                std::to_string(b.size()) + " vertices, above cap " + std::to_string(ball_cap));
        ++st.counts[canonical_ball_id(b)];
    }
    return st;
}

AuditReport deficiency_audit(const ColoredGraph& g, const TypeDistribution& q) {
    q.validate();
    if (q.k() < 0) throw ValidationError("audit needs a distribution of radius >= 1");
    if (!g.has_intended_types()) throw ValidationError("graph carries no intended types");
    const int k = q.k();
    const int n = static_cast<int>(g.size());

    struct TypeInfo {
        std::string tau;
        std::map<std::string, int> row;
    };
    std::map<std::string, TypeInfo> info;
    for (const auto& [t, w] : q.weights) info.emplace(t.encoding(), TypeInfo{truncate(t, k).encoding(), adm_row(t, k)});

    std::vector<const TypeInfo*> of(n);
    for (int v = 0; v < n; ++v) {
        auto it = info.find(g.intended_type[v]);
        if (it == info.end())
            throw ValidationError("vertex " + std::to_string(v) + " has intended type '" + g.intended_type[v] +
                                  "' outside the support of q");
        of[v] = &it->second;
    }

    AuditReport rep;
    rep.size = n;
    rep.k = k;
    std::vector<char> bad(n, 0);
    std::map<std::string, int> degree_into;
    for (int x = 0; x < n; ++x) {
        degree_into.clear();
        for (int y : g.adj[x]) ++degree_into[of[y]->tau];
        for (const auto& [tau2, deg] : degree_into) {
            auto cap = of[x]->row.find(tau2);
            if (deg > (cap == of[x]->row.end() ? 0 : cap->second)) ++rep.cap_violations;
        }
        for (const auto& [tau2, cap] : of[x]->row) {
            auto it = degree_into.find(tau2);
            int deg = it == degree_into.end() ? 0 : it->second;
            if (deg < cap) {
                ++rep.deficiency[{of[x]->tau, tau2}];
                ++rep.deficient_slots;
                bad[x] = 1;
            }
        }
    }

    std::vector<int> dist(n, -1), queue;
    for (int v = 0; v < n; ++v)
        if (bad[v]) {
            ++rep.bad;
            dist[v] = 0;
            queue.push_back(v);
        }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        if (dist[u] >= k) continue;
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    rep.nonperfect = static_cast<long long>(queue.size());
    rep.perfect = n - rep.nonperfect;

    try {
        rep.bound = nonperfect_bound(q.params.with_radius(k));
        rep.bound_holds = rep.nonperfect <= rep.bound;
    } catch (const ResourceError&) {
        rep.bound = -1;
        rep.bound_holds = true;  // bound exceeds 10^300
    }

    rep.girth = girth(g);
    rep.girth_ok = !rep.girth || *rep.girth >= 2 * k + 4;

    BallExtractor ex(g);
    std::map<std::string, long long> counts;
    for (int v = 0; v < n; ++v) {
        BallType b = ex.extract(v, k);
        ++counts[b.id];
        if (dist[v] < 0 && b.id != of[v]->tau) ++rep.perfect_type_violations;
    }
    for (const auto& [id, c] : counts) rep.realized[id] = Rational(c, n);
    for (const auto& [t, w] : project(q, k).weights) rep.expected[t.encoding()] = w;
    rep.max_deviation = 0;
    for (const auto& [id, p] : rep.realized) {
        auto it = rep.expected.find(id);
        Rational diff = p - (it == rep.expected.end() ? Rational(0) : it->second);
        rep.max_deviation = std::max(rep.max_deviation, Rational(abs(diff)));
    }
    for (const auto& [id, p] : rep.expected)
        if (!rep.realized.count(id)) rep.max_deviation = std::max(rep.max_deviation, p);
    return rep;
}

namespace {

Rational sup_difference(const StatTable& a, const StatTable& b) {
    Rational best = 0;
    for (const auto& [id, c] : a.counts)
        best = std::max(best, Rational(abs(a.probability(id) - b.probability(id))));
    for (const auto& [id, c] : b.counts)
        if (!a.counts.count(id)) best = std::max(best, b.probability(id));
    return best;
}

bool same_labeled_ball(BoundedBfs& bg, const ColoredGraph& g, BoundedBfs& bh, const ColoredGraph& h, int x, int r) {
    std::vector<int> vg = bg.run(x, r);
    std::vector<int> vh = bh.run(x, r);
    std::sort(vg.begin(), vg.end());
    std::sort(vh.begin(), vh.end());
    if (vg != vh) return false;
    for (int u : vg) {
        std::vector<int> ng, nh;
        for (int w : g.adj[u])
            if (bg.distance(w) >= 0) ng.push_back(w);
        for (int w : h.adj[u])
            if (bh.distance(w) >= 0) nh.push_back(w);
        if (ng != nh) return false;
    }
    return true;
}

}  // namespace

LocalDistance local_dist(const ColoredGraph& g, const ColoredGraph& h, int R) {
    if (R < 1) throw ValidationError("truncation depth R must be >= 1");
    if (g.params.d != h.params.d || g.params.c != h.params.c)
        throw ValidationError("local_dist needs matching d and c (got d=" + std::to_string(g.params.d) +
                              ",c=" + std::to_string(g.params.c) + " vs d=" + std::to_string(h.params.d) +
                              ",c=" + std::to_string(h.params.c) + ")");
    if (g.size() == 0 || h.size() == 0) throw ValidationError("local_dist needs nonempty graphs");
    LocalDistance out;
    out.R = R;
    out.truncated = 0;
    Rational weight = 1;
    for (int r = 1; r <= R; ++r) {
        weight /= 2;
        Rational s = sup_difference(ball_stats(g, r), ball_stats(h, r));
        out.sup.push_back(s);
        out.truncated += weight * s;
    }
    out.upper = out.truncated + weight;
    return out;
}

PerturbationResult perturbation_check(const ColoredGraph& g, const ColoredGraph& h, int r) {
    if (r < 1) throw ValidationError("radius must be >= 1");
    if (g.size() != h.size() || g.colors != h.colors)
        throw ValidationError("perturbation_check needs identical vertex sets and colors");
    if (g.size() == 0) throw ValidationError("perturbation_check needs a nonempty graph");
    const int n = static_cast<int>(g.size());
    PerturbationResult out;
    out.r = r;
    out.d = std::max(g.params.d, h.params.d);
    BoundedBfs bg(g), bh(h);
    BallExtractor eg(g), eh(h);
    long long changed1 = 0, changed_r = 0;
    for (int x = 0; x < n; ++x) {
        if (!same_labeled_ball(bg, g, bh, h, x, 1)) ++changed1;
        if (!same_labeled_ball(bg, g, bh, h, x, r) && eg.extract(x, r) != eh.extract(x, r)) ++changed_r;
    }
    out.fraction1 = Rational(changed1, n);
    out.fraction_r = Rational(changed_r, n);
    out.bound = out.fraction1 * Rational(boost::multiprecision::pow(BigInt(out.d), static_cast<unsigned>(r)));
    out.holds = changed1 == 0 ? changed_r == 0 : out.fraction_r < out.bound;
    return out;
}

}  // namespace locapprox
