// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locapprox/distribution.hpp"
#include "locapprox/graph.hpp"
#include "locapprox/rational.hpp"

namespace locapprox {

/// Exact distribution of r-ball types over a uniform random vertex.
struct StatTable {
    int r = 0;
    long long total = 0;
    std::map<std::string, long long> counts;  // ball id -> number of vertices

    Rational probability(const std::string& id) const;
};

inline constexpr std::size_t kDefaultBallCap = 4096;

/// Throws ResourceError if any ball has more than `ball_cap` vertices.
StatTable ball_stats(const ColoredGraph& g, int r, std::size_t ball_cap = kDefaultBallCap);

struct AuditReport {
    long long size = 0;
    int k = 0;
    std::map<std::pair<std::string, std::string>, long long> deficiency;
    long long deficient_slots = 0;
    long long bad = 0;
    long long nonperfect = 0;
    long long perfect = 0;
    long long cap_violations = 0;
    long long perfect_type_violations = 0;
    BigInt bound;
    bool bound_holds = true;
    std::optional<int> girth;
    bool girth_ok = true;
    std::map<std::string, Rational> realized;  // k-ball statistics of the graph
    std::map<std::string, Rational> expected;  // project(q, k)
    Rational max_deviation;

    bool ok() const { return bound_holds && girth_ok && cap_violations == 0 && perfect_type_violations == 0; }
};

/// Independent recount of the deficiency classification of a synthesized graph
/// against the distribution it was built from.
AuditReport deficiency_audit(const ColoredGraph& g, const TypeDistribution& q);

struct LocalDistance {
    int R = 1;
    std::vector<Rational> sup;  // sup[r-1] for r = 1..R
    Rational truncated;
    Rational upper;
};

/// sum_{r=1}^{R} 2^{-r} sup_t |Pr[B_r(G,X)=t] - Pr[B_r(H,Y)=t]|, plus the tail bound 2^{-R}.
LocalDistance local_dist(const ColoredGraph& g, const ColoredGraph& h, int R);

struct PerturbationResult {
    int r = 1;
    int d = 1;
    Rational fraction1;
    Rational fraction_r;
    Rational bound;  // d^r * fraction1
    bool holds = true;
};

/// Compares ball changes between two graphs on the same vertex set.
PerturbationResult perturbation_check(const ColoredGraph& g, const ColoredGraph& h, int r);

}  // namespace locapprox
