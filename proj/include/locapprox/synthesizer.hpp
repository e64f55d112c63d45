// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "locapprox/distribution.hpp"
#include "locapprox/graph.hpp"

namespace locapprox {

/// d^{3k+3}|T_k|^2 + d^{k+1}|T_k||T_{k+1}| for the type spaces of `p` (p.r = k).
BigInt nonperfect_bound(const Params& p);

/// Size threshold N(k,d,c,eps) = nonperfect_bound / eps, with p.r = k.
double threshold_N(const Params& p, double epsilon);

struct SynthesisOptions {
    std::uint64_t seed = 0;
    /// Only used to report the threshold N and the below-threshold warning.
    double epsilon = 0.1;
    std::size_t max_vertices = 50'000'000;
    /// Consecutive rejected random proposals before switching to sweeps.
    std::size_t stall_limit = 1000;
};

struct SynthesisReport {
    long long n_requested = 0;
    long long size = 0;
    long long edges = 0;
    std::size_t support = 0;
    int k = 0;
    std::optional<int> girth;
    int girth_required = 0;
    double epsilon = 0.1;
    double threshold = 0.0;
    bool below_threshold = false;
    BigInt bound;
    /// (tau, tau') -> number of tau'-deficient vertices in W_tau
    std::map<std::pair<std::string, std::string>, long long> deficiency;
    long long deficient_slots = 0;
    long long bad = 0;
    long long nonperfect = 0;
    long long perfect = 0;
    std::uint64_t seed = 0;
    long long random_edges = 0;
    long long sweep_edges = 0;
    int sweeps = 0;
};

/// Builds the finite approximating graph: classes V_t of size ceil(n q(t)),
/// then a maximal edge set with girth >= 2k+4 and deg_{W_tau}(x) <= adm(t,tau).
/// Vertices carry their intended type t.
std::pair<ColoredGraph, SynthesisReport> synthesize(const TypeDistribution& q, long long n,
                                                    const SynthesisOptions& options = {});

/// Greedy coloring in vertex order giving distinct colors to distinct vertices
/// at distance <= 2r. Previous colors move to `original_color`.
ColoredGraph rainbow_color(const ColoredGraph& g, int r);

/// x ~ y iff 1 <= dist(x,y) <= k; params.d becomes the realized maximum degree.
ColoredGraph power(const ColoredGraph& g, int k);

}  // namespace locapprox
