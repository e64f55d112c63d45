// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "locapprox/graph.hpp"
#include "locapprox/params.hpp"
#include "locapprox/rational.hpp"

namespace locapprox {

/// A rooted colored tree representative; children are in arbitrary order.
struct TreeNode {
    int color = 1;
    std::vector<TreeNode> children;
};

/// Canonical isomorphism type of a rooted colored tree, written in the grammar
/// `type := color "[" child-types "]"` with child types sorted as byte strings.
class RootedTreeType {
public:
    RootedTreeType() = default;

    /// Parses and canonicalizes `encoding`; validates it against `params`.
    static RootedTreeType parse(const Params& params, std::string_view encoding);

    const Params& params() const noexcept { return params_; }
    const std::string& encoding() const noexcept { return encoding_; }
    TreeNode tree() const;
    int depth() const;
    int root_color() const;
    int root_degree() const;

    friend bool operator==(const RootedTreeType& a, const RootedTreeType& b) { return a.encoding_ == b.encoding_; }
    friend auto operator<=>(const RootedTreeType& a, const RootedTreeType& b) { return a.encoding_ <=> b.encoding_; }

private:
    friend RootedTreeType canonical_tree(const TreeNode&, const Params&);
    RootedTreeType(Params p, std::string enc) : params_(p), encoding_(std::move(enc)) {}

    Params params_;
    std::string encoding_;
};

/// Parses the type grammar without canonicalizing.
TreeNode parse_tree(std::string_view encoding);
/// Canonical encoding of a representative, without validation.
std::string encode_tree(const TreeNode& node);
int tree_depth(const TreeNode& node);

/// Validates degree/depth/colors against `params` and canonicalizes.
RootedTreeType canonical_tree(const TreeNode& tree, const Params& params);

/// Number of elements of the tree-type space for `params`, by closed-form
/// multiset counting (no materialization).
BigInt count_tree_types(const Params& params);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// All tree types for `params`, sorted by encoding. Throws ResourceError when
/// the space has more than `cap` elements.
std::vector<RootedTreeType> enumerate_tree_types(const Params& params, std::size_t cap = kDefaultEnumerationCap);

/// The ell-ball of the root of t, canonicalized, with params.r = ell.
RootedTreeType truncate(const RootedTreeType& t, int ell);

/// adm(t, tau): root neighbors of t whose tau.params().r-ball (inside t, through
/// the root) has type tau. Requires t.params().r == tau.params().r + 1.
int adm(const RootedTreeType& t, const RootedTreeType& tau);

/// The whole adm row of t at radius k: k-ball encoding -> count. Entries sum
/// to the root degree.
std::map<std::string, int> adm_row(const RootedTreeType& t, int k);

/// Canonical isomorphism type of a rooted colored ball that may contain
/// cycles. Acyclic balls use the tree encoding as their id; cyclic balls use
/// `g<n>:<colors>:<edges>` over a root-preserving canonical labeling.
struct BallType {
    Params params;
    std::string id;

    bool is_tree() const noexcept { return !id.empty() && id.front() != 'g'; }

    friend bool operator==(const BallType& a, const BallType& b) { return a.id == b.id; }
    friend auto operator<=>(const BallType& a, const BallType& b) { return a.id <=> b.id; }
};

/// Canonical id of a rooted local ball (root is local vertex 0).
std::string canonical_ball_id(const LocalBall& ball);

/// Canonical id of a ball with the root and one further vertex `z` both
/// distinguished. Equal ids mean there is a root-preserving isomorphism
/// carrying one marked vertex onto the other.
std::string pointed_ball_id(const LocalBall& ball, int z);

/// Canonical representative of a ball id; local vertex 0 is the root and the
/// numbering is the canonical one.
LocalBall ball_representative(std::string_view id);

/// Ball of `radius` around `src` inside an arbitrary small adjacency structure.
LocalBall ball_in(const std::vector<int>& colors, const std::vector<std::vector<int>>& adj, int src, int radius);

/// Canonical type of B_r(G, v).
BallType extract_ball(const ColoredGraph& g, int v, int r);

/// Repeated ball extraction over one graph with a reusable BFS buffer.
class BallExtractor {
public:
    explicit BallExtractor(const ColoredGraph& g) : g_(&g), bfs_(g) {}
    BallType extract(int v, int r);
    LocalBall local(int v, int r) { return bfs_.ball(v, r); }

private:
    const ColoredGraph* g_;
    BoundedBfs bfs_;
};

}  // namespace locapprox
