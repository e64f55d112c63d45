// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace locapprox {

/// Result of canonical labeling. `order[p]` is the input vertex placed at
/// canonical position p; `certificate` is the vertex count, the labels in
/// canonical order, then the sorted canonical edge list.
struct CanonicalForm {
    std::vector<int> order;
    std::vector<int> certificate;
};

/// Canonical labeling of a small vertex-labeled graph by color refinement and
/// individualization search with automorphism pruning.
///
/// The vertices in `pinned` occupy positions 0,1,... in the given order, so a
/// rooted graph pins its root and a pointed graph pins root then target.
/// Throws ResourceError when the search visits more than `leaf_cap` leaves.
CanonicalForm canonical_labeling(std::span<const int> labels, const std::vector<std::vector<int>>& adj,
                                 std::span<const int> pinned, std::size_t leaf_cap = 200000);

}  // namespace locapprox
