// SPDX-License-Identifier: Apache-2.0
#include "locapprox/canon.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "locapprox/error.hpp"

namespace locapprox {

namespace {

using Partition = std::vector<int>;  // cell index per vertex; cells numbered in order

// Renumbers cells by sorting vertices on `keys`; returns the number of cells.
int renumber(Partition& cell, const std::vector<std::vector<int>>& keys) {
    const int n = static_cast<int>(cell.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    int next = -1;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || keys[idx[i]] != keys[idx[i - 1]]) ++next;
        cell[idx[i]] = next;
    }
    return next + 1;
}

int cell_count(const Partition& cell) {
    return cell.empty() ? 0 : *std::max_element(cell.begin(), cell.end()) + 1;
}

void refine(Partition& cell, const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(cell.size());
    int count = cell_count(cell);
    std::vector<std::vector<int>> keys(n);
    while (count < n) {
        for (int v = 0; v < n; ++v) {
            auto& k = keys[v];
            k.clear();
            k.push_back(cell[v]);
            for (int w : adj[v]) k.push_back(cell[w]);
            std::sort(k.begin() + 1, k.end());
        }
        int next = renumber(cell, keys);
        if (next == count) break;
        count = next;
    }
}

class Search {
public:
    Search(std::span<const int> labels, const std::vector<std::vector<int>>& adj, std::size_t cap)
        : labels_(labels), adj_(adj), cap_(cap) {}

    void visit(Partition cell, std::vector<int>& path) {
        refine(cell, adj_);
        const int n = static_cast<int>(cell.size());
        if (cell_count(cell) == n) {
            leaf(cell);
            return;
        }
        std::vector<int> size(n, 0);
        for (int c : cell) ++size[c];
        int target = 0;
        while (size[target] < 2) ++target;
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (cell[v] == target) members.push_back(v);

        std::vector<int> explored;
        std::vector<std::vector<int>> keys(n);
        for (int w : members) {
            if (!explored.empty() && same_orbit_as_explored(w, explored, path)) continue;
            for (int v = 0; v < n; ++v) keys[v] = {cell[v], (v == w || cell[v] != target) ? 0 : 1};
            Partition child = cell;
            renumber(child, keys);
            path.push_back(w);
            visit(std::move(child), path);
            path.pop_back();
            explored.push_back(w);
        }
    }

    CanonicalForm result() && { return CanonicalForm{std::move(best_order_), std::move(best_cert_)}; }

private:
    void leaf(const Partition& cell) {
        if (++leaves_ > cap_)
            throw ResourceError("canonical labeling search exceeded " + std::to_string(cap_) + " leaves");
        const int n = static_cast<int>(cell.size());
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[cell[v]] = v;
        std::vector<int> cert;
        cert.reserve(1 + n + 2 * n);
        cert.push_back(n);
        for (int p = 0; p < n; ++p) cert.push_back(labels_[order[p]]);
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < n; ++v)
            for (int w : adj_[v])
                if (cell[v] < cell[w]) edges.emplace_back(cell[v], cell[w]);
        std::sort(edges.begin(), edges.end());
        for (auto [a, b] : edges) {
            cert.push_back(a);
            cert.push_back(b);
        }
        if (best_cert_.empty() || cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_order_ = std::move(order);
            if (first_order_.empty()) {
                first_order_ = best_order_;
                first_cert_ = best_cert_;
            }
            return;
        }
        if (cert == best_cert_) record_automorphism(cell, best_order_);
        else if (cert == first_cert_) record_automorphism(cell, first_order_);
    }

    void record_automorphism(const Partition& cell, const std::vector<int>& other_order) {
        const int n = static_cast<int>(cell.size());
        std::vector<int> gamma(n);
        bool identity = true;
        for (int v = 0; v < n; ++v) {
            gamma[v] = other_order[cell[v]];
            identity = identity && gamma[v] == v;
        }
        if (!identity) autos_.push_back(std::move(gamma));
    }

    bool same_orbit_as_explored(int w, const std::vector<int>& explored, const std::vector<int>& path) {
        const int n = static_cast<int>(labels_.size());
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& g : autos_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](int p) { return g[p] == p; });
            if (!fixes) continue;
            any = true;
            for (int v = 0; v < n; ++v) parent[find(v)] = find(g[v]);
        }
        if (!any) return false;
        int rw = find(w);
        return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == rw; });
    }

    std::span<const int> labels_;
    const std::vector<std::vector<int>>& adj_;
    std::size_t cap_;
    std::size_t leaves_ = 0;
    std::vector<int> best_cert_, best_order_, first_cert_, first_order_;
    std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalForm canonical_labeling(std::span<const int> labels, const std::vector<std::vector<int>>& adj,
                                 std::span<const int> pinned, std::size_t leaf_cap) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) return {};
    Partition cell(n);
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) keys[v] = {1, labels[v]};
    for (std::size_t i = 0; i < pinned.size(); ++i) keys[pinned[i]] = {0, static_cast<int>(i)};
    renumber(cell, keys);
    Search search(labels, adj, leaf_cap);
    std::vector<int> path(pinned.begin(), pinned.end());
    search.visit(std::move(cell), path);
    return std::move(search).result();
}

}  // namespace locapprox
