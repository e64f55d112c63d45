// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locapprox/graph.hpp"
#include "locapprox/rational.hpp"
#include "locapprox/tree_types.hpp"

namespace locapprox {

/// Probability distribution over tree types of radius k+1.
///
/// Weights are exact rationals. Distributions read from decimal literals are
/// flagged inexact and checked against `kDecimalTolerance` instead of exactly.
struct TypeDistribution {
    static constexpr double kDecimalTolerance = 1e-9;

    Params params;  // params.r == k + 1
    std::map<RootedTreeType, Rational> weights;
    bool exact = true;

    int k() const noexcept { return params.r - 1; }
    std::size_t support_size() const noexcept { return weights.size(); }
    Rational total() const;
    /// Nonnegative weights, correct radius/params on every key, total mass 1.
    void validate() const;

    friend bool operator==(const TypeDistribution&, const TypeDistribution&) = default;
};

/// Antisymmetric mass-transport residuals between k-types.
struct ResidualReport {
    int k = 0;
    /// Sparse: every pair with a nonzero flow in either direction, both orientations.
    std::map<std::pair<std::string, std::string>, Rational> residual;
    Rational max_abs;
    double tolerance = 0.0;
    bool passes = true;

    Rational at(const std::string& tau, const std::string& tau2) const;
};

struct SimpleAdmResult {
    bool simple = true;
    std::string t;    // witness type when !simple
    std::string tau;  // witness k-type when !simple
    int adm = 0;
};

/// Empirical (k+1)-ball type distribution of g. Every (k+1)-ball must be a tree.
TypeDistribution from_graph(const ColoredGraph& g, int k);

ResidualReport check_unimodular(const TypeDistribution& q);
SimpleAdmResult check_simple_adm(const TypeDistribution& q);

/// Marginal under truncation to radius ell (0 <= ell <= k+1).
TypeDistribution project(const TypeDistribution& q, int ell);

/// Distribution file: `dist d=<int> c=<int> k=<int>` then `t <encoding> <num>/<den>`.
TypeDistribution parse_distribution(std::string_view text);
TypeDistribution read_distribution_file(const std::filesystem::path& path);
std::string write_distribution(const TypeDistribution& q);
void write_distribution_file(const TypeDistribution& q, const std::filesystem::path& path);

}  // namespace locapprox
