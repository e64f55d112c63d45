// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "locapprox/audit.hpp"
#include "locapprox/distribution.hpp"
#include "locapprox/graph.hpp"
#include "locapprox/synthesizer.hpp"

namespace locapprox {

/// A vertex z inside the canonical representative of a 2r-ball type.
struct PointedType {
    std::string ball_id;
    int z = 0;

    friend auto operator<=>(const PointedType&, const PointedType&) = default;
};

/// Edge rule (a): {x,y} is an edge iff some root-preserving isomorphism from
/// the representative of t onto B_{2r}(G,x) sends z to y.
struct TypePairRule {
    std::set<PointedType> pairs;
};

/// Meaning of one composite color: (rainbow color, neighbor color set), plus
/// whether the vertex is in the domain and which color it takes in the image.
struct LegendEntry {
    int rainbow = 1;
    std::vector<int> neighbors;  // sorted
    bool xi = true;
    int base = 1;

    friend auto operator<=>(const LegendEntry&, const LegendEntry&) = default;
};

/// Edge rule (b): {x,y} is an edge iff dist(x,y) <= r, both are in the domain,
/// rainbow(y) is in n(x) and rainbow(x) is in n(y).
struct ColorRule {
    std::map<int, LegendEntry> legend;
};

struct SchemeMark {
    std::string name;
    std::set<std::string> ball_ids;  // rule (a): r-ball types
    std::set<int> colors;            // rule (b): composite colors
};

/// Strongly local interpretation scheme (xi, eta, mu_1..mu_p) given
/// extensionally. For rule (b) the domain comes from the legend `xi` flags.
struct InterpretationScheme {
    int r = 1;
    std::set<std::string> xi;
    std::variant<TypePairRule, ColorRule> rule;
    std::vector<SchemeMark> marks;
    std::optional<int> output_degree;
    std::optional<int> output_colors;

    bool is_type_pair() const noexcept { return std::holds_alternative<TypePairRule>(rule); }
};

struct SchemeValidation {
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

SchemeValidation validate_scheme(const InterpretationScheme& scheme);

struct Interpreted {
    ColoredGraph graph;
    std::vector<int> source;  // output vertex -> input vertex
};

/// I(G). Throws ValidationError if the scheme is invalid or the output exceeds
/// the declared degree bound; SchemeError if the realized edge relation is not
/// symmetric, anti-reflexive and guarded.
Interpreted apply_scheme_mapped(const InterpretationScheme& scheme, const ColoredGraph& g);
ColoredGraph apply_scheme(const InterpretationScheme& scheme, const ColoredGraph& g);

InterpretationScheme parse_scheme(std::string_view text);
InterpretationScheme read_scheme_file(const std::filesystem::path& path);
std::string write_scheme(const InterpretationScheme& scheme);

/// `legend <id> = (<rainbow>, {<c>,...}) xi=<0|1> base=<color>`
std::string format_legend_line(int id, const LegendEntry& e);

struct PipelineStage {
    long long n = 0;
    SynthesisReport synthesis;
    long long interpreted_size = 0;
    long long interpreted_edges = 0;
    std::vector<LocalDistance> distances;  // R = 1..R_max
};

struct PipelineReport {
    int k = 0;
    int r = 0;
    int rainbow_radius = 0;
    int rainbow_colors = 0;
    int R_max = 1;
    std::uint64_t seed = 0;
    std::map<int, LegendEntry> legend;
    TypeDistribution q;
    bool source_reconstruction_exact = false;
    std::vector<PipelineStage> stages;
};

struct PipelineOptions {
    int k = 1;
    std::vector<long long> n_list;
    std::uint64_t seed = 0;
    double epsilon = 0.1;
};

/// The finite weakly-treeable approximation pipeline. Target vertex i is
/// forest vertex i; the forest may have extra vertices.
PipelineReport pipeline(const ColoredGraph& target, const ColoredGraph& forest, const PipelineOptions& options);

/// The composite-colored forest (T, c') and its legend, as built by the
/// pipeline; exposed for inspection and tests.
struct CompositeSource {
    ColoredGraph graph;
    std::map<int, LegendEntry> legend;
    int r = 1;
    int rainbow_radius = 1;
    int rainbow_colors = 1;
};
CompositeSource composite_source(const ColoredGraph& target, const ColoredGraph& forest, int k);

/// The ColorRule scheme I_r over a legend, with the target's output bounds.
InterpretationScheme color_rule_scheme(const std::map<int, LegendEntry>& legend, int r, int out_d, int out_c);

}  // namespace locapprox
