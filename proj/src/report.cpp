// SPDX-License-Identifier: Apache-2.0
#include "locapprox/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace locapprox {

namespace {

std::string fmt_double(double v) {
    if (v == std::numeric_limits<double>::infinity()) return "inf";
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

std::string fmt_girth(const std::optional<int>& g) { return g ? std::to_string(*g) : "inf"; }

std::string fmt_bound(const BigInt& b) { return b < 0 ? "overflow" : b.str(); }

}  // namespace

std::string format_residual_report(const ResidualReport& rep, const SimpleAdmResult& simple) {
    std::ostringstream out;
    out << "k: " << rep.k << '\n';
    out << "unimodular: " << (rep.passes ? "pass" : "fail") << '\n';
    out << "max_residual: " << to_string(rep.max_abs) << '\n';
    out << "max_residual_decimal: " << fmt_double(to_double(rep.max_abs)) << '\n';
    out << "tolerance: " << fmt_double(rep.tolerance) << '\n';
    out << "simple_adm: " << (simple.simple ? "pass" : "fail") << '\n';
    if (!simple.simple) out << "simple_adm_witness: " << simple.t << ' ' << simple.tau << ' ' << simple.adm << '\n';
    for (const auto& [key, value] : rep.residual)
        if (value != 0) out << "residual " << key.first << ' ' << key.second << ' ' << to_string(value) << '\n';
    return out.str();
}

std::string format_synthesis_report(const SynthesisReport& rep) {
    std::ostringstream out;
    out << "n_requested: " << rep.n_requested << '\n';
    out << "size: " << rep.size << '\n';
    out << "edges: " << rep.edges << '\n';
    out << "support: " << rep.support << '\n';
    out << "k: " << rep.k << '\n';
    out << "girth: " << fmt_girth(rep.girth) << '\n';
    out << "girth_required: " << rep.girth_required << '\n';
    out << "epsilon: " << fmt_double(rep.epsilon) << '\n';
    out << "threshold_N: " << fmt_double(rep.threshold) << '\n';
    out << "warning_below_threshold: " << (rep.below_threshold ? "yes" : "no") << '\n';
    out << "nonperfect_bound: " << fmt_bound(rep.bound) << '\n';
    out << "deficient_slots: " << rep.deficient_slots << '\n';
    out << "bad: " << rep.bad << '\n';
    out << "nonperfect: " << rep.nonperfect << '\n';
    out << "perfect: " << rep.perfect << '\n';
    out << "seed: " << rep.seed << '\n';
    out << "random_phase_edges: " << rep.random_edges << '\n';
    out << "sweep_edges: " << rep.sweep_edges << '\n';
    out << "maximality_sweeps: " << rep.sweeps << '\n';
    for (const auto& [key, count] : rep.deficiency)
        out << "deficient " << key.first << ' ' << key.second << ' ' << count << '\n';
    return out.str();
}

std::string format_audit_report(const AuditReport& rep) {
    std::ostringstream out;
    out << "size: " << rep.size << '\n';
    out << "k: " << rep.k << '\n';
    out << "girth: " << fmt_girth(rep.girth) << '\n';
    out << "girth_ok: " << (rep.girth_ok ? "yes" : "no") << '\n';
    out << "deficient_slots: " << rep.deficient_slots << '\n';
    out << "bad: " << rep.bad << '\n';
    out << "nonperfect: " << rep.nonperfect << '\n';
    out << "perfect: " << rep.perfect << '\n';
    out << "nonperfect_bound: " << fmt_bound(rep.bound) << '\n';
    out << "bound_holds: " << (rep.bound_holds ? "yes" : "no") << '\n';
    out << "cap_violations: " << rep.cap_violations << '\n';
    out << "perfect_type_violations: " << rep.perfect_type_violations << '\n';
    out << "max_deviation: " << to_string(rep.max_deviation) << '\n';
    out << "max_deviation_decimal: " << fmt_double(to_double(rep.max_deviation)) << '\n';
    out << "status: " << (rep.ok() ? "ok" : "violation") << '\n';
    for (const auto& [key, count] : rep.deficiency)
        out << "deficient " << key.first << ' ' << key.second << ' ' << count << '\n';
    for (const auto& [id, p] : rep.realized) out << "realized " << id << ' ' << to_string(p) << '\n';
    for (const auto& [id, p] : rep.expected) out << "expected " << id << ' ' << to_string(p) << '\n';
    return out.str();
}

std::string format_stat_table(const StatTable& st) {
    std::ostringstream out;
    out << "radius: " << st.r << '\n';
    out << "vertices: " << st.total << '\n';
    out << "types: " << st.counts.size() << '\n';
    for (const auto& [id, c] : st.counts) out << "stat " << id << ' ' << to_string(Rational(c, st.total)) << '\n';
    return out.str();
}

std::string format_local_distance(const LocalDistance& ld) {
    std::ostringstream out;
    out << "R: " << ld.R << '\n';
    out << "truncated: " << fmt_double(to_double(ld.truncated)) << '\n';
    out << "upper_bound: " << fmt_double(to_double(ld.upper)) << '\n';
    out << "truncated_exact: " << to_string(ld.truncated) << '\n';
    for (std::size_t i = 0; i < ld.sup.size(); ++i)
        out << "sup " << (i + 1) << ' ' << to_string(ld.sup[i]) << '\n';
    return out.str();
}

std::string format_perturbation(const PerturbationResult& p) {
    std::ostringstream out;
    out << "r: " << p.r << '\n';
    out << "d: " << p.d << '\n';
    out << "fraction_1: " << to_string(p.fraction1) << '\n';
    out << "fraction_r: " << to_string(p.fraction_r) << '\n';
    out << "bound: " << to_string(p.bound) << '\n';
    out << "holds: " << (p.holds ? "yes" : "no") << '\n';
    return out.str();
}

std::string format_validation(const SchemeValidation& v) {
    std::ostringstream out;
    out << "valid: " << (v.ok() ? "yes" : "no") << '\n';
    out << "violations: " << v.violations.size() << '\n';
    for (const auto& msg : v.violations) out << "violation " << msg << '\n';
    return out.str();
}

std::string format_pipeline_report(const PipelineReport& rep) {
    std::ostringstream out;
    out << "k: " << rep.k << '\n';
    out << "r: " << rep.r << '\n';
    out << "rainbow_radius: " << rep.rainbow_radius << '\n';
    out << "rainbow_colors: " << rep.rainbow_colors << '\n';
    out << "composite_colors: " << rep.legend.size() << '\n';
    out << "support: " << rep.q.support_size() << '\n';
    out << "R_max: " << rep.R_max << '\n';
    out << "seed: " << rep.seed << '\n';
    out << "source_reconstruction: " << (rep.source_reconstruction_exact ? "exact" : "mismatch") << '\n';
    for (const auto& [id, e] : rep.legend) out << format_legend_line(id, e) << '\n';
    for (const auto& st : rep.stages) {
        out << "stage n=" << st.n << " size=" << st.synthesis.size << " girth=" << fmt_girth(st.synthesis.girth)
            << " bad=" << st.synthesis.bad << " nonperfect=" << st.synthesis.nonperfect
            << " interpreted_size=" << st.interpreted_size << " interpreted_edges=" << st.interpreted_edges << '\n';
        for (const auto& ld : st.distances)
            out << "distance n=" << st.n << " R=" << ld.R << " truncated=" << fmt_double(to_double(ld.truncated))
                << " upper=" << fmt_double(to_double(ld.upper)) << '\n';
    }
    return out.str();
}

}  // namespace locapprox
