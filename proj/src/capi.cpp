// SPDX-License-Identifier: Apache-2.0
#include "locapprox.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "locapprox/audit.hpp"
#include "locapprox/distribution.hpp"
#include "locapprox/interpret.hpp"
#include "locapprox/report.hpp"
#include "locapprox/synthesizer.hpp"
#include "locapprox/tree_types.hpp"

struct lax_graph {
    locapprox::ColoredGraph value;
};
struct lax_dist {
    locapprox::TypeDistribution value;
};
struct lax_scheme {
    locapprox::InterpretationScheme value;
};

namespace {

thread_local std::string g_last_error;

lax_status fail(lax_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
lax_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return LAX_OK;
    } catch (const locapprox::ResourceError& e) {
        return fail(LAX_ERR_RESOURCE, e.what());
    } catch (const locapprox::SchemeError& e) {
        return fail(LAX_ERR_SCHEME, e.what());
    } catch (const locapprox::ValidationError& e) {
        return fail(LAX_ERR_VALIDATION, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LAX_ERR_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(LAX_ERR_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_text(char** slot, const std::string& s) {
    if (slot) *slot = dup(s);
}

#define LAX_REQUIRE(cond)                                                \
    do {                                                                 \
        if (!(cond)) return fail(LAX_ERR_ARGUMENT, "invalid argument: " #cond); \
    } while (0)

}  // namespace

extern "C" {

const char* lax_version(void) { return "1.0.0"; }
const char* lax_last_error(void) { return g_last_error.c_str(); }
void lax_string_free(char* s) { std::free(s); }

lax_status lax_graph_parse(const char* text, lax_graph** out) {
    LAX_REQUIRE(text && out);
    return guarded([&] { *out = new lax_graph{locapprox::parse_graph(text)}; });
}

lax_status lax_graph_read_file(const char* path, lax_graph** out) {
    LAX_REQUIRE(path && out);
    return guarded([&] { *out = new lax_graph{locapprox::read_graph_file(path)}; });
}

lax_status lax_graph_write(const lax_graph* g, char** text) {
    LAX_REQUIRE(g && text);
    return guarded([&] { set_text(text, locapprox::write_graph(g->value)); });
}

void lax_graph_free(lax_graph* g) { delete g; }
size_t lax_graph_vertex_count(const lax_graph* g) { return g ? g->value.size() : 0; }
size_t lax_graph_edge_count(const lax_graph* g) { return g ? g->value.edge_count() : 0; }

lax_status lax_graph_girth(const lax_graph* g, long* out) {
    LAX_REQUIRE(g && out);
    return guarded([&] {
        auto gi = locapprox::girth(g->value);
        *out = gi ? *gi : -1;
    });
}

lax_status lax_types_enumerate(int d, int c, int r, char** lines) {
    LAX_REQUIRE(lines);
    return guarded([&] {
        std::string out;
        for (const auto& t : locapprox::enumerate_tree_types(locapprox::Params{d, c, r})) out += t.encoding() + "\n";
        set_text(lines, out);
    });
}

lax_status lax_types_count(int d, int c, int r, char** decimal) {
    LAX_REQUIRE(decimal);
    return guarded([&] { set_text(decimal, locapprox::count_tree_types(locapprox::Params{d, c, r}).str()); });
}

lax_status lax_types_canonical(int d, int c, int r, const char* encoding, char** canonical) {
    LAX_REQUIRE(encoding && canonical);
    return guarded([&] {
        set_text(canonical, locapprox::RootedTreeType::parse(locapprox::Params{d, c, r}, encoding).encoding());
    });
}

lax_status lax_types_truncate(int d, int c, int r, const char* encoding, int ell, char** truncated) {
    LAX_REQUIRE(encoding && truncated);
    return guarded([&] {
        auto t = locapprox::RootedTreeType::parse(locapprox::Params{d, c, r}, encoding);
        set_text(truncated, locapprox::truncate(t, ell).encoding());
    });
}

lax_status lax_types_adm(int d, int c, int k, const char* t, const char* tau, long* value) {
    LAX_REQUIRE(t && tau && value);
    return guarded([&] {
        auto tt = locapprox::RootedTreeType::parse(locapprox::Params{d, c, k + 1}, t);
        auto ta = locapprox::RootedTreeType::parse(locapprox::Params{d, c, k}, tau);
        *value = locapprox::adm(tt, ta);
    });
}

lax_status lax_extract_ball(const lax_graph* g, long v, int r, char** ball_id) {
    LAX_REQUIRE(g && ball_id);
    return guarded([&] { set_text(ball_id, locapprox::extract_ball(g->value, static_cast<int>(v), r).id); });
}

lax_status lax_dist_parse(const char* text, lax_dist** out) {
    LAX_REQUIRE(text && out);
    return guarded([&] { *out = new lax_dist{locapprox::parse_distribution(text)}; });
}

lax_status lax_dist_read_file(const char* path, lax_dist** out) {
    LAX_REQUIRE(path && out);
    return guarded([&] { *out = new lax_dist{locapprox::read_distribution_file(path)}; });
}

lax_status lax_dist_write(const lax_dist* q, char** text) {
    LAX_REQUIRE(q && text);
    return guarded([&] { set_text(text, locapprox::write_distribution(q->value)); });
}

void lax_dist_free(lax_dist* q) { delete q; }

lax_status lax_dist_from_graph(const lax_graph* g, int k, lax_dist** out) {
    LAX_REQUIRE(g && out);
    return guarded([&] { *out = new lax_dist{locapprox::from_graph(g->value, k)}; });
}

lax_status lax_dist_check(const lax_dist* q, int* passed, char** report) {
    LAX_REQUIRE(q && passed);
    return guarded([&] {
        auto res = locapprox::check_unimodular(q->value);
        auto simple = locapprox::check_simple_adm(q->value);
        *passed = res.passes && simple.simple;
        set_text(report, locapprox::format_residual_report(res, simple));
    });
}

lax_status lax_dist_project(const lax_dist* q, int ell, lax_dist** out) {
    LAX_REQUIRE(q && out);
    return guarded([&] { *out = new lax_dist{locapprox::project(q->value, ell)}; });
}

lax_status lax_threshold_n(int d, int c, int k, double epsilon, double* value) {
    LAX_REQUIRE(value);
    return guarded([&] { *value = locapprox::threshold_N(locapprox::Params{d, c, k}, epsilon); });
}

lax_status lax_synthesize(const lax_dist* q, long long n, uint64_t seed, double epsilon, lax_graph** out,
                          char** report) {
    LAX_REQUIRE(q && out);
    return guarded([&] {
        locapprox::SynthesisOptions opt;
        opt.seed = seed;
        opt.epsilon = epsilon;
        auto [g, rep] = locapprox::synthesize(q->value, n, opt);
        set_text(report, locapprox::format_synthesis_report(rep));
        *out = new lax_graph{std::move(g)};
    });
}

lax_status lax_rainbow(const lax_graph* g, int r, lax_graph** out) {
    LAX_REQUIRE(g && out);
    return guarded([&] { *out = new lax_graph{locapprox::rainbow_color(g->value, r)}; });
}

lax_status lax_power(const lax_graph* g, int k, lax_graph** out) {
    LAX_REQUIRE(g && out);
    return guarded([&] { *out = new lax_graph{locapprox::power(g->value, k)}; });
}

lax_status lax_audit(const lax_graph* g, const lax_dist* q, int* ok, char** report) {
    LAX_REQUIRE(g && q && ok);
    return guarded([&] {
        auto rep = locapprox::deficiency_audit(g->value, q->value);
        *ok = rep.ok();
        set_text(report, locapprox::format_audit_report(rep));
    });
}

lax_status lax_stats(const lax_graph* g, int r, char** table) {
    LAX_REQUIRE(g && table);
    return guarded([&] { set_text(table, locapprox::format_stat_table(locapprox::ball_stats(g->value, r))); });
}

lax_status lax_distance(const lax_graph* g, const lax_graph* h, int R, double* truncated, double* upper,
                        char** report) {
    LAX_REQUIRE(g && h);
    return guarded([&] {
        auto ld = locapprox::local_dist(g->value, h->value, R);
        if (truncated) *truncated = locapprox::to_double(ld.truncated);
        if (upper) *upper = locapprox::to_double(ld.upper);
        set_text(report, locapprox::format_local_distance(ld));
    });
}

lax_status lax_perturbation(const lax_graph* g, const lax_graph* h, int r, int* holds, char** report) {
    LAX_REQUIRE(g && h && holds);
    return guarded([&] {
        auto p = locapprox::perturbation_check(g->value, h->value, r);
        *holds = p.holds;
        set_text(report, locapprox::format_perturbation(p));
    });
}

lax_status lax_scheme_parse(const char* text, lax_scheme** out) {
    LAX_REQUIRE(text && out);
    return guarded([&] { *out = new lax_scheme{locapprox::parse_scheme(text)}; });
}

lax_status lax_scheme_read_file(const char* path, lax_scheme** out) {
    LAX_REQUIRE(path && out);
    return guarded([&] { *out = new lax_scheme{locapprox::read_scheme_file(path)}; });
}

lax_status lax_scheme_write(const lax_scheme* s, char** text) {
    LAX_REQUIRE(s && text);
    return guarded([&] { set_text(text, locapprox::write_scheme(s->value)); });
}

void lax_scheme_free(lax_scheme* s) { delete s; }

lax_status lax_scheme_validate(const lax_scheme* s, int* valid, char** report) {
    LAX_REQUIRE(s && valid);
    return guarded([&] {
        auto v = locapprox::validate_scheme(s->value);
        *valid = v.ok();
        set_text(report, locapprox::format_validation(v));
    });
}

lax_status lax_scheme_apply(const lax_scheme* s, const lax_graph* g, lax_graph** out) {
    LAX_REQUIRE(s && g && out);
    return guarded([&] { *out = new lax_graph{locapprox::apply_scheme(s->value, g->value)}; });
}

lax_status lax_pipeline(const lax_graph* target, const lax_graph* forest, int k, const long long* n_list,
                        size_t n_count, uint64_t seed, double epsilon, char** report) {
    LAX_REQUIRE(target && forest && report && (n_list || n_count == 0));
    return guarded([&] {
        locapprox::PipelineOptions opt;
        opt.k = k;
        opt.n_list.assign(n_list, n_list + n_count);
        opt.seed = seed;
        opt.epsilon = epsilon;
        set_text(report, locapprox::format_pipeline_report(locapprox::pipeline(target->value, forest->value, opt)));
    });
}

}  // extern "C"
