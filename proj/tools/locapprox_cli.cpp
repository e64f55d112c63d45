// SPDX-License-Identifier: Apache-2.0
// locapprox command-line front end. Talks to the library through the C API only.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "locapprox.h"

namespace {

struct Failure {
    lax_status status;
};

void check(lax_status s) {
    if (s != LAX_OK) throw Failure{s};
}

struct GraphDel {
    void operator()(lax_graph* g) const { lax_graph_free(g); }
};
struct DistDel {
    void operator()(lax_dist* q) const { lax_dist_free(q); }
};
struct SchemeDel {
    void operator()(lax_scheme* s) const { lax_scheme_free(s); }
};
using Graph = std::unique_ptr<lax_graph, GraphDel>;
using Dist = std::unique_ptr<lax_dist, DistDel>;
using Scheme = std::unique_ptr<lax_scheme, SchemeDel>;

// Takes ownership of a C string from the library.
std::string take(char* s) {
    if (!s) return {};
    std::string out(s);
    lax_string_free(s);
    return out;
}

Graph load_graph(const std::string& path) {
    lax_graph* g = nullptr;
    check(lax_graph_read_file(path.c_str(), &g));
    return Graph(g);
}

Dist load_dist(const std::string& path) {
    lax_dist* q = nullptr;
    check(lax_dist_read_file(path.c_str(), &q));
    return Dist(q);
}

Scheme load_scheme(const std::string& path) {
    lax_scheme* s = nullptr;
    check(lax_scheme_read_file(path.c_str(), &s));
    return Scheme(s);
}

// Writes text to `path`, or to stdout when path is empty.
void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        throw Failure{LAX_ERR_VALIDATION};
    }
    f << text;
}

std::string graph_text(const lax_graph* g) {
    char* text = nullptr;
    check(lax_graph_write(g, &text));
    return take(text);
}

std::string dist_text(const lax_dist* q) {
    char* text = nullptr;
    check(lax_dist_write(q, &text));
    return take(text);
}

int exit_code(lax_status s) {
    switch (s) {
        case LAX_OK: return 0;
        case LAX_ERR_RESOURCE: return 2;
        case LAX_ERR_INTERNAL: return 3;
        default: return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite local approximation of bounded-degree colored graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(lax_version()));

    int rc = 0;

    // types
    auto* types = app.add_subcommand("types", "Rooted colored tree types");
    types->require_subcommand(1);
    int td = 2, tc = 1, tr = 1;
    auto* t_enum = types->add_subcommand("enum", "List canonical tree types of radius <= r");
    t_enum->add_option("--d", td, "Degree bound")->required();
    t_enum->add_option("--c", tc, "Number of colors")->required();
    t_enum->add_option("--r", tr, "Radius")->required();
    t_enum->callback([&] {
        char* lines = nullptr;
        check(lax_types_enumerate(td, tc, tr, &lines));
        std::cout << take(lines);
    });

    int ak = 0;
    std::string at, atau;
    auto* t_adm = types->add_subcommand("adm", "Number of children of t whose k-ball is tau");
    t_adm->add_option("--d", td, "Degree bound")->required();
    t_adm->add_option("--c", tc, "Number of colors")->required();
    t_adm->add_option("--k", ak, "Radius of tau; t has radius k+1")->required();
    t_adm->add_option("--t", at, "Type at radius k+1")->required();
    t_adm->add_option("--tau", atau, "Type at radius k")->required();
    t_adm->callback([&] {
        long v = 0;
        check(lax_types_adm(td, tc, ak, at.c_str(), atau.c_str(), &v));
        std::cout << "adm: " << v << '\n';
    });

    // dist
    auto* dist = app.add_subcommand("dist", "Type distributions");
    dist->require_subcommand(1);
    std::string dg_in, dg_out;
    int dg_k = 0;
    auto* d_from = dist->add_subcommand("from-graph", "Empirical (k+1)-type distribution of an acyclic-ball graph");
    d_from->add_option("graph", dg_in, "Graph file")->required()->check(CLI::ExistingFile);
    d_from->add_option("--k", dg_k, "k (types have radius k+1)")->required();
    d_from->add_option("-o,--output", dg_out, "Output distribution file (default stdout)");
    d_from->callback([&] {
        auto g = load_graph(dg_in);
        lax_dist* q = nullptr;
        check(lax_dist_from_graph(g.get(), dg_k, &q));
        Dist hold(q);
        emit(dist_text(q), dg_out);
    });

    std::string dc_in;
    auto* d_check = dist->add_subcommand("check", "Unimodularity and adm <= 1 checks");
    d_check->add_option("dist", dc_in, "Distribution file")->required()->check(CLI::ExistingFile);
    d_check->callback([&] {
        auto q = load_dist(dc_in);
        int passed = 0;
        char* report = nullptr;
        check(lax_dist_check(q.get(), &passed, &report));
        std::cout << take(report);
        if (!passed) rc = 1;
    });

    std::string dp_in, dp_out;
    int dp_ell = 0;
    auto* d_proj = dist->add_subcommand("project", "Push a distribution forward to radius ell+1 types");
    d_proj->add_option("dist", dp_in, "Distribution file")->required()->check(CLI::ExistingFile);
    d_proj->add_option("--ell", dp_ell, "Target k")->required();
    d_proj->add_option("-o,--output", dp_out, "Output distribution file (default stdout)");
    d_proj->callback([&] {
        auto q = load_dist(dp_in);
        lax_dist* p = nullptr;
        check(lax_dist_project(q.get(), dp_ell, &p));
        Dist hold(p);
        emit(dist_text(p), dp_out);
    });

    // synth
    std::string s_in, s_out;
    long long s_n = 0;
    std::uint64_t s_seed = 0;
    double s_eps = 0.1;
    auto* synth = app.add_subcommand("synth", "Synthesize a finite high-girth graph realizing a distribution");
    synth->add_option("dist", s_in, "Distribution file")->required()->check(CLI::ExistingFile);
    synth->add_option("--n", s_n, "Requested number of vertices")->required();
    synth->add_option("--seed", s_seed, "Random seed")->capture_default_str();
    synth->add_option("--eps", s_eps, "Epsilon used for the size threshold")->capture_default_str();
    synth->add_option("-o,--output", s_out, "Output graph file (default stdout, report to stderr)");
    synth->callback([&] {
        auto q = load_dist(s_in);
        lax_graph* g = nullptr;
        char* report = nullptr;
        check(lax_synthesize(q.get(), s_n, s_seed, s_eps, &g, &report));
        Graph hold(g);
        std::string rep = take(report);
        if (s_out.empty() || s_out == "-") {
            std::cerr << rep;
            std::cout << graph_text(g);
        } else {
            emit(graph_text(g), s_out);
            std::cout << rep;
        }
    });

    // audit
    std::string au_g, au_q;
    auto* audit = app.add_subcommand("audit", "Independent deficiency recount of a synthesized graph");
    audit->add_option("graph", au_g, "Graph file")->required()->check(CLI::ExistingFile);
    audit->add_option("dist", au_q, "Distribution file")->required()->check(CLI::ExistingFile);
    audit->callback([&] {
        auto g = load_graph(au_g);
        auto q = load_dist(au_q);
        int ok = 0;
        char* report = nullptr;
        check(lax_audit(g.get(), q.get(), &ok, &report));
        std::cout << take(report);
        if (!ok) rc = 1;
    });

    // stats
    std::string st_g;
    int st_r = 1;
    auto* stats = app.add_subcommand("stats", "Empirical r-ball type statistics");
    stats->add_option("graph", st_g, "Graph file")->required()->check(CLI::ExistingFile);
    stats->add_option("--r", st_r, "Ball radius")->required();
    stats->callback([&] {
        auto g = load_graph(st_g);
        char* table = nullptr;
        check(lax_stats(g.get(), st_r, &table));
        std::cout << take(table);
    });

    // distance
    std::string di_g, di_h;
    int di_R = 1;
    auto* distance = app.add_subcommand("distance", "Truncated local distance between two graphs");
    distance->add_option("first", di_g, "First graph file")->required()->check(CLI::ExistingFile);
    distance->add_option("second", di_h, "Second graph file")->required()->check(CLI::ExistingFile);
    distance->add_option("--R", di_R, "Truncation radius")->required();
    distance->callback([&] {
        auto g = load_graph(di_g);
        auto h = load_graph(di_h);
        char* report = nullptr;
        check(lax_distance(g.get(), h.get(), di_R, nullptr, nullptr, &report));
        std::cout << take(report);
    });

    // power
    std::string pw_g, pw_out;
    int pw_k = 1;
    auto* pow = app.add_subcommand("power", "Graph power: join vertices at distance <= k");
    pow->add_option("graph", pw_g, "Graph file")->required()->check(CLI::ExistingFile);
    pow->add_option("--k", pw_k, "Power")->required();
    pow->add_option("-o,--output", pw_out, "Output graph file (default stdout)");
    pow->callback([&] {
        auto g = load_graph(pw_g);
        lax_graph* out = nullptr;
        check(lax_power(g.get(), pw_k, &out));
        Graph hold(out);
        emit(graph_text(out), pw_out);
    });

    // rainbow
    std::string rb_g, rb_out;
    int rb_r = 1;
    auto* rainbow = app.add_subcommand("rainbow", "Greedy distance-2r recoloring");
    rainbow->add_option("graph", rb_g, "Graph file")->required()->check(CLI::ExistingFile);
    rainbow->add_option("--r", rb_r, "Radius")->required();
    rainbow->add_option("-o,--output", rb_out, "Output graph file (default stdout)");
    rainbow->callback([&] {
        auto g = load_graph(rb_g);
        lax_graph* out = nullptr;
        check(lax_rainbow(g.get(), rb_r, &out));
        Graph hold(out);
        emit(graph_text(out), rb_out);
    });

    // interp
    auto* interp = app.add_subcommand("interp", "Local interpretation schemes");
    interp->require_subcommand(1);
    std::string iv_s;
    auto* i_val = interp->add_subcommand("validate", "Check a scheme for well-formedness");
    i_val->add_option("scheme", iv_s, "Scheme file")->required()->check(CLI::ExistingFile);
    i_val->callback([&] {
        auto s = load_scheme(iv_s);
        int valid = 0;
        char* report = nullptr;
        check(lax_scheme_validate(s.get(), &valid, &report));
        std::cout << take(report);
        if (!valid) rc = 1;
    });

    std::string ia_s, ia_g, ia_out;
    auto* i_app = interp->add_subcommand("apply", "Apply a scheme to a graph");
    i_app->add_option("scheme", ia_s, "Scheme file")->required()->check(CLI::ExistingFile);
    i_app->add_option("graph", ia_g, "Graph file")->required()->check(CLI::ExistingFile);
    i_app->add_option("-o,--output", ia_out, "Output graph file (default stdout)");
    i_app->callback([&] {
        auto s = load_scheme(ia_s);
        auto g = load_graph(ia_g);
        lax_graph* out = nullptr;
        check(lax_scheme_apply(s.get(), g.get(), &out));
        Graph hold(out);
        emit(graph_text(out), ia_out);
    });

    // pipeline
    std::string pl_t, pl_f;
    int pl_k = 1;
    std::vector<long long> pl_n;
    std::uint64_t pl_seed = 0;
    double pl_eps = 0.1;
    auto* pipe = app.add_subcommand("pipeline", "Approximate a target graph through a treeing");
    pipe->add_option("target", pl_t, "Target graph file")->required()->check(CLI::ExistingFile);
    pipe->add_option("forest", pl_f, "Spanning forest file")->required()->check(CLI::ExistingFile);
    pipe->add_option("--k", pl_k, "Type radius k")->required();
    pipe->add_option("--n", pl_n, "Synthesis sizes (repeatable)")->required();
    pipe->add_option("--seed", pl_seed, "Random seed")->capture_default_str();
    pipe->add_option("--eps", pl_eps, "Epsilon used for the size threshold")->capture_default_str();
    pipe->callback([&] {
        auto t = load_graph(pl_t);
        auto f = load_graph(pl_f);
        char* report = nullptr;
        check(lax_pipeline(t.get(), f.get(), pl_k, pl_n.data(), pl_n.size(), pl_seed, pl_eps, &report));
        std::cout << take(report);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const Failure& f) {
        std::cerr << "error: " << lax_last_error() << '\n';
        return exit_code(f.status);
    }
    return rc;
}
