// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "locapprox.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    lax_string_free(s);
    return out;
}

const char* kMatching = "dist d=2 c=2 k=0\nt 1[2[]] 1/2\nt 2[1[]] 1/2\n";
const char* kLopsided = "dist d=2 c=2 k=0\nt 1[2[]] 2/3\nt 2[1[]] 1/3\n";

}  // namespace

TEST_CASE("version and errors") {
    CHECK(std::string(lax_version()).size() > 0);
    lax_graph* g = nullptr;
    CHECK(lax_graph_parse("graph d=2 c=1\nv 0 3\n", &g) == LAX_ERR_VALIDATION);
    CHECK(g == nullptr);
    CHECK(std::string(lax_last_error()).find("line 2") != std::string::npos);
    CHECK(lax_graph_parse(nullptr, &g) == LAX_ERR_ARGUMENT);
    CHECK(lax_graph_read_file("/nonexistent/graph.txt", &g) == LAX_ERR_VALIDATION);
    char* text = nullptr;
    CHECK(lax_types_enumerate(3, 5, 4, &text) == LAX_ERR_RESOURCE);
    CHECK(text == nullptr);
    lax_graph_free(nullptr);
    lax_string_free(nullptr);
}

TEST_CASE("graphs") {
    lax_graph* g = nullptr;
    REQUIRE(lax_graph_parse("graph d=2 c=1\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 1 2\ne 2 0\n", &g) == LAX_OK);
    CHECK(lax_graph_vertex_count(g) == 3);
    CHECK(lax_graph_edge_count(g) == 3);
    long gi = 0;
    CHECK(lax_graph_girth(g, &gi) == LAX_OK);
    CHECK(gi == 3);
    char* id = nullptr;
    CHECK(lax_extract_ball(g, 0, 1, &id) == LAX_OK);
    CHECK(take(id).front() == 'g');
    char* text = nullptr;
    REQUIRE(lax_graph_write(g, &text) == LAX_OK);
    lax_graph* back = nullptr;
    CHECK(lax_graph_parse(text, &back) == LAX_OK);
    char* again = nullptr;
    CHECK(lax_graph_write(back, &again) == LAX_OK);
    CHECK(take(text) == take(again));

    lax_graph *p = nullptr, *rb = nullptr;
    CHECK(lax_power(g, 1, &p) == LAX_OK);
    CHECK(lax_graph_edge_count(p) == 3);
    CHECK(lax_rainbow(g, 1, &rb) == LAX_OK);
    lax_graph_free(rb);
    lax_graph_free(p);
    lax_graph_free(back);
    lax_graph_free(g);
}

TEST_CASE("types") {
    char* text = nullptr;
    REQUIRE(lax_types_enumerate(2, 1, 1, &text) == LAX_OK);
    CHECK(take(text) == "1[1[],1[]]\n1[1[]]\n1[]\n");
    REQUIRE(lax_types_count(2, 2, 1, &text) == LAX_OK);
    CHECK(take(text) == "12");
    REQUIRE(lax_types_canonical(2, 3, 1, "1[3[],2[]]", &text) == LAX_OK);
    CHECK(take(text) == "1[2[],3[]]");
    REQUIRE(lax_types_truncate(2, 1, 2, "1[1[1[]]]", 1, &text) == LAX_OK);
    CHECK(take(text) == "1[1[]]");
    long a = -1;
    CHECK(lax_types_adm(2, 3, 1, "1[2[3[]]]", "2[1[],3[]]", &a) == LAX_OK);
    CHECK(a == 1);
    CHECK(lax_types_adm(2, 3, 1, "1[2[3[]]]", "2[3[]]", &a) == LAX_OK);
    CHECK(a == 0);
    CHECK(lax_types_adm(2, 3, 1, "1[2[3[]]", "2[3[]]", &a) == LAX_ERR_VALIDATION);
}

TEST_CASE("distributions, synthesis and audit") {
    lax_dist *q = nullptr, *bad = nullptr;
    REQUIRE(lax_dist_parse(kMatching, &q) == LAX_OK);
    REQUIRE(lax_dist_parse(kLopsided, &bad) == LAX_OK);
    int passed = -1;
    char* report = nullptr;
    CHECK(lax_dist_check(q, &passed, &report) == LAX_OK);
    CHECK(passed == 1);
    lax_string_free(report);
    CHECK(lax_dist_check(bad, &passed, &report) == LAX_OK);
    CHECK(passed == 0);
    CHECK(take(report).find("max_residual: 1/3") != std::string::npos);

    double n = 0;
    CHECK(lax_threshold_n(2, 2, 0, 0.1, &n) == LAX_OK);
    CHECK(n == doctest::Approx(800));

    lax_graph* g = nullptr;
    CHECK(lax_synthesize(bad, 10, 7, 0.1, &g, nullptr) == LAX_ERR_VALIDATION);
    REQUIRE(lax_synthesize(q, 10, 7, 0.1, &g, &report) == LAX_OK);
    CHECK(take(report).find("seed: 7") != std::string::npos);
    CHECK(lax_graph_edge_count(g) == 5);
    int ok = 0;
    CHECK(lax_audit(g, q, &ok, &report) == LAX_OK);
    CHECK(ok == 1);
    CHECK(take(report).find("bad: 0") != std::string::npos);

    lax_dist *fg = nullptr, *proj = nullptr;
    REQUIRE(lax_dist_from_graph(g, 0, &fg) == LAX_OK);
    char *a = nullptr, *b = nullptr;
    lax_dist_write(fg, &a);
    lax_dist_write(q, &b);
    CHECK(take(a) == take(b));
    REQUIRE(lax_dist_project(q, 0, &proj) == LAX_OK);
    lax_dist_write(proj, &a);
    CHECK(take(a) == "dist d=2 c=2 k=-1\nt 1[] 1/2\nt 2[] 1/2\n");

    CHECK(lax_stats(g, 1, &report) == LAX_OK);
    CHECK(take(report).find("stat ") != std::string::npos);
    double trunc = -1, upper = -1;
    CHECK(lax_distance(g, g, 3, &trunc, &upper, nullptr) == LAX_OK);
    CHECK(trunc == 0);
    CHECK(upper == doctest::Approx(0.125));
    int holds = 0;
    CHECK(lax_perturbation(g, g, 2, &holds, nullptr) == LAX_OK);
    CHECK(holds == 1);

    lax_dist_free(proj);
    lax_dist_free(fg);
    lax_graph_free(g);
    lax_dist_free(bad);
    lax_dist_free(q);
}

TEST_CASE("schemes and pipeline") {
    lax_scheme* s = nullptr;
    REQUIRE(lax_scheme_parse("scheme r=1 form=typepair\n"
                             "ball 0\ngraph d=2 c=1\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 1 2\nend\n"
                             "ball 1\ngraph d=2 c=1\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 0 2\nend\n"
                             "ball 2\ngraph d=1 c=1\nv 0 1\nv 1 1\ne 0 1\nend\n"
                             "xi 1\nxi 2\neta 0 1\neta 1 1\n",
                             &s) == LAX_OK);
    int valid = 0;
    CHECK(lax_scheme_validate(s, &valid, nullptr) == LAX_OK);
    CHECK(valid == 1);
    lax_graph *p3 = nullptr, *p4 = nullptr, *out = nullptr;
    lax_graph_parse("graph d=2 c=1\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 1 2\n", &p3);
    lax_graph_parse("graph d=2 c=1\nv 0 1\nv 1 1\nv 2 1\nv 3 1\ne 0 1\ne 1 2\ne 2 3\n", &p4);
    CHECK(lax_scheme_apply(s, p3, &out) == LAX_OK);
    CHECK(lax_graph_edge_count(out) == 2);
    lax_graph_free(out);
    out = nullptr;
    CHECK(lax_scheme_apply(s, p4, &out) == LAX_ERR_SCHEME);
    CHECK(out == nullptr);
    char* text = nullptr;
    CHECK(lax_scheme_write(s, &text) == LAX_OK);
    CHECK(take(text).rfind("scheme r=1 form=typepair", 0) == 0);

    lax_graph *target = nullptr, *forest = nullptr;
    lax_graph_parse("graph d=2 c=1\nv 0 1\nv 1 1\nv 2 1\nv 3 1\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n", &target);
    const long long ns[] = {400};
    char* report = nullptr;
    REQUIRE(lax_pipeline(target, p4, 2, ns, 1, 5, 0.1, &report) == LAX_OK);
    std::string rep = take(report);
    CHECK(rep.find("source_reconstruction: exact") != std::string::npos);
    CHECK(rep.find("r: 3") != std::string::npos);
    CHECK(rep.find("seed: 5") != std::string::npos);
    CHECK(lax_pipeline(target, target, 2, ns, 1, 5, 0.1, &report) == LAX_ERR_VALIDATION);

    lax_graph_free(forest);
    lax_graph_free(target);
    lax_graph_free(p4);
    lax_graph_free(p3);
    lax_scheme_free(s);
}
