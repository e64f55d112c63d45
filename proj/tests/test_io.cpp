// SPDX-License-Identifier: Apache-2.0
#include <sstream>

#include "doctest.h"
#include "locapprox/audit.hpp"
#include "locapprox/interpret.hpp"
#include "locapprox/report.hpp"
#include "locapprox/synthesizer.hpp"
#include "support/generators.hpp"

using namespace locapprox;

namespace {

std::size_t line_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

// Parses `key: value` lines of a report.
std::map<std::string, std::string> keys(const std::string& report) {
    std::map<std::string, std::string> out;
    std::istringstream in(report);
    std::string line;
    while (std::getline(in, line)) {
        auto colon = line.find(": ");
        if (colon != std::string::npos && line.find(' ') > colon) out[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return out;
}

}  // namespace

TEST_CASE("graph files round-trip") {
    testgen::Rng rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testgen::random_graph(rng, 25, 3, 3, 0, 0.8);
        if (trial % 2) g = rainbow_color(g, 1);
        if (trial % 3 == 0) {
            g.marks.assign(g.size(), {});
            g.marks[3] = {"a", "b"};
        }
        auto text = write_graph(g);
        auto back = parse_graph(text);
        CHECK(back == g);
        CHECK(write_graph(back) == text);
    }
    auto [s, rep] = synthesize(
        [] {
            TypeDistribution q;
            q.params = Params{2, 2, 1};
            q.weights.emplace(RootedTreeType::parse(q.params, "1[2[]]"), Rational(1, 2));
            q.weights.emplace(RootedTreeType::parse(q.params, "2[1[]]"), Rational(1, 2));
            return q;
        }(),
        8);
    CHECK(parse_graph(write_graph(s)) == s);
}

TEST_CASE("graph parse errors carry line numbers") {
    CHECK(line_of([] { parse_graph("v 0 1\n"); }) == 1);
    CHECK(line_of([] { parse_graph("graph d=2 c=1\nv 0 1\nv 2 1\n"); }) == 3);
    CHECK(line_of([] { parse_graph("graph d=2 c=1\nv 0 1\nv 1 2\n"); }) == 3);
    CHECK(line_of([] { parse_graph("graph d=1 c=1\nv 0 1\nv 1 1\nv 2 1\ne 0 1\n# note\ne 1 2\n"); }) == 7);
    CHECK(line_of([] { parse_graph("graph d=2 c=1\nv 0 1\ne 0 0\n"); }) == 3);
    CHECK(line_of([] { parse_graph("graph d=2 c=1\nv 0 1 size=3\n"); }) == 2);
    CHECK(line_of([] { parse_graph("graph d=x c=1\n"); }) == 1);
    CHECK(line_of([] { parse_graph(""); }) == 1);
}

TEST_CASE("distribution files round-trip") {
    testgen::Rng rng(72);
    auto q = from_graph(rainbow_color(testgen::random_cubic(rng, 40, 6), 1), 1);
    auto text = write_distribution(q);
    auto back = parse_distribution(text);
    CHECK(back == q);
    CHECK(write_distribution(back) == text);

    auto dec = parse_distribution("dist d=2 c=2 k=0\nt 1[2[]] 0.5\nt 2[1[]] 0.5\n");
    CHECK_FALSE(dec.exact);
    CHECK(dec.weights.begin()->second == Rational(1, 2));
    auto zero = parse_distribution("dist d=2 c=2 k=0\nt 1[2[]] 1/2\nt 2[1[]] 1/2\nt 1[] 0\n");
    CHECK(zero.support_size() == 2);
    auto empty = parse_distribution("dist d=2 c=1 k=-1\nt 1[] 1\n");
    CHECK(empty.k() == -1);

    CHECK(line_of([] { parse_distribution("dist d=2 c=2 k=0\nt 1[2[]] 1/2\nt 2[1[]] 1/2\nt 1[2[]] 0\n"); }) == 4);
    CHECK(line_of([] { parse_distribution("dist d=2 c=2 k=0\nt 1[3[]] 1\n"); }) == 2);
    CHECK(line_of([] { parse_distribution("dist d=2 c=2 k=0\nt 1[2[]] -1/2\n"); }) == 2);
    CHECK(line_of([] { parse_distribution("dist d=2 c=2 k=0\nt 1[2[]] 1/0\n"); }) == 2);
    CHECK(line_of([] { parse_distribution("dist d=2 c=2\n"); }) == 1);
    CHECK_THROWS_AS(parse_distribution("dist d=2 c=2 k=0\nt 1[2[]] 1/3\n"), ValidationError);
}

TEST_CASE("rational parsing") {
    bool exact = false;
    CHECK(parse_rational("3/6", &exact) == Rational(1, 2));
    CHECK(exact);
    CHECK(parse_rational("2") == 2);
    CHECK(parse_rational("0.125", &exact) == Rational(1, 8));
    CHECK_FALSE(exact);
    CHECK(to_string(Rational(2, 4)) == "1/2");
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(ceil(Rational(7, 2)) == 4);
    CHECK(ceil(Rational(-7, 2)) == -3);
    CHECK(ceil(Rational(4)) == 4);
    CHECK_THROWS_AS(parse_rational("1/x"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
}

TEST_CASE("scheme files round-trip") {
    testgen::Rng rng(73);
    for (int trial = 0; trial < 8; ++trial) {
        auto g = rainbow_color(testgen::random_graph(rng, 20, 3, 1, 0, 0.8), 1);
        auto s = trial % 2 ? testgen::random_type_pair_scheme(rng, g, 1) : testgen::random_color_rule_scheme(rng, g, 1);
        auto text = write_scheme(s);
        auto back = parse_scheme(text);
        CHECK(write_scheme(back) == text);
        CHECK(apply_scheme(back, g) == apply_scheme(s, g));
    }

    // catalog balls may use any vertex numbering
    auto s = parse_scheme(
        "scheme r=1 form=typepair\n"
        "ball 0\ngraph d=2 c=1\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 1 2\nend\n"
        "ball 1\ngraph d=2 c=1\nv 0 1\nv 1 1\nv 2 1\ne 1 0\ne 0 2\nend\n"
        "ball 2\ngraph d=1 c=1\nv 0 1\nv 1 1\ne 0 1\nend\n"
        "xi 2\nxi 1\n"
        "eta 0 1\n"
        "eta 1 2   # center pointing at an end\n");
    CHECK(validate_scheme(s).ok());
    CHECK(apply_scheme(s, testgen::path(3)).edge_count() == 2);

    auto cr = parse_scheme("scheme r=3 form=colorrule dout=2 cout=1\n"
                           "legend 1 = (1, {2,4})\nlegend 2 = (2, {1, 3}) xi=1 base=1\n"
                           "legend 3 = (3, {2,4})\nlegend 4 = (4, {1,3})\nmu end 1\n");
    CHECK(cr.output_degree == 2);
    CHECK(std::get<ColorRule>(cr.rule).legend.at(2).neighbors == std::vector<int>{1, 3});
    CHECK(parse_scheme(write_scheme(cr)).marks.size() == 1);

    CHECK(line_of([] { parse_scheme("scheme r=1 form=colorrule\nlegend 1 (1, {2})\n"); }) == 2);
    CHECK(line_of([] { parse_scheme("scheme r=1 form=typepair\nxi 4\n"); }) == 2);
    CHECK(line_of([] { parse_scheme("scheme r=1 form=typepair\nball 0\ngraph d=1 c=1\nv 0 2\nend\n"); }) == 4);
    CHECK(line_of([] { parse_scheme("scheme r=1 form=other\n"); }) == 1);
    CHECK(line_of([] { parse_scheme("scheme r=1 form=typepair\nball 0\ngraph d=1 c=1\n"); }) == 2);
}

TEST_CASE("reports are key-value blocks") {
    TypeDistribution q;
    q.params = Params{2, 2, 1};
    q.weights.emplace(RootedTreeType::parse(q.params, "1[2[]]"), Rational(2, 3));
    q.weights.emplace(RootedTreeType::parse(q.params, "2[1[]]"), Rational(1, 3));
    auto kv = keys(format_residual_report(check_unimodular(q), check_simple_adm(q)));
    CHECK(kv["unimodular"] == "fail");
    CHECK(kv["max_residual"] == "1/3");

    q.weights.begin()->second = Rational(1, 2);
    std::next(q.weights.begin())->second = Rational(1, 2);
    auto [g, rep] = synthesize(q, 10, SynthesisOptions{7});
    auto skv = keys(format_synthesis_report(rep));
    CHECK(skv["seed"] == "7");
    CHECK(skv["bad"] == "0");
    CHECK(skv["girth"] == "inf");
    auto akv = keys(format_audit_report(deficiency_audit(g, q)));
    CHECK(akv["bound_holds"] == "yes");
    CHECK(akv["nonperfect"] == "0");
    auto lkv = keys(format_local_distance(local_dist(g, g, 2)));
    CHECK(lkv["truncated"] == "0");
    CHECK(lkv["truncated_exact"] == "0/1");
}
