// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <set>

#include "doctest.h"
#include "locapprox/tree_types.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace locapprox;

namespace {

RootedTreeType T(int d, int c, int r, const char* enc) { return RootedTreeType::parse(Params{d, c, r}, enc); }

TreeNode random_tree(testgen::Rng& rng, int d, int c, int r, bool root = true) {
    TreeNode n{testgen::uniform_int(rng, 1, c), {}};
    if (r == 0) return n;
    int kids = testgen::uniform_int(rng, 0, root ? d : d - 1);
    for (int i = 0; i < kids; ++i) n.children.push_back(random_tree(rng, d, c, r - 1, false));
    return n;
}

void shuffle_children(TreeNode& n, testgen::Rng& rng) {
    std::shuffle(n.children.begin(), n.children.end(), rng);
    for (auto& ch : n.children) shuffle_children(ch, rng);
}

}  // namespace

TEST_CASE("canonical encodings") {
    CHECK(T(2, 3, 1, "1[]").encoding() == "1[]");
    CHECK(T(2, 3, 1, "1[3[],2[]]").encoding() == "1[2[],3[]]");
    CHECK(T(3, 1, 2, "1[1[1[]],1[]]").encoding() == T(3, 1, 2, "1[1[],1[1[]]]").encoding());

    CHECK_THROWS_AS(T(2, 1, 1, "1[1[],1[],1[]]"), ValidationError);  // root degree
    CHECK_THROWS_AS(T(2, 1, 2, "1[1[1[],1[]]]"), ValidationError);   // inner degree d-1
    CHECK_THROWS_AS(T(2, 1, 1, "1[1[1[]]]"), ValidationError);       // depth
    CHECK_THROWS_AS(T(2, 2, 1, "3[]"), ValidationError);             // color
    CHECK_THROWS_AS(T(2, 2, 1, "1[2[]"), ValidationError);           // syntax
}

TEST_CASE("random child orders give identical encodings") {
    testgen::Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        TreeNode t = random_tree(rng, 3, 3, 3);
        TreeNode u = t;
        shuffle_children(u, rng);
        Params p{3, 3, 3};
        auto a = canonical_tree(t, p), b = canonical_tree(u, p);
        CHECK(a == b);
        // idempotence
        CHECK(RootedTreeType::parse(p, a.encoding()).encoding() == a.encoding());
        CHECK(encode_tree(a.tree()) == a.encoding());
    }
}

TEST_CASE("enumeration matches the parent-array oracle") {
    auto enc = [](int d, int c, int r) {
        std::vector<std::string> out;
        for (const auto& t : enumerate_tree_types(Params{d, c, r})) out.push_back(t.encoding());
        return out;
    };
    CHECK(enc(2, 1, 1) == std::vector<std::string>{"1[1[],1[]]", "1[1[]]", "1[]"});
    CHECK(enc(2, 1, 2).size() == 6);
    CHECK(enc(1, 1, 5) == std::vector<std::string>{"1[1[]]", "1[]"});

    const int cases[][3] = {{2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {3, 2, 1}, {2, 2, 3}, {3, 1, 3}, {1, 3, 4}, {4, 1, 2}};
    for (const auto& cs : cases) {
        const int d = cs[0], c = cs[1], r = cs[2];
        CAPTURE(d);
        CAPTURE(c);
        CAPTURE(r);
        auto ours = enumerate_tree_types(Params{d, c, r});
        CHECK(static_cast<long long>(ours.size()) == oracle::count_rooted_trees(d, c, r));
        CHECK(count_tree_types(Params{d, c, r}) == BigInt(ours.size()));
        std::set<std::string> mine;
        for (const auto& t : ours) mine.insert(t.encoding());
        for (const auto& s : oracle::rooted_tree_strings(d, c, r)) CHECK(mine.count(T(d, c, r, s.c_str()).encoding()));
    }
}

TEST_CASE("type counts and caps") {
    CHECK(count_tree_types(Params{2, 2, 0}) == 2);
    CHECK(count_tree_types(Params{2, 2, 1}) == 12);
    CHECK(count_tree_types(Params{3, 4, 1}) == 140);
    CHECK_THROWS_AS(enumerate_tree_types(Params{3, 4, 3}, 1000), ResourceError);
    CHECK_THROWS_AS(count_tree_types(Params{3, 5, 40}), ResourceError);
}

TEST_CASE("truncation") {
    CHECK(truncate(T(2, 1, 2, "1[1[1[]]]"), 1).encoding() == "1[1[]]");
    CHECK(truncate(T(2, 1, 2, "1[1[]]"), 2).encoding() == "1[1[]]");
    for (const auto& t : enumerate_tree_types(Params{2, 2, 3})) {
        CHECK(truncate(truncate(t, 2), 1) == truncate(t, 1));
        CHECK(truncate(t, 3) == t);
        CHECK(truncate(t, 0).encoding() == std::to_string(t.root_color()) + "[]");
    }
}

TEST_CASE("adm") {
    CHECK(adm(T(2, 2, 1, "1[2[]]"), T(2, 2, 0, "2[]")) == 1);
    CHECK(adm(T(2, 3, 2, "1[2[3[]]]"), T(2, 3, 1, "2[1[],3[]]")) == 1);
    CHECK(adm(T(2, 3, 2, "1[2[3[]]]"), T(2, 3, 1, "2[3[]]")) == 0);
    CHECK(adm(T(2, 1, 1, "1[1[],1[]]"), T(2, 1, 0, "1[]")) == 2);
    CHECK_THROWS_AS(adm(T(2, 1, 1, "1[1[]]"), T(2, 1, 1, "1[]")), ValidationError);

    // row sums equal the root degree
    for (const auto& t : enumerate_tree_types(Params{3, 2, 2})) {
        int sum = 0;
        for (const auto& tau : enumerate_tree_types(Params{3, 2, 1})) sum += adm(t, tau);
        CHECK(sum == t.root_degree());
    }
}

TEST_CASE("extract_ball") {
    auto c6 = testgen::cycle(6);
    for (int v = 0; v < 6; ++v) CHECK(extract_ball(c6, v, 2).id == "1[1[1[]],1[1[]]]");
    auto c5 = testgen::cycle(5);
    BallType b = extract_ball(c5, 0, 2);
    CHECK_FALSE(b.is_tree());
    CHECK(ball_representative(b.id).size() == 5);
    ColoredGraph one(2, 1);
    one.add_vertex(1);
    CHECK(extract_ball(one, 0, 7).id == "1[]");
    CHECK_THROWS_AS(extract_ball(one, 1, 1), ValidationError);

    // acyclic whenever girth exceeds 2r+1
    testgen::Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testgen::random_graph(rng, 40, 3, 2, 6);
        auto gi = girth(g);
        REQUIRE((!gi || *gi >= 6));
        for (int v = 0; v < 40; ++v) CHECK(extract_ball(g, v, 2).is_tree());
    }
}
