/*
   Copyright 2026 The knotalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <algorithm>
#include <random>
#include <string>

#include <catch_amalgamated.hpp>

#include "knotalg/diagram.hpp"
#include "knotalg/quiver.hpp"
#include "support.hpp"

using namespace knotalg;

namespace {

constexpr const char* trefoil_pd = "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)";

/// A Gauss code on c crossings with each label once over and once under, in
/// random order and with random signs. Such codes need not be planar.
std::string random_gauss(std::mt19937& rng, int c) {
    std::vector<std::pair<char, int>> tokens;
    for (int k = 1; k <= c; ++k) {
        tokens.emplace_back('O', k);
        tokens.emplace_back('U', k);
    }
    std::shuffle(tokens.begin(), tokens.end(), rng);
    std::vector<char> sign(static_cast<std::size_t>(c) + 1);
    std::bernoulli_distribution coin(0.5);
    for (auto& s : sign) s = coin(rng) ? '+' : '-';
    std::string out;
    for (auto [role, k] : tokens) out += role + std::to_string(k) + sign[static_cast<std::size_t>(k)];
    return out;
}

void check_degrees(const SignedQuiver& q) {
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        int out_plus = 0, out_minus = 0, in_plus = 0, in_minus = 0;
        for (const SignedArrow& a : q.arrows()) {
            if (a.source == v) (a.source_sign == EndSign::plus ? out_plus : out_minus) += 1;
            if (a.target == v) (a.target_sign == EndSign::plus ? in_plus : in_minus) += 1;
        }
        CHECK(out_plus == 1);
        CHECK(out_minus == 1);
        CHECK(in_plus == 1);
        CHECK(in_minus == 1);
    }
}

/// Length of the orbit of arrow 0 under the successor map, walked by hand.
std::size_t orbit_length(const SignedQuiver& q) {
    std::size_t len = 0;
    ArrowId a = 0;
    do {
        const SignedArrow& cur = q.arrow(a);
        ArrowId next = q.arrow_count();
        for (const SignedArrow& b : q.arrows())
            if (b.source == cur.target && b.source_sign == cur.target_sign) next = b.id;
        REQUIRE(next < q.arrow_count());
        a = next;
        ++len;
    } while (a != 0 && len <= q.arrow_count());
    return len;
}

}  // namespace

TEST_CASE("trefoil quiver has three vertices and one six-cycle of arrows") {
    const SignedQuiver q = build_quiver(parse_pd(trefoil_pd));
    CHECK(q.vertex_count() == 3);
    CHECK(q.arrow_count() == 6);
    CHECK(orbit_length(q) == 6);
    check_degrees(q);
}

TEST_CASE("kink quiver is two loops with opposite sign patterns") {
    const SignedQuiver q = build_quiver(builtin("unknot_1"));
    REQUIRE(q.vertex_count() == 1);
    REQUIRE(q.arrow_count() == 2);
    std::vector<std::pair<EndSign, EndSign>> patterns;
    for (const SignedArrow& a : q.arrows()) {
        CHECK(a.source == 0);
        CHECK(a.target == 0);
        patterns.emplace_back(a.source_sign, a.target_sign);
    }
    std::sort(patterns.begin(), patterns.end());
    CHECK(patterns[0] == std::pair{EndSign::plus, EndSign::minus});
    CHECK(patterns[1] == std::pair{EndSign::minus, EndSign::plus});

    const ArrowId a = q.outgoing(0, EndSign::plus);
    const ArrowId b = q.outgoing(0, EndSign::minus);
    CHECK(q.alpha(0) == FollowPath{a, 1});
    CHECK(q.beta(0) == FollowPath{b, 1});
    CHECK(q.arrows_of(q.fundamental_cycle(0, EndSign::plus)) == std::vector<ArrowId>{a, b});
    CHECK(q.arrows_of(q.fundamental_cycle(0, EndSign::minus)) == std::vector<ArrowId>{b, a});
}

TEST_CASE("figure-eight quiver has four vertices and eight arrows") {
    const SignedQuiver q = build_quiver(builtin("4_1"));
    CHECK(q.vertex_count() == 4);
    CHECK(q.arrow_count() == 8);
    for (VertexId e = 0; e < 4; ++e) {
        CHECK(q.fundamental_cycle(e, EndSign::plus).length == 8);
        CHECK(q.fundamental_cycle(e, EndSign::minus).length == 8);
    }
}

TEST_CASE("length lemma holds at every vertex of every builtin") {
    for (const auto& name : testing_support::builtin_names()) {
        CAPTURE(name);
        const SignedQuiver q = build_quiver(builtin(name));
        const std::size_t n = q.arrow_count();
        CHECK(n == 2 * q.vertex_count());
        for (VertexId e = 0; e < q.vertex_count(); ++e) {
            const FollowPath al = q.alpha(e);
            const FollowPath be = q.beta(e);
            CHECK(al.length + be.length == n);
            CHECK(q.arrow(al.first).source_sign == EndSign::plus);
            CHECK(q.arrow(q.last_arrow(al)).target_sign == EndSign::minus);
            CHECK(q.arrow(be.first).source_sign == EndSign::minus);
            CHECK(q.arrow(q.last_arrow(be)).target_sign == EndSign::plus);
            CHECK(q.source(al) == e);
            CHECK(q.target(al) == e);
            CHECK(q.source(be) == e);
            CHECK(q.target(be) == e);
            // alpha then beta continues along the diagram without a gap.
            CHECK(q.successor(q.last_arrow(al)) == be.first);
            CHECK(q.successor(q.last_arrow(be)) == al.first);
            for (EndSign s : {EndSign::plus, EndSign::minus}) {
                const FollowPath g = q.fundamental_cycle(e, s);
                CHECK(g.length == n);
                CHECK(q.source(g) == e);
                CHECK(q.target(g) == e);
            }
        }
    }
}

TEST_CASE("a follow path of full length closes up at every arrow") {
    for (const auto& name : testing_support::builtin_names()) {
        CAPTURE(name);
        const SignedQuiver q = build_quiver(builtin(name));
        const std::size_t n = q.arrow_count();
        CHECK(orbit_length(q) == n);
        for (ArrowId a = 0; a < n; ++a) {
            const FollowPath p{a, n};
            CHECK(q.target(p) == q.arrow(a).source);
            CHECK(q.advance(a, n) == a);
            const auto arrows = q.arrows_of(p);
            for (std::size_t k = 0; k + 1 < arrows.size(); ++k) {
                const SignedArrow& x = q.arrow(arrows[k]);
                const SignedArrow& y = q.arrow(arrows[k + 1]);
                CHECK(x.target == y.source);
                CHECK(x.target_sign == y.source_sign);
            }
        }
    }
}

TEST_CASE("degree invariant on builtins") {
    for (const auto& name : testing_support::builtin_names()) {
        CAPTURE(name);
        check_degrees(build_quiver(builtin(name)));
    }
}

TEST_CASE("degree invariant and length lemma on random Gauss codes") {
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<int> size(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::string code = random_gauss(rng, size(rng));
        CAPTURE(code);
        const SignedQuiver q = build_quiver(parse_gauss(code));
        check_degrees(q);
        CHECK(orbit_length(q) == q.arrow_count());
        for (VertexId e = 0; e < q.vertex_count(); ++e)
            CHECK(q.alpha(e).length + q.beta(e).length == q.arrow_count());
    }
}

TEST_CASE("synthetic quivers that break the invariants are rejected") {
    using E = EndSign;
    // Two + sources at one vertex.
    CHECK_THROWS_AS(SignedQuiver(1, {{0, 0, E::plus, 0, E::minus, 0}, {1, 0, E::plus, 0, E::plus, 0}}),
                    InvalidArgument);
    // Two loops at each of two vertices: the successor map has two cycles.
    CHECK_THROWS_AS(SignedQuiver(2, {{0, 0, E::plus, 0, E::minus, 0},
                                     {1, 0, E::minus, 0, E::plus, 0},
                                     {2, 1, E::plus, 1, E::minus, 0},
                                     {3, 1, E::minus, 1, E::plus, 0}}),
                    InvalidArgument);
    const SignedQuiver ok(1, {{0, 0, E::plus, 0, E::minus, 0}, {1, 0, E::minus, 0, E::plus, 0}});
    CHECK(ok.arrow_count() == 2);
    CHECK_THROWS_AS(ok.alpha(1), InvalidArgument);
}

TEST_CASE("DOT export of the kink") {
    const SignedQuiver q = build_quiver(builtin("unknot_1"));
    const std::string dot = q.to_dot();
    CHECK(dot.rfind("digraph Q {", 0) == 0);
    CHECK(dot.find("v1 [label=\"1\"]") != std::string::npos);
    CHECK(dot.find("v1 -> v1 [label=\"1: +-\"]") != std::string::npos);
    CHECK(dot.find("v1 -> v1 [label=\"2: -+\"]") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 5);
}

TEST_CASE("DOT export of the trefoil is deterministic") {
    const std::string first = build_quiver(parse_pd(trefoil_pd)).to_dot();
    const std::string second = build_quiver(parse_pd(trefoil_pd)).to_dot();
    CHECK(first == second);
    std::size_t edges = 0;
    for (std::size_t pos = first.find("->"); pos != std::string::npos; pos = first.find("->", pos + 1)) ++edges;
    CHECK(edges == 6);
    CHECK(first.find("v3 [label=\"3\"]") != std::string::npos);
}
