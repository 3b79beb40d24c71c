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


#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "knotalg/algebra.hpp"
#include "knotalg/properties.hpp"
#include "support.hpp"

using namespace knotalg;
using testing_support::field_cases;

TEST_CASE("special biserial conditions hold for both variants of every builtin") {
    for (const auto& name : testing_support::builtin_names()) {
        const SignedQuiver q = build_quiver(builtin(name));
        const auto tau = TauAssignment::constant(q.vertex_count(), Scalar::one(FieldContext::rationals()));
        for (Variant v : {Variant::lambda, Variant::monomial}) {
            CAPTURE(name, to_string(v));
            const BiserialReport r = check_special_biserial(q, relations(q, tau, v));
            CHECK(r.condition1);
            CHECK(r.condition2);
            CHECK(r.condition3);
            CHECK(r.pass());
            CHECK_FALSE(r.witness.has_value());
            for (const auto& deg : r.degrees) {
                CHECK(deg.out == 2);
                CHECK(deg.in == 2);
            }
        }
    }
}

TEST_CASE("a vertex with three outgoing arrows breaks condition 1") {
    PlainQuiver q{2, {{0, 1}, {0, 1}, {0, 1}, {1, 0}}};
    const auto r = check_special_biserial(q, [](const std::vector<ArrowId>&) { return true; });
    CHECK_FALSE(r.condition1);
    CHECK_FALSE(r.pass());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->condition == 1);
    CHECK(r.witness->description.find("vertex 1") != std::string::npos);
}

TEST_CASE("missing monomial relations break conditions 2 and 3") {
    // The kink quiver without any relation: a a and b a are both nonzero.
    const SignedQuiver k = build_quiver(builtin("unknot_1"));
    const auto r = check_special_biserial(PlainQuiver::from(k), [](const std::vector<ArrowId>&) { return false; });
    CHECK(r.condition1);
    CHECK_FALSE(r.condition2);
    CHECK_FALSE(r.condition3);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->condition == 2);

    // Only the type-II binomials: still not biserial, since they are not monomials.
    RelationSet binomials_only = relations(k, TauAssignment::constant(1, Scalar::one(FieldContext::rationals())),
                                           Variant::lambda);
    binomials_only.type_one.clear();
    CHECK_FALSE(check_special_biserial(k, binomials_only).pass());
}

TEST_CASE("kink Frobenius form") {
    const FieldContext f = FieldContext::rational_functions();
    const Scalar q = Scalar::indeterminate(f);
    const SignedQuiver Q = build_quiver(builtin("unknot_1"));
    const DiagramAlgebra A(Q, TauAssignment::constant(1, q), Variant::lambda);
    const FrobeniusData F = frobenius_form(A);
    const std::size_t e = A.index_of(BasisPath::trivial(0));
    const std::size_t g = A.index_of(BasisPath::cycle_plus(0));
    const std::size_t a = A.index_of(BasisPath::follow(Q.outgoing(0, EndSign::plus), 1));
    const std::size_t b = A.index_of(BasisPath::follow(Q.outgoing(0, EndSign::minus), 1));
    CHECK(F.partner[e] == g);
    CHECK(F.partner[g] == e);
    CHECK(F.partner[a] == b);
    CHECK(F.partner[b] == a);
    CHECK(F.gram(g, e) == Scalar::one(f));
    CHECK(F.gram(e, g) == Scalar::one(f));
    CHECK(F.gram(b, a) == Scalar::one(f));
    CHECK(F.gram(a, b) == q);
    CHECK_FALSE(F.gram(a, a).has_value());
    CHECK_FALSE(F.gram(e, e).has_value());

    // t(gamma^+) = 1 and t vanishes on the other basis elements.
    CHECK(trace(A, F, A.element(g, Scalar::one(f))) == Scalar::one(f));
    for (std::size_t i : {e, a, b}) CHECK(trace(A, F, A.element(i, Scalar::one(f))).is_zero());
    CHECK(nakayama_permutation(A, F) == std::vector<VertexId>{0});
    CHECK(check_frobenius(A, F).pass());
}

TEST_CASE("Frobenius form on every builtin and field") {
    for (const auto& name : testing_support::builtin_names()) {
        const SignedQuiver q = build_quiver(builtin(name));
        for (const auto& fc : field_cases()) {
            CAPTURE(name, fc.label);
            const DiagramAlgebra A = testing_support::make_algebra(q, fc, Variant::lambda);
            const FrobeniusData F = frobenius_form(A);
            const FrobeniusReport r = check_frobenius(A, F);
            CHECK(r.bijective);
            CHECK(r.nondegenerate);
            CHECK(r.associative);
            CHECK(r.triples_checked == A.dimension() * A.dimension() * A.dimension());
            CHECK_FALSE(r.witness.has_value());

            // Gram matrix: exactly one nonzero entry in each row and column.
            const std::size_t d = A.dimension();
            std::vector<std::size_t> rows(d, 0), cols(d, 0);
            for (std::size_t j = 0; j < d; ++j) {
                const std::size_t i = F.partner[j];
                REQUIRE(F.gram(i, j).has_value());
                CHECK_FALSE(F.gram(i, j)->is_zero());
                ++rows[i];
                ++cols[j];
            }
            CHECK(std::all_of(rows.begin(), rows.end(), [](std::size_t k) { return k == 1; }));
            CHECK(std::all_of(cols.begin(), cols.end(), [](std::size_t k) { return k == 1; }));

            for (VertexId v = 0; v < q.vertex_count(); ++v)
                CHECK(F.gram(A.index_of(BasisPath::cycle_plus(v)), A.index_of(BasisPath::trivial(v))) ==
                      Scalar::one(A.field()));
        }
    }
}

TEST_CASE("bilinear form agrees with the trace of the product") {
    const SignedQuiver q = build_quiver(builtin("4_1"));
    const DiagramAlgebra A = build_algebra(q);
    const FrobeniusData F = frobenius_form(A);
    for (std::size_t x = 0; x < A.dimension(); ++x) {
        for (std::size_t y = 0; y < A.dimension(); ++y) {
            const AlgebraElement ex = A.element(x, Scalar::one(A.field()));
            const AlgebraElement ey = A.element(y, Scalar::one(A.field()));
            CHECK(bilinear_form(A, F, ex, ey) == trace(A, F, A.multiply(ex, ey)));
        }
    }
}

TEST_CASE("a perturbed Gram coefficient breaks associativity") {
    const SignedQuiver q = build_quiver(builtin("3_1"));
    const DiagramAlgebra A = build_algebra(q);
    FrobeniusData F = frobenius_form(A);
    // Rescale the pairing of one follow path starting on the over-strand.
    const std::size_t i = A.index_of(BasisPath::follow(q.outgoing(0, EndSign::plus), 2));
    F.coefficient[i] = F.coefficient[i] * Scalar::from_integer(A.field(), 3LL);
    const FrobeniusReport r = check_frobenius(A, F);
    CHECK(r.bijective);
    CHECK(r.nondegenerate);
    CHECK_FALSE(r.associative);
    CHECK_FALSE(r.pass());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->find("beta(xy,z)") != std::string::npos);
}

TEST_CASE("a non-bijective pairing is reported") {
    const DiagramAlgebra A = build_algebra(build_quiver(builtin("unknot_1")));
    FrobeniusData F = frobenius_form(A);
    F.partner[1] = F.partner[2];
    const FrobeniusReport r = check_frobenius(A, F);
    CHECK_FALSE(r.bijective);
    CHECK_FALSE(r.pass());
    CHECK(r.witness.has_value());
}

TEST_CASE("Nakayama permutation is a pinned bijection") {
    for (const auto& name : testing_support::builtin_names()) {
        CAPTURE(name);
        const DiagramAlgebra A = build_algebra(build_quiver(builtin(name)));
        const auto nu = nakayama_permutation(A, frobenius_form(A));
        std::vector<VertexId> sorted = nu;
        std::sort(sorted.begin(), sorted.end());
        for (VertexId v = 0; v < sorted.size(); ++v) CHECK(sorted[v] == v);
    }
    const DiagramAlgebra T = build_algebra(build_quiver(builtin("3_1")));
    CHECK(nakayama_permutation(T, frobenius_form(T)) == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("the Frobenius form needs the lambda variant") {
    const DiagramAlgebra M = build_algebra(build_quiver(builtin("3_1")), Variant::monomial);
    CHECK_THROWS_AS(frobenius_form(M), InvalidArgument);
}
