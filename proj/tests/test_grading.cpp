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


#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "knotalg/algebra.hpp"
#include "knotalg/grading.hpp"
#include "knotalg/group.hpp"
#include "support.hpp"

using namespace knotalg;

namespace {

GroupWord x(std::size_t g, int e = 1) { return GroupWord::generator(g, e); }

Permutation perm(std::vector<std::uint8_t> one_based) {
    for (auto& v : one_based) --v;
    return Permutation(std::move(one_based));
}

/// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> symmetric_group(std::size_t n) {
    std::vector<std::uint8_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>(i);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

struct Graded {
    Diagram diagram;
    SignedQuiver quiver;
    DiagramAlgebra algebra;
    WirtingerPresentation presentation;
    DegreeAssignment degrees;

    explicit Graded(const std::string& name)
        : diagram(builtin(name)),
          quiver(build_quiver(diagram)),
          algebra(build_algebra(quiver)),
          presentation(wirtinger(diagram)),
          degrees(arrow_degrees(quiver, diagram)) {}
};

}  // namespace

TEST_CASE("free reduction and word arithmetic") {
    const GroupWord w = x(0) * x(1) * x(1, -1) * x(2, -1);
    CHECK(w == x(0) * x(2, -1));
    CHECK(w.to_string() == "x1 x3^-1");
    CHECK((w * w.inverse()).empty());
    CHECK(GroupWord{}.to_string() == "1");
    CHECK(x(1, 3).size() == 3);
    CHECK(x(1, 3).exponent_sum(1) == 3);
    CHECK(commutator(x(0), x(0)).empty());
    CHECK(commutator(x(0), x(1)).to_string() == "x1 x2 x1^-1 x2^-1");
    CHECK_THROWS_AS(GroupWord(std::vector<Letter>{{0, 2}}), InvalidArgument);
    for (std::size_t k = 1; k < w.letters().size(); ++k) {
        const Letter& a = w.letters()[k - 1];
        const Letter& b = w.letters()[k];
        CHECK_FALSE((a.gen == b.gen && a.exp == -b.exp));
    }
}

TEST_CASE("permutation composition applies the right factor first") {
    const Permutation a = perm({2, 1, 3});  // (1 2)
    const Permutation b = perm({1, 3, 2});  // (2 3)
    CHECK((a * b)(2) == 0);  // 0-based: 2 -> 1 -> 0
    CHECK((a * b).to_string() == "[2,3,1]");
    CHECK((a * a).is_identity());
    CHECK((a * b).inverse() == b * a);
    CHECK((a * b).cycle_type() == std::vector<std::size_t>{3});
    CHECK(a.cycle_type() == std::vector<std::size_t>{1, 2});
    CHECK_THROWS_AS(perm({1, 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(Permutation::identity(3) * Permutation::identity(4), InvalidArgument);
    CHECK(subgroup_order({a, b}, 3) == 6);
    CHECK(subgroup_order({a}, 3) == 2);
    CHECK(subgroup_order({}, 3) == 1);
}

TEST_CASE("Stallings membership") {
    const StallingsGraph h({x(0, 2), x(1) * x(0) * x(1, -1)});
    CHECK(h.contains(GroupWord{}));
    CHECK(h.contains(x(0, 4)));
    CHECK(h.contains(x(0, -2) * x(1) * x(0, -1) * x(1, -1)));
    CHECK_FALSE(h.contains(x(0)));
    CHECK_FALSE(h.contains(x(1)));
    // <a b, b> contains a after folding.
    const StallingsGraph g({x(0) * x(1), x(1)});
    CHECK(g.contains(x(0)));
    CHECK(g.vertex_count() == 1);
}

TEST_CASE("trefoil Wirtinger presentation and the three-colouring") {
    const Graded t("3_1");
    const auto& p = t.presentation;
    REQUIRE(p.generator_count == 3);
    REQUIRE(p.relations.size() == 3);
    for (const auto& r : p.relations) {
        CHECK(r.sign == Sign::negative);
        CHECK(r.relator.size() == 4);
        CHECK(r.relator.total_exponent() == 0);
    }
    const Representation s3{3, {perm({2, 1, 3}), perm({1, 3, 2}), perm({3, 2, 1})}};
    CHECK(s3.satisfies(p));
    // Any two generators are conjugate, so the abelian quotient is cyclic:
    // a representation into S3 that sends two generators to different
    // transpositions and the third to the identity breaks a relator.
    const Representation bad{3, {perm({2, 1, 3}), perm({1, 3, 2}), Permutation::identity(3)}};
    CHECK_FALSE(bad.satisfies(p));
}

TEST_CASE("kink relator reduces to the empty word") {
    const Graded k("unknot_1");
    REQUIRE(k.presentation.relations.size() == 1);
    CHECK(k.presentation.generator_count == 1);
    CHECK(k.presentation.relations[0].relator.empty());
}

TEST_CASE("relators have zero exponent sum in every generator's abelian image") {
    for (const auto& name : testing_support::builtin_names()) {
        CAPTURE(name);
        const Graded g(name);
        CHECK(g.presentation.relations.size() == g.diagram.crossing_count());
        for (const auto& r : g.presentation.relations) {
            CHECK(r.relator.total_exponent() == 0);
            CHECK(r.relator.size() <= 4);
        }
    }
}

TEST_CASE("arrow degrees follow the crossing-sign rule") {
    for (const auto& name : testing_support::builtin_names()) {
        CAPTURE(name);
        const Graded g(name);
        for (const SignedArrow& a : g.quiver.arrows()) {
            const bool same = g.diagram.crossing(a.source).sign == g.diagram.crossing(a.target).sign;
            if (same)
                CHECK(g.degrees.arrow[a.id] == x(a.arc));
            else
                CHECK(g.degrees.arrow[a.id].empty());
        }
    }
    // The figure-eight has crossings of both signs, so some arrows are ungraded.
    const Graded f("4_1");
    std::size_t identity = 0;
    for (const auto& d : f.degrees.arrow) identity += d.empty();
    CHECK(identity > 0);
    CHECK(identity < f.degrees.arrow.size());
}

TEST_CASE("path degrees are multiplicative") {
    const Graded g("6_2");
    const std::size_t n = g.quiver.arrow_count();
    for (ArrowId a = 0; a < n; ++a) {
        for (std::size_t len = 2; len <= n; ++len) {
            const GroupWord whole = path_degree(g.degrees, g.quiver, FollowPath{a, len});
            for (std::size_t cut = 1; cut < len; ++cut) {
                const GroupWord first = path_degree(g.degrees, g.quiver, FollowPath{a, cut});
                const GroupWord second = path_degree(g.degrees, g.quiver, FollowPath{g.quiver.advance(a, cut), len - cut});
                CHECK(whole == second * first);
            }
            std::vector<ArrowId> raw;
            for (std::size_t k = len; k-- > 0;) raw.push_back(g.quiver.advance(a, k));
            CHECK(path_degree(g.degrees, raw) == whole);
        }
    }
}

TEST_CASE("closed-walk exponent sums count the graded arrows traversed") {
    for (const auto& name : testing_support::builtin_names()) {
        CAPTURE(name);
        const Graded g(name);
        const auto walks = fundamental_walks(g.quiver, g.degrees);
        CHECK(walks.size() == g.quiver.arrow_count() - g.quiver.vertex_count() + 1);
        for (const auto& w : walks) {
            int signed_count = 0;
            std::map<std::size_t, int> per_generator;
            for (const WalkStep& s : w.steps) {
                if (g.degrees.arrow[s.arrow].empty()) continue;
                signed_count += s.forward ? 1 : -1;
                per_generator[g.quiver.arrow(s.arrow).arc] += s.forward ? 1 : -1;
            }
            CHECK(w.degree.total_exponent() == signed_count);
            for (const auto& [gen, count] : per_generator) CHECK(w.degree.exponent_sum(gen) == count);
            CHECK(walk_degree(g.degrees, reverse_walk(w.steps)) == w.degree.inverse());
            // The walk starts and ends at the base vertex.
            const WalkStep& first = w.steps.front();
            const WalkStep& last = w.steps.back();
            const SignedArrow& fa = g.quiver.arrow(first.arrow);
            const SignedArrow& la = g.quiver.arrow(last.arrow);
            CHECK((first.forward ? fa.source : fa.target) == 0);
            CHECK((last.forward ? la.target : la.source) == 0);
        }
    }
}

TEST_CASE("representation enumeration is sound and matches brute force") {
    for (const char* name : {"3_1", "4_1"}) {
        CAPTURE(name);
        const Graded g(name);
        const auto reps = enumerate_representations(g.presentation, 4);
        CHECK(reps.complete);
        std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> found;
        for (const auto& r : reps.reps) {
            CHECK(r.satisfies(g.presentation));
            CHECK_FALSE(r.images[0].is_identity());
            ++found[{r.degree, r.images[0].key()}];
        }
        // Brute force over S3 and S4 for each fixed image of x1 used above.
        for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
            const auto group = symmetric_group(n);
            std::map<std::vector<std::size_t>, std::uint64_t> class_rep;
            for (const auto& [k, count] : found)
                if (k.first == n)
                    for (const auto& p : group)
                        if (p.key() == k.second) class_rep[p.cycle_type()] = p.key();
            for (const auto& x0 : group) {
                if (x0.is_identity()) continue;
                const auto it = class_rep.find(x0.cycle_type());
                if (it != class_rep.end() && it->second != x0.key()) continue;
                std::size_t count = 0;
                std::vector<std::size_t> idx(g.presentation.generator_count - 1, 0);
                while (true) {
                    Representation r{n, {x0}};
                    for (auto i : idx) r.images.push_back(group[i]);
                    count += r.satisfies(g.presentation);
                    std::size_t k = 0;
                    while (k < idx.size() && ++idx[k] == group.size()) idx[k++] = 0;
                    if (k == idx.size()) break;
                }
                if (it == class_rep.end()) {
                    CHECK(count == 0);
                } else {
                    CHECK(found[{n, x0.key()}] == count);
                }
            }
        }
    }
}

TEST_CASE("decide_trivial on simple words") {
    const Graded t("3_1");
    const Budgets b;
    CHECK(std::holds_alternative<ProvedTrivial>(decide_trivial(GroupWord{}, t.presentation, b)));
    CHECK(std::get<ProvedTrivial>(decide_trivial(GroupWord{}, t.presentation, b)).factors.empty());

    const GroupWord r = t.presentation.relations[1].relator;
    const GroupWord conj = x(2) * x(0, -1) * r.inverse() * x(0) * x(2, -1);
    const Certificate c = decide_trivial(conj, t.presentation, b);
    REQUIRE(std::holds_alternative<ProvedTrivial>(c));
    CHECK(verify_certificate(c, conj, t.presentation));

    const Certificate g = decide_trivial(x(0), t.presentation, b);
    REQUIRE(std::holds_alternative<ProvedNontrivial>(g));
    CHECK(verify_certificate(g, x(0), t.presentation));
    CHECK_FALSE(verify_certificate(g, x(0) * x(0), t.presentation));
    CHECK(certificate_kind(g) == std::string("proved-nontrivial"));
    CHECK_FALSE(verify_certificate(Inconclusive{"x"}, x(0), t.presentation));

    // A tampered factor list no longer multiplies out to the word.
    ProvedTrivial forged = std::get<ProvedTrivial>(c);
    forged.factors.front().exponent = -forged.factors.front().exponent;
    CHECK_FALSE(verify_certificate(forged, conj, t.presentation));
}

TEST_CASE("trefoil commutators are trivial within small budgets") {
    const Graded t("3_1");
    Budgets b;
    b.search_depth = 4;
    b.conjugator_max = 6;
    const auto reps = enumerate_representations(t.presentation, b.rep_degree_max);
    for (const auto& hw : homogeneity_words(t.algebra, t.degrees)) {
        CAPTURE(hw.vertex);
        CHECK_FALSE(hw.word.empty());
        const Certificate c = decide_trivial(hw.word, t.presentation, b, reps);
        REQUIRE(std::holds_alternative<ProvedTrivial>(c));
        CHECK(std::get<ProvedTrivial>(c).factors.size() <= 4);
        CHECK(verify_certificate(c, hw.word, t.presentation));
    }
}

TEST_CASE("trefoil grading report") {
    const Graded t("3_1");
    const GradingReport g = grade(t.diagram, t.algebra, Budgets{});
    CHECK(g.homogeneity.type_one_homogeneous);
    CHECK(g.homogeneity.verdict == Verdict::yes);
    for (const auto& v : g.homogeneity.vertices) CHECK(v.verified);
    REQUIRE(g.basis_degrees.has_value());
    CHECK(g.basis_degrees->size() == t.algebra.dimension());

    // Each arrow carries a generator, and the quiver is a doubled directed
    // triangle, so every closed walk has exponent sum divisible by three and
    // the walk degrees miss the generators. The witness shows a proper image.
    for (const auto& w : g.connected.walks) CHECK(w.degree.total_exponent() % 3 == 0);
    CHECK(g.connected.verdict == Verdict::no);
    REQUIRE(g.connected.witness.has_value());
    CHECK(g.connected.witness->satisfies(t.presentation));
    std::vector<Permutation> walk_images;
    for (const auto& w : g.connected.walks) walk_images.push_back((*g.connected.witness)(w.degree));
    const std::size_t deg = g.connected.witness->degree;
    CHECK(subgroup_order(walk_images, deg) == g.connected.walk_image_order);
    CHECK(subgroup_order(g.connected.witness->images, deg) == g.connected.image_order);
    CHECK(g.connected.walk_image_order < g.connected.image_order);
}

TEST_CASE("unknot diagrams are homogeneous and connected") {
    for (const char* name : {"unknot_1", "unknot_2"}) {
        CAPTURE(name);
        const Graded u(name);
        const GradingReport g = grade(u.diagram, u.algebra, Budgets{});
        CHECK(g.homogeneity.verdict == Verdict::yes);
        CHECK(g.connected.verdict == Verdict::yes);
    }
}

TEST_CASE("6_3 has a vertex with a nontrivial commutator") {
    const Graded s("6_3");
    const GradingReport g = grade(s.diagram, s.algebra, Budgets{});
    CHECK(g.homogeneity.verdict == Verdict::no);
    bool witnessed = false;
    for (const auto& v : g.homogeneity.vertices) {
        CHECK(v.verified == !std::holds_alternative<Inconclusive>(v.certificate));
        if (const auto* n = std::get_if<ProvedNontrivial>(&v.certificate)) {
            witnessed = true;
            CHECK(n->representation.satisfies(s.presentation));
            CHECK(n->representation(v.word.word) == n->image);
        }
    }
    CHECK(witnessed);
    CHECK_FALSE(g.basis_degrees.has_value());
}

TEST_CASE("budgets are validated") {
    Budgets b;
    CHECK_NOTHROW(b.validate());
    for (auto field : {&Budgets::rep_degree_max, &Budgets::conjugator_max, &Budgets::search_depth, &Budgets::node_max}) {
        Budgets bad;
        bad.*field = 0;
        CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    }
    Budgets big;
    big.rep_degree_max = 9;
    CHECK_THROWS_AS(big.validate(), InvalidArgument);
    Budgets negative_time;
    negative_time.seconds = -1.0;
    CHECK_THROWS_AS(negative_time.validate(), InvalidArgument);
    const Graded t("3_1");
    CHECK_THROWS_AS(decide_trivial(x(0), t.presentation, big), InvalidArgument);
    CHECK_THROWS_AS(enumerate_representations(t.presentation, 0), InvalidArgument);
}

TEST_CASE("an expired deadline yields an inconclusive answer") {
    const Graded t("5_2");
    Budgets b;
    b.seconds = 1e-9;
    const Deadline d(b.seconds);
    while (!d.expired()) {
    }
    const auto reps = enumerate_representations(t.presentation, b.rep_degree_max, d);
    CHECK_FALSE(reps.complete);
    const GroupWord w = homogeneity_words(t.algebra, t.degrees).front().word;
    const Certificate c = decide_trivial(w, t.presentation, b, RepresentationSet{{}, 6, false}, d);
    REQUIRE(std::holds_alternative<Inconclusive>(c));
    CHECK(std::get<Inconclusive>(c).reason.find("time limit") != std::string::npos);
}

TEST_CASE("commutator words vanish in the abelianization") {
    for (const auto& name : testing_support::builtin_names()) {
        CAPTURE(name);
        const Graded g(name);
        for (const auto& hw : homogeneity_words(g.algebra, g.degrees)) {
            for (std::size_t gen = 0; gen < g.presentation.generator_count; ++gen) CHECK(hw.word.exponent_sum(gen) == 0);
            CHECK(hw.word == commutator(hw.alpha_degree, hw.beta_degree));
        }
    }
    const Graded k("unknot_1");
    const auto words = homogeneity_words(k.algebra, k.degrees);
    REQUIRE(words.size() == 1);
    CHECK(words[0].word.empty());
}
