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

// JSON reports. Every document carries "schema": 1 and a "kind" tag; ids
// shown to users are 1-based. ordered_json keeps the key order fixed so the
// output is byte-for-byte reproducible.

#ifndef KNOTALG_JSON_EXPORT_HPP
#define KNOTALG_JSON_EXPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "diagram.hpp"
#include "grading.hpp"
#include "properties.hpp"
#include "quiver.hpp"

namespace knotalg {

using Json = nlohmann::ordered_json;

inline constexpr int json_schema_version = 1;

inline Json json_header(const char* kind) {
    Json j;
    j["schema"] = json_schema_version;
    j["kind"] = kind;
    return j;
}

inline Json to_json(const Diagram& d) {
    Json j = json_header("diagram");
    j["source"] = d.source();
    j["format"] = d.format() == InputFormat::pd ? "pd" : "gauss";
    j["crossing_count"] = d.crossing_count();
    j["segment_count"] = d.segment_count();
    j["gauss_code"] = d.gauss_code();
    int writhe = 0;
    Json crossings = Json::array();
    for (const Crossing& x : d.crossings()) {
        writhe += x.sign == Sign::positive ? 1 : -1;
        crossings.push_back({{"id", x.id + 1},
                             {"label", x.label},
                             {"sign", std::string(1, sign_char(x.sign))},
                             {"over_in", x.over_in + 1},
                             {"over_out", x.over_out + 1},
                             {"under_in", x.under_in + 1},
                             {"under_out", x.under_out + 1}});
    }
    j["writhe"] = writhe;
    j["crossings"] = std::move(crossings);
    Json arcs = Json::array();
    for (const Arc& a : d.arcs()) {
        Json segs = Json::array();
        for (SegmentId s : a.segments) segs.push_back(s + 1);
        arcs.push_back({{"id", a.id + 1}, {"segments", std::move(segs)}});
    }
    j["arcs"] = std::move(arcs);
    j["planarity_verified"] = d.planarity_verified();
    j["warnings"] = d.warnings();
    return j;
}

inline Json to_json(const SignedQuiver& q) {
    Json j = json_header("quiver");
    j["vertex_count"] = q.vertex_count();
    j["arrow_count"] = q.arrow_count();
    Json arrows = Json::array();
    for (const SignedArrow& a : q.arrows()) {
        arrows.push_back({{"id", a.id + 1},
                          {"source", a.source + 1},
                          {"source_sign", std::string(1, end_sign_char(a.source_sign))},
                          {"target", a.target + 1},
                          {"target_sign", std::string(1, end_sign_char(a.target_sign))},
                          {"arc", a.arc + 1},
                          {"successor", q.successor(a.id) + 1}});
    }
    j["arrows"] = std::move(arrows);
    Json cycles = Json::array();
    for (VertexId e = 0; e < q.vertex_count(); ++e) {
        const FollowPath a = q.alpha(e);
        const FollowPath b = q.beta(e);
        cycles.push_back({{"vertex", e + 1},
                          {"alpha", {{"first", a.first + 1}, {"length", a.length}}},
                          {"beta", {{"first", b.first + 1}, {"length", b.length}}}});
    }
    j["fundamental_paths"] = std::move(cycles);
    return j;
}

inline Json tau_json(const TauAssignment& tau) {
    Json values = Json::array();
    for (VertexId e = 0; e < tau.size(); ++e) values.push_back({{"vertex", e + 1}, {"value", tau(e).to_string()}});
    return {{"mode", to_string(tau.mode())}, {"values", std::move(values)}};
}

inline Json to_json(const DiagramAlgebra& A) {
    Json j = json_header("algebra");
    j["variant"] = to_string(A.variant());
    j["field"] = A.field().name();
    j["tau"] = tau_json(A.tau());
    j["dimension"] = A.dimension();
    Json basis = Json::array();
    for (std::size_t i = 0; i < A.dimension(); ++i) {
        basis.push_back({{"index", i + 1},
                         {"name", A.describe(i)},
                         {"source", A.source(i) + 1},
                         {"target", A.target(i) + 1},
                         {"length", A.length(i)}});
    }
    j["basis"] = std::move(basis);
    j["cartan_matrix"] = cartan_matrix(A);
    const auto series = radical_series(A);
    j["radical_series"] = series;
    j["loewy_length"] = loewy_length(series);
    j["socle_dimension"] = socle_dimension(A);
    const RelationSet rs = relations(A.quiver(), A.tau(), A.variant());
    Json rel;
    Json one = Json::array();
    for (const auto& m : rs.type_one) {
        std::string s;
        for (ArrowId a : m) s += (s.empty() ? "a" : ".a") + std::to_string(a + 1);
        one.push_back(s);
    }
    rel["type_one"] = std::move(one);
    Json two = Json::array();
    for (const auto& b : rs.type_two) {
        two.push_back({{"vertex", b.vertex + 1},
                       {"alpha", {{"first", b.alpha.first + 1}, {"length", b.alpha.length}}},
                       {"beta", {{"first", b.beta.first + 1}, {"length", b.beta.length}}},
                       {"tau", b.tau.to_string()}});
    }
    rel["type_two"] = std::move(two);
    if (rs.all_paths_of_length) rel["all_paths_of_length"] = *rs.all_paths_of_length;
    j["relations"] = std::move(rel);
    return j;
}

inline Json to_json(const BiserialReport& r) {
    Json j;
    j["pass"] = r.pass();
    j["condition1"] = r.condition1;
    j["condition2"] = r.condition2;
    j["condition3"] = r.condition3;
    if (r.witness)
        j["witness"] = {{"condition", r.witness->condition}, {"description", r.witness->description}};
    else
        j["witness"] = nullptr;
    return j;
}

inline Json to_json(const DiagramAlgebra& A, const FrobeniusData& f, const FrobeniusReport& r) {
    Json j;
    j["pass"] = r.pass();
    j["bijective"] = r.bijective;
    j["nondegenerate"] = r.nondegenerate;
    j["associative"] = r.associative;
    j["triples_checked"] = r.triples_checked;
    j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    Json pairing = Json::array();
    for (std::size_t i = 0; i < f.partner.size(); ++i) {
        pairing.push_back({{"element", A.describe(i)},
                           {"partner", A.describe(f.partner[i])},
                           {"coefficient", f.coefficient[i].to_string()}});
    }
    j["gram_pairing"] = std::move(pairing);
    return j;
}

inline Json to_json(const AdmissibilityReport& r) {
    return {{"pass", r.pass},
            {"min_generator_length", r.min_generator_length},
            {"nilpotency_length", r.nilpotency_length},
            {"paths_checked", r.paths_checked},
            {"failures", r.failures}};
}

inline Json to_json(const BasicnessReport& r) {
    return {{"pass", r.pass},
            {"semisimple_quotient_dimension", r.semisimple_quotient_dimension},
            {"vertex_count", r.vertex_count},
            {"radical_series", r.radical_series},
            {"radical_nilpotent", r.radical_nilpotent},
            {"socle_layer_matches", r.socle_layer_matches},
            {"top_is_product_of_fields", r.top_is_product_of_fields}};
}

inline Json to_json(const Budgets& b) {
    Json j = {{"rep_degree_max", b.rep_degree_max},
              {"conjugator_max", b.conjugator_max},
              {"search_depth", b.search_depth},
              {"node_max", b.node_max}};
    j["seconds"] = b.seconds ? Json(*b.seconds) : Json(nullptr);
    return j;
}

inline Json to_json(const Representation& r) {
    Json images = Json::array();
    for (const Permutation& p : r.images) images.push_back(p.to_string());
    return {{"degree", r.degree}, {"images", std::move(images)}};
}

inline Json to_json(const Certificate& c) {
    Json j;
    j["kind"] = certificate_kind(c);
    if (const auto* t = std::get_if<ProvedTrivial>(&c)) {
        Json factors = Json::array();
        for (const auto& f : t->factors)
            factors.push_back(
                {{"conjugator", f.conjugator.to_string()}, {"relator", f.relator + 1}, {"exponent", f.exponent}});
        j["factors"] = std::move(factors);
    } else if (const auto* n = std::get_if<ProvedNontrivial>(&c)) {
        j["representation"] = to_json(n->representation);
        j["image"] = n->image.to_string();
    } else {
        j["reason"] = std::get<Inconclusive>(c).reason;
    }
    return j;
}

inline Json to_json(const GradingReport& g) {
    Json j = json_header("grading");
    Json pres;
    pres["generators"] = g.presentation.generator_count;
    Json rels = Json::array();
    for (const auto& r : g.presentation.relations) {
        rels.push_back({{"crossing", r.crossing + 1},
                        {"sign", std::string(1, sign_char(r.sign))},
                        {"over", r.over + 1},
                        {"incoming", r.incoming + 1},
                        {"outgoing", r.outgoing + 1},
                        {"relator", r.relator.to_string()}});
    }
    pres["relators"] = std::move(rels);
    j["presentation"] = std::move(pres);
    Json degrees = Json::array();
    for (std::size_t a = 0; a < g.degrees.arrow.size(); ++a)
        degrees.push_back({{"arrow", a + 1}, {"degree", g.degrees.arrow[a].to_string()}});
    j["arrow_degrees"] = std::move(degrees);
    j["budgets"] = to_json(g.budgets);

    Json hom;
    hom["verdict"] = homogeneity_verdict_name(g.homogeneity.verdict);
    hom["type_one_homogeneous"] = g.homogeneity.type_one_homogeneous;
    hom["representations_tested"] = g.homogeneity.representations;
    hom["enumeration_complete"] = g.homogeneity.enumeration_complete;
    Json vertices = Json::array();
    for (const auto& v : g.homogeneity.vertices) {
        vertices.push_back({{"vertex", v.word.vertex + 1},
                            {"alpha_degree", v.word.alpha_degree.to_string()},
                            {"beta_degree", v.word.beta_degree.to_string()},
                            {"commutator", v.word.word.to_string()},
                            {"certificate", to_json(v.certificate)},
                            {"verified", v.verified}});
    }
    hom["vertices"] = std::move(vertices);
    j["homogeneity"] = std::move(hom);

    Json con;
    con["verdict"] = connected_verdict_name(g.connected.verdict);
    con["base_vertex"] = g.connected.base + 1;
    Json walks = Json::array();
    for (const auto& w : g.connected.walks) {
        std::string steps;
        for (const auto& s : w.steps) {
            if (!steps.empty()) steps += ' ';
            steps += "a" + std::to_string(s.arrow + 1) + (s.forward ? "" : "^-1");
        }
        walks.push_back({{"closing_arrow", w.arrow + 1}, {"steps", steps}, {"degree", w.degree.to_string()}});
    }
    con["walks"] = std::move(walks);
    Json reached = Json::array();
    for (auto g_id : g.connected.reached) reached.push_back("x" + std::to_string(g_id + 1));
    con["generators_reached"] = std::move(reached);
    if (g.connected.witness) {
        con["witness"] = {{"representation", to_json(*g.connected.witness)},
                          {"image_order", g.connected.image_order},
                          {"walk_image_order", g.connected.walk_image_order}};
    } else {
        con["witness"] = nullptr;
    }
    j["connected"] = std::move(con);
    if (g.basis_degrees) {
        Json bd = Json::array();
        for (const auto& w : *g.basis_degrees) bd.push_back(w.to_string());
        j["basis_degrees"] = std::move(bd);
    } else {
        j["basis_degrees"] = nullptr;
    }
    return j;
}

}  // namespace knotalg

#endif
