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

#ifndef KNOTALG_CLI_HPP
#define KNOTALG_CLI_HPP

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algebra.hpp"
#include "diagram.hpp"
#include "grading.hpp"
#include "json_export.hpp"
#include "properties.hpp"
#include "quiver.hpp"
#include "scalar.hpp"

namespace knotalg::cli {

enum ExitCode : int { ok = 0, validation_error = 1, check_failure = 2, inconclusive = 3 };

struct RunConfig {
    std::string command;
    std::optional<std::string> pd;
    std::optional<std::string> gauss;
    std::optional<std::string> file;
    std::optional<std::string> builtin;
    std::string field = "ratfunc";
    std::optional<std::string> q;
    std::string tau = "alpha-length";
    std::string variant = "lambda";
    Budgets budgets;
    std::string format = "json";
    std::optional<std::string> output;
    bool strict = false;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Diagram load_diagram(const RunConfig& c) {
    const int sources = (c.pd ? 1 : 0) + (c.gauss ? 1 : 0) + (c.file ? 1 : 0) + (c.builtin ? 1 : 0);
    if (sources != 1) throw InvalidArgument("give exactly one of --pd, --gauss, --file, --builtin");
    if (c.pd) return parse_pd(*c.pd);
    if (c.gauss) return parse_gauss(*c.gauss);
    if (c.builtin) return builtin(*c.builtin);
    const std::string text = read_file(*c.file);
    return text.find('X') != std::string::npos ? parse_pd(text) : parse_gauss(text);
}

inline FieldContext make_field(const std::string& spec) {
    if (spec == "rational") return FieldContext::rationals();
    if (spec == "ratfunc") return FieldContext::rational_functions();
    if (spec.rfind("fp:", 0) == 0) {
        const std::string p = spec.substr(3);
        if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos || p.size() > 18)
            throw InvalidArgument("bad prime in --field '" + spec + "'");
        return FieldContext::prime_field(std::stoull(p));
    }
    throw InvalidArgument("unknown field '" + spec + "' (rational, fp:<p>, ratfunc)");
}

inline Variant make_variant(const std::string& v) {
    if (v == "lambda") return Variant::lambda;
    if (v == "monomial") return Variant::monomial;
    throw InvalidArgument("unknown variant '" + v + "' (lambda, monomial)");
}

/// Tau file: a JSON object mapping 1-based vertex numbers to scalar literals,
/// or a JSON array listing the values in vertex order.
inline std::vector<Scalar> read_tau_file(const FieldContext& field, const std::string& path, std::size_t vertices) {
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw ParseError("tau file '" + path + "': " + e.what());
    }
    auto literal = [](const Json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return v.dump();
        throw ParseError("tau values must be strings or integers");
    };
    std::vector<std::optional<Scalar>> values(vertices);
    if (j.is_array()) {
        if (j.size() != vertices) throw InvalidArgument("tau file lists " + std::to_string(j.size()) + " values for " +
                                                        std::to_string(vertices) + " vertices");
        for (std::size_t e = 0; e < vertices; ++e) values[e] = parse_scalar(field, literal(j[e]));
    } else if (j.is_object()) {
        for (const auto& [key, v] : j.items()) {
            std::size_t e = 0;
            if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key.size() > 9 ||
                (e = std::stoul(key)) == 0 || e > vertices)
                throw InvalidArgument("tau file: bad vertex '" + key + "'");
            values[e - 1] = parse_scalar(field, literal(v));
        }
    } else {
        throw ParseError("tau file must hold a JSON object or array");
    }
    std::vector<Scalar> out;
    for (std::size_t e = 0; e < vertices; ++e) {
        if (!values[e]) throw InvalidArgument("tau file has no value for vertex " + std::to_string(e + 1));
        out.push_back(*values[e]);
    }
    return out;
}

inline TauAssignment make_tau(const RunConfig& c, const SignedQuiver& q, const FieldContext& field) {
    if (c.tau == "alpha-length") {
        Scalar base = Scalar::one(field);
        if (c.q)
            base = parse_scalar(field, *c.q);
        else if (field.kind() == FieldKind::rational_functions)
            base = Scalar::indeterminate(field);
        else
            base = Scalar::from_integer(field, 2LL);
        if (base.is_zero()) throw InvalidArgument("--q must be nonzero");
        return TauAssignment::alpha_length_power(q, base);
    }
    if (c.tau.rfind("const:", 0) == 0) return TauAssignment::constant(q.vertex_count(), parse_scalar(field, c.tau.substr(6)));
    if (c.tau.rfind("file:", 0) == 0)
        return TauAssignment::explicit_values(read_tau_file(field, c.tau.substr(5), q.vertex_count()));
    throw InvalidArgument("unknown --tau '" + c.tau + "' (alpha-length, const:<v>, file:<path>)");
}

inline DiagramAlgebra make_algebra(const RunConfig& c, const SignedQuiver& q) {
    const FieldContext field = make_field(c.field);
    return DiagramAlgebra(q, make_tau(c, q, field), make_variant(c.variant));
}

// ---------------------------------------------------------------------------
// Commands. Each writes its report to `out` and returns an exit code.

inline void require_format(const RunConfig& c, bool dot_allowed) {
    if (c.format == "json" || c.format == "text" || (dot_allowed && c.format == "dot")) return;
    throw InvalidArgument("format '" + c.format + "' is not available for " + c.command);
}

inline int cmd_parse(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    const Diagram d = load_diagram(c);
    if (c.format == "json") {
        out << to_json(d).dump(2) << '\n';
        return ok;
    }
    out << "crossings: " << d.crossing_count() << '\n';
    out << "segments: " << d.segment_count() << '\n';
    out << "arcs: " << d.arcs().size() << '\n';
    out << "gauss: " << d.gauss_code() << '\n';
    std::string signs;
    for (const Crossing& x : d.crossings()) signs += sign_char(x.sign);
    out << "signs: " << signs << '\n';
    out << "planarity verified: " << (d.planarity_verified() ? "yes" : "no") << '\n';
    for (const auto& w : d.warnings()) out << "warning: " << w << '\n';
    return ok;
}

inline int cmd_quiver(const RunConfig& c, std::ostream& out) {
    require_format(c, true);
    const SignedQuiver q(load_diagram(c));
    if (c.format == "dot") {
        out << q.to_dot();
    } else if (c.format == "json") {
        out << to_json(q).dump(2) << '\n';
    } else {
        out << "vertices: " << q.vertex_count() << '\n' << "arrows: " << q.arrow_count() << '\n';
        for (const SignedArrow& a : q.arrows())
            out << "a" << a.id + 1 << ": " << a.source + 1 << end_sign_char(a.source_sign) << " -> " << a.target + 1
                << end_sign_char(a.target_sign) << '\n';
        for (VertexId e = 0; e < q.vertex_count(); ++e)
            out << "vertex " << e + 1 << ": alpha length " << q.alpha(e).length << ", beta length "
                << q.beta(e).length << '\n';
    }
    return ok;
}

inline int cmd_algebra(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    const SignedQuiver q(load_diagram(c));
    const DiagramAlgebra A = make_algebra(c, q);
    if (c.format == "json") {
        out << to_json(A).dump(2) << '\n';
        return ok;
    }
    const auto series = radical_series(A);
    out << "variant: " << to_string(A.variant()) << '\n';
    out << "field: " << A.field().name() << '\n';
    out << "dimension: " << A.dimension() << '\n';
    out << "radical series:";
    for (auto s : series) out << ' ' << s;
    out << "\nloewy length: " << loewy_length(series) << '\n';
    out << "socle dimension: " << socle_dimension(A) << '\n';
    out << "cartan matrix:\n";
    for (const auto& row : cartan_matrix(A)) {
        out << ' ';
        for (auto x : row) out << ' ' << x;
        out << '\n';
    }
    for (VertexId e = 0; e < A.tau().size(); ++e) out << "tau(" << e + 1 << ") = " << A.tau()(e).to_string() << '\n';
    return ok;
}

inline int cmd_check(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    const SignedQuiver q(load_diagram(c));
    const DiagramAlgebra A = make_algebra(c, q);
    const BiserialReport biserial = check_special_biserial(q, relations(q, A.tau(), A.variant()));
    const AdmissibilityReport admissible = verify_admissible(A);
    const BasicnessReport basic = check_basic(A);
    std::optional<FrobeniusData> form;
    std::optional<FrobeniusReport> frob;
    std::optional<std::vector<VertexId>> nakayama;
    if (A.variant() == Variant::lambda) {
        form = frobenius_form(A);
        frob = check_frobenius(A, *form);
        if (frob->pass()) nakayama = nakayama_permutation(A, *form);
    }
    const bool pass = biserial.pass() && admissible.pass && basic.pass && (!frob || frob->pass());

    if (c.format == "json") {
        Json j = json_header("check");
        j["pass"] = pass;
        j["variant"] = to_string(A.variant());
        j["field"] = A.field().name();
        j["special_biserial"] = to_json(biserial);
        j["admissible"] = to_json(admissible);
        j["basic"] = to_json(basic);
        j["frobenius"] = frob ? to_json(A, *form, *frob) : Json(nullptr);
        if (nakayama) {
            Json nu = Json::array();
            for (VertexId v : *nakayama) nu.push_back(v + 1);
            j["nakayama_permutation"] = std::move(nu);
        } else {
            j["nakayama_permutation"] = nullptr;
        }
        out << j.dump(2) << '\n';
    } else {
        auto mark = [](bool b) { return b ? "pass" : "FAIL"; };
        out << "special biserial: " << mark(biserial.pass()) << '\n';
        if (biserial.witness) out << "  witness: " << biserial.witness->description << '\n';
        out << "admissible: " << mark(admissible.pass) << '\n';
        out << "basic: " << mark(basic.pass) << '\n';
        if (frob) {
            out << "frobenius: " << mark(frob->pass()) << " (" << frob->triples_checked << " triples)\n";
            if (frob->witness) out << "  witness: " << *frob->witness << '\n';
        } else {
            out << "frobenius: not applicable to the monomial variant\n";
        }
        if (nakayama) {
            out << "nakayama permutation:";
            for (VertexId v : *nakayama) out << ' ' << v + 1;
            out << '\n';
        }
        out << "overall: " << mark(pass) << '\n';
    }
    return pass ? ok : check_failure;
}

inline int cmd_grading(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    const Diagram d = load_diagram(c);
    const SignedQuiver q(d);
    const DiagramAlgebra A = make_algebra(c, q);
    const GradingReport g = grade(d, A, c.budgets);
    if (c.format == "json") {
        out << to_json(g).dump(2) << '\n';
    } else {
        out << "generators: " << g.presentation.generator_count << '\n';
        for (const auto& r : g.presentation.relations)
            out << "relator " << r.crossing + 1 << " (" << sign_char(r.sign) << "): " << r.relator.to_string() << '\n';
        out << "homogeneity: " << homogeneity_verdict_name(g.homogeneity.verdict) << " ("
            << g.homogeneity.representations << " representations tested)\n";
        for (const auto& v : g.homogeneity.vertices)
            out << "  vertex " << v.word.vertex + 1 << ": " << certificate_kind(v.certificate)
                << (v.verified ? " (verified)" : "") << '\n';
        out << "connectedness: " << connected_verdict_name(g.connected.verdict) << '\n';
    }
    const bool undecided =
        g.homogeneity.verdict == Verdict::inconclusive || g.connected.verdict == Verdict::inconclusive;
    return c.strict && undecided ? inconclusive : ok;
}

inline int cmd_table(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    Json rows = Json::array();
    for (const auto& e : builtin_table()) {
        const Diagram d = parse_pd(e.pd);
        rows.push_back({{"name", std::string(e.name)},
                        {"crossings", d.crossing_count()},
                        {"arrows", d.segment_count()},
                        {"pd", std::string(e.pd)}});
    }
    if (c.format == "json") {
        Json j = json_header("table");
        j["builtins"] = std::move(rows);
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : rows)
            out << r["name"].get<std::string>() << "  c=" << r["crossings"].get<std::size_t>()
                << "  n=" << r["arrows"].get<std::size_t>() << '\n';
    }
    return ok;
}

inline int dispatch(const RunConfig& c, std::ostream& out) {
    if (c.command == "parse") return cmd_parse(c, out);
    if (c.command == "quiver") return cmd_quiver(c, out);
    if (c.command == "algebra") return cmd_algebra(c, out);
    if (c.command == "check") return cmd_check(c, out);
    if (c.command == "grading") return cmd_grading(c, out);
    if (c.command == "table") return cmd_table(c, out);
    throw InvalidArgument("unknown command '" + c.command + "'");
}

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Path algebras of knot diagrams", "knotalg"};
    app.require_subcommand(1, 1);

    struct Spec {
        const char* name;
        const char* help;
        bool input;
        bool algebra;
        bool grading;
    };
    const Spec specs[] = {
        {"parse", "Parse a diagram and report its crossings, arcs and signs", true, false, false},
        {"quiver", "Build the signed quiver (json, text or dot)", true, false, false},
        {"algebra", "Build the algebra: basis, Cartan matrix, radical series, tau", true, true, false},
        {"check", "Special biserial, Frobenius, admissibility and basicness checks", true, true, false},
        {"grading", "Wirtinger presentation, homogeneity and connectedness", true, true, true},
        {"table", "List the builtin diagrams", false, false, false},
    };
    for (const Spec& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        if (s.input) {
            sub->add_option("--pd", c.pd, "PD code, e.g. \"X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)\"");
            sub->add_option("--gauss", c.gauss, "Gauss code, e.g. \"O1-U2-O3-U1-O2-U3-\"");
            sub->add_option("--file", c.file, "File holding a PD or Gauss code");
            sub->add_option("--builtin", c.builtin, "Name of a builtin diagram (see `table`)");
        }
        if (s.algebra) {
            sub->add_option("--field", c.field, "rational | fp:<p> | ratfunc")->capture_default_str();
            sub->add_option("--q", c.q, "Base of the alpha-length tau (default 2, or the indeterminate for ratfunc)");
            sub->add_option("--tau", c.tau, "alpha-length | const:<v> | file:<path>")->capture_default_str();
            sub->add_option("--variant", c.variant, "lambda | monomial")->capture_default_str();
        }
        if (s.grading) {
            sub->add_option("--rep-degree-max", c.budgets.rep_degree_max, "Largest symmetric group degree N")
                ->capture_default_str();
            sub->add_option("--search-depth", c.budgets.search_depth, "Most relator conjugates B")
                ->capture_default_str();
            sub->add_option("--conjugator-max", c.budgets.conjugator_max, "Longest conjugator L")
                ->capture_default_str();
            sub->add_option("--node-max", c.budgets.node_max, "States generated per YES-search")
                ->capture_default_str();
            sub->add_flag("--strict", c.strict, "Exit with 3 when a verdict is inconclusive");
        }
        sub->add_option("--format", c.format, "json | text" + std::string(s.name == std::string("quiver") ? " | dot" : ""))
            ->capture_default_str();
        sub->add_option("--output", c.output, "Write the report to this file");
        sub->callback([&c, name = std::string(s.name)] { c.command = name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return validation_error;
    }

    try {
        const Budgets env = Budgets::from_environment();
        c.budgets.seconds = env.seconds;
        c.budgets.validate();
        if (c.output) {
            std::ostringstream buffer;
            const int code = dispatch(c, buffer);
            std::ofstream file(*c.output);
            if (!file) throw InvalidArgument("cannot write '" + *c.output + "'");
            file << buffer.str();
            return code;
        }
        return dispatch(c, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return validation_error;
    }
}

}  // namespace knotalg::cli

#endif
