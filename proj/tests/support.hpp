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


// Helpers shared by the test executables.

#ifndef KNOTALG_TESTS_SUPPORT_HPP
#define KNOTALG_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "knotalg/algebra.hpp"
#include "knotalg/diagram.hpp"
#include "knotalg/quiver.hpp"
#include "oracle/quotient_oracle.hpp"

namespace testing_support {

using namespace knotalg;

inline std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& e : builtin_table()) out.emplace_back(e.name);
    return out;
}

/// The three fields the suite runs over, each with its tau base q.
struct FieldCase {
    std::string label;
    FieldContext field;
    Scalar q;
};

inline std::vector<FieldCase> field_cases() {
    const FieldContext r = FieldContext::rationals();
    const FieldContext f5 = FieldContext::prime_field(5);
    const FieldContext rf = FieldContext::rational_functions();
    return {{"rational q=2", r, Scalar::from_integer(r, 2LL)},
            {"F5 q=2", f5, Scalar::from_integer(f5, 2LL)},
            {"ratfunc q", rf, Scalar::indeterminate(rf)}};
}

inline DiagramAlgebra make_algebra(const SignedQuiver& q, const FieldCase& f, Variant v) {
    return DiagramAlgebra(q, TauAssignment::alpha_length_power(q, f.q), v);
}

inline oracle::QuotientOracle make_oracle(const SignedQuiver& q, const TauAssignment& tau, Variant v) {
    std::vector<oracle::RawArrow> raw;
    for (const SignedArrow& a : q.arrows())
        raw.push_back({a.source, a.target, a.source_sign == EndSign::plus, a.target_sign == EndSign::plus});
    return oracle::QuotientOracle(q.vertex_count(), std::move(raw), tau.values(), v == Variant::monomial);
}

/// Arrows of a positive-length basis element, first arrow first.
inline oracle::Path basis_arrows(const DiagramAlgebra& A, std::size_t i) {
    const BasisPath& b = A.basis(i);
    const SignedQuiver& q = A.quiver();
    const std::size_t len = A.length(i);
    oracle::Path p;
    const ArrowId first = b.kind == BasisPath::Kind::cycle_plus ? q.outgoing(b.id, EndSign::plus) : b.id;
    for (std::size_t k = 0; k < len; ++k) p.push_back(q.advance(first, k));
    return p;
}

/// Compares every structure constant of A with the oracle. Returns an empty
/// string on agreement, else a description of the first mismatch.
inline std::string compare_with_oracle(const DiagramAlgebra& A, const oracle::QuotientOracle& o) {
    const std::size_t d = A.dimension();
    std::vector<std::map<oracle::Path, Scalar>> image(d);
    for (std::size_t i = 0; i < d; ++i)
        if (A.length(i) > 0) image[i] = o.normal_form(basis_arrows(A, i));
    for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
            const auto got = A.multiply_basis(x, y);
            std::map<oracle::Path, Scalar> expected;
            bool expected_vertex = false;
            const bool meet = A.target(y) == A.source(x);
            if (meet) {
                if (A.length(x) == 0 && A.length(y) == 0) {
                    expected_vertex = true;
                } else if (A.length(x) == 0) {
                    expected = image[y];
                } else if (A.length(y) == 0) {
                    expected = image[x];
                } else {
                    oracle::Path p = basis_arrows(A, y);
                    const oracle::Path px = basis_arrows(A, x);
                    p.insert(p.end(), px.begin(), px.end());
                    expected = o.normal_form(p);
                }
            }
            std::map<oracle::Path, Scalar> actual;
            bool actual_vertex = false;
            if (got) {
                if (A.length(got->index) == 0) {
                    actual_vertex = got->index == x && got->coefficient.is_one();
                    if (!actual_vertex) return "vertex product mismatch at " + A.describe(x) + "*" + A.describe(y);
                } else {
                    for (const auto& [path, c] : image[got->index]) actual.emplace(path, c * got->coefficient);
                }
            }
            if (expected_vertex != actual_vertex || expected != actual)
                return "product " + A.describe(x) + " * " + A.describe(y) + " disagrees with the oracle";
        }
    }
    return {};
}

/// Signed-quiver isomorphism. An isomorphism preserves the follow-successor
/// cycle, so it is a rotation of that cycle; each rotation is tried.
inline bool signed_isomorphic(const SignedQuiver& a, const SignedQuiver& b) {
    const std::size_t n = a.arrow_count();
    if (n != b.arrow_count() || a.vertex_count() != b.vertex_count()) return false;
    for (std::size_t shift = 0; shift < n; ++shift) {
        std::vector<std::size_t> vmap(a.vertex_count(), n);
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
            const SignedArrow& x = a.arrow(a.advance(0, k));
            const SignedArrow& y = b.arrow(b.advance(0, k + shift));
            ok = x.source_sign == y.source_sign && x.target_sign == y.target_sign;
            for (auto [u, v] : {std::pair{x.source, y.source}, std::pair{x.target, y.target}}) {
                if (vmap[u] == n) vmap[u] = v;
                ok = ok && vmap[u] == v;
            }
        }
        if (ok) {
            std::vector<bool> hit(a.vertex_count(), false);
            for (auto v : vmap) {
                if (v == n || hit[v]) ok = false;
                else hit[v] = true;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace testing_support

#endif
